#include "magrep/corep.hpp"

#include <algorithm>
#include <cmath>

#include "magrep/error.hpp"

namespace magrep {

char to_char(WignerType t) {
  switch (t) {
    case WignerType::a: return 'a';
    case WignerType::b: return 'b';
    case WignerType::c: return 'c';
  }
  return '?';
}

Corepresentation::Corepresentation(FactorSystemPtr fs, std::vector<CMatrix> matrices, std::string label,
                                   bool irreducible, std::optional<WignerType> wigner_type)
    : fs_(std::move(fs)),
      matrices_(std::move(matrices)),
      label_(std::move(label)),
      irreducible_(irreducible),
      wigner_type_(wigner_type) {
  if (matrices_.size() != fs_->group().order())
    throw Error(ErrorKind::DimensionMismatch, "corep " + label_ + " needs one matrix per group element");
  const Eigen::Index d = matrices_.front().rows();
  if (d == 0) throw Error(ErrorKind::DimensionMismatch, "corep " + label_ + " has dimension 0");
  for (const auto& m : matrices_)
    if (m.rows() != d || m.cols() != d)
      throw Error(ErrorKind::DimensionMismatch, "corep " + label_ + " has ragged matrices");
}

Corepresentation Corepresentation::relabeled(std::string label) const {
  Corepresentation out = *this;
  out.label_ = std::move(label);
  return out;
}

Corepresentation Corepresentation::change_basis(const CMatrix& u) const {
  std::vector<CMatrix> m;
  m.reserve(matrices_.size());
  for (ElementId a = 0; a < matrices_.size(); ++a)
    m.push_back(u.adjoint() * matrices_[a] * bracket(u, group().antiunitary(a)));
  return Corepresentation(fs_, std::move(m), label_, irreducible_, wigner_type_);
}

Operator Corepresentation::wigner_operator(ElementId a) const { return {matrices_.at(a), group().antiunitary(a)}; }

CorepReport verify_corep(const Corepresentation& d, std::optional<double> tolerance) {
  const FactorSystem& fs = d.factor_system();
  const MagneticGroup& g = fs.group();
  const double tol = tolerance.value_or(fs.tolerance());
  CorepReport rep;
  for (ElementId a = 0; a < g.order(); ++a) {
    rep.max_unitarity_defect = std::max(rep.max_unitarity_defect, unitarity_defect(d.matrix(a)));
    for (ElementId b = 0; b < g.order(); ++b) {
      const ElementId ab = g.product(a, b);
      const CMatrix lhs = d.matrix(a) * bracket(d.matrix(b), g.antiunitary(a));
      const double r = max_abs(lhs - bracket(fs(a, b), g.antiunitary(ab)) * d.matrix(ab));
      if (r > rep.max_product_residual) {
        rep.max_product_residual = r;
        rep.worst_a = a;
        rep.worst_b = b;
      }
    }
  }
  rep.identity_defect = max_abs(d.matrix(g.identity()) - CMatrix::Identity(d.dimension(), d.dimension()));
  rep.passed = rep.max_product_residual <= tol && rep.max_unitarity_defect <= tol && rep.identity_defect <= tol;
  return rep;
}

WignerRealization::WignerRealization(const Corepresentation& d)
    : matrices_(d.matrices()), antiunitary_(d.group().antiunitary_flags()) {}

WignerRealization::WignerRealization(std::vector<CMatrix> matrices, std::vector<bool> antiunitary)
    : matrices_(std::move(matrices)), antiunitary_(std::move(antiunitary)) {
  if (matrices_.empty() || matrices_.size() != antiunitary_.size())
    throw Error(ErrorKind::DimensionMismatch, "Wigner realization needs one matrix and flag per element");
}

CVector apply_wigner_operator(const WignerRealization& w, ElementId a, const CVector& v) {
  if (static_cast<std::size_t>(v.size()) != w.dimension())
    throw Error(ErrorKind::DimensionMismatch, "vector length differs from the representation space");
  return w.op(a).apply(v);
}

double wigner_composition_residual(const WignerRealization& w, const FactorSystem& fs,
                                   const std::vector<CVector>& probes) {
  const MagneticGroup& g = fs.group();
  double worst = 0.0;
  for (ElementId a = 0; a < g.order(); ++a)
    for (ElementId b = 0; b < g.order(); ++b) {
      const ElementId ab = g.product(a, b);
      const cplx phase = bracket(fs(a, b), g.antiunitary(ab));
      for (const auto& v : probes) {
        const CVector lhs = apply_wigner_operator(w, a, apply_wigner_operator(w, b, v));
        const CVector rhs = phase * apply_wigner_operator(w, ab, v);
        worst = std::max(worst, max_abs(lhs - rhs));
      }
    }
  return worst;
}

CVector project_state(const WignerRealization& w, const Corepresentation& target, std::size_t m,
                      std::size_t m0, const CVector& v) {
  if (target.group().order() != w.order())
    throw Error(ErrorKind::GroupMismatch, "target corep and space use different groups");
  if (m >= target.dimension() || m0 >= target.dimension())
    throw Error(ErrorKind::IndexOutOfRange, "projection index outside the target corep");
  CVector out = CVector::Zero(v.size());
  for (ElementId a = 0; a < w.order(); ++a)
    out += std::conj(target.matrix(a)(m, m0)) * apply_wigner_operator(w, a, v);
  return out;
}

Corepresentation kronecker(const Corepresentation& d1, const Corepresentation& d2) {
  if (!same_group(d1.group(), d2.group()))
    throw Error(ErrorKind::GroupMismatch, "Kronecker product of coreps on different groups");
  auto fs = std::make_shared<const FactorSystem>(multiply_factor_systems(d1.factor_system(), d2.factor_system()));
  std::vector<CMatrix> m;
  m.reserve(d1.matrices().size());
  for (ElementId a = 0; a < d1.matrices().size(); ++a) m.push_back(kron(d1.matrix(a), d2.matrix(a)));
  return Corepresentation(std::move(fs), std::move(m), d1.label() + "x" + d2.label(), false);
}

std::vector<CMatrix> intertwiners(const Corepresentation& d1, const Corepresentation& d2) {
  if (!same_group(d1.group(), d2.group()))
    throw Error(ErrorKind::GroupMismatch, "intertwiners between coreps on different groups");
  return twisted_intertwiners(d1.matrices(), d2.matrices(), d1.group().antiunitary_flags());
}

bool equivalent(const Corepresentation& d1, const Corepresentation& d2) {
  if (!same_group(d1.group(), d2.group())) return false;
  if (d1.dimension() != d2.dimension()) return false;
  if (!same_factor_system(d1.factor_system(), d2.factor_system(), d1.factor_system().tolerance())) return false;
  return !intertwiners(d1, d2).empty();
}

std::size_t endomorphism_dimension(const Corepresentation& d) { return intertwiners(d, d).size(); }

namespace {

/// Real dimension of the Hermitian part of span_R(basis).
std::size_t hermitian_dimension(const std::vector<CMatrix>& basis) {
  if (basis.empty()) return 0;
  const Eigen::Index d = basis.front().rows();
  RMatrix skew(2 * d * d, static_cast<Eigen::Index>(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const CMatrix s = basis[k] - basis[k].adjoint();
    skew.col(static_cast<Eigen::Index>(k)) = stack_real(Eigen::Map<const CVector>(s.data(), d * d));
  }
  return static_cast<std::size_t>(null_space(skew).cols());
}

std::size_t restricted_commutant_dimension(const Corepresentation& d) {
  const MagneticGroup& g = d.group();
  const Eigen::Index n = static_cast<Eigen::Index>(d.dimension());
  const CMatrix id = CMatrix::Identity(n, n);
  CMatrix system(n * n * static_cast<Eigen::Index>(g.unitary_subgroup().size()), n * n);
  Eigen::Index row = 0;
  for (ElementId u : g.unitary_subgroup()) {
    system.middleRows(row, n * n) = kron(id, d.matrix(u)) - kron(d.matrix(u).transpose(), id);
    row += n * n;
  }
  return static_cast<std::size_t>(null_space(system).cols());
}

}  // namespace

bool is_irreducible(const Corepresentation& d) { return hermitian_dimension(intertwiners(d, d)) == 1; }

WignerType classify_wigner_type(const Corepresentation& d) {
  if (!d.group().has_antiunitary())
    throw Error(ErrorKind::NotIrreducible, "Wigner type needs an antiunitary coset");
  const auto end = intertwiners(d, d);
  if (hermitian_dimension(end) != 1)
    throw Error(ErrorKind::NotIrreducible, "corep " + d.label() + " is reducible");
  const std::size_t restricted = restricted_commutant_dimension(d);
  WignerType t;
  switch (restricted) {
    case 1: t = WignerType::a; break;
    case 4: t = WignerType::b; break;
    case 2: t = WignerType::c; break;
    default:
      throw Error(ErrorKind::NotIrreducible, "restriction of " + d.label() + " has commutant dimension " +
                                                 std::to_string(restricted));
  }
  // The real self-intertwiner algebra is R, H or C respectively.
  const std::size_t expected = t == WignerType::a ? 1 : (t == WignerType::b ? 4 : 2);
  if (end.size() != expected)
    throw Error(ErrorKind::NotIrreducible, "inconsistent commutant structure for " + d.label());
  return t;
}

double wigner_indicator(const Corepresentation& d) {
  const MagneticGroup& g = d.group();
  cplx sum = 0.0;
  for (ElementId a : g.antiunitary_coset()) sum += d.matrix(g.product(a, a)).trace();
  return sum.real() / static_cast<double>(g.unitary_subgroup().size());
}

}  // namespace magrep
