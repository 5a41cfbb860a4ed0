#include "magrep/wigner_eckart.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "magrep/error.hpp"

namespace magrep {

namespace {

constexpr double kSelectionTolerance = 1e-10;

std::vector<CMatrix> block_diagonal(const std::vector<ModelBlock>& blocks, std::size_t order, Eigen::Index n) {
  std::vector<CMatrix> out(order, CMatrix::Zero(n, n));
  for (const auto& b : blocks) {
    const Eigen::Index d = static_cast<Eigen::Index>(b.corep.dimension());
    for (ElementId a = 0; a < order; ++a)
      for (std::size_t c = 0; c < b.copies; ++c) {
        const Eigen::Index at = static_cast<Eigen::Index>(b.offset + c * b.corep.dimension());
        out[a].block(at, at, d, d) = b.corep.matrix(a);
      }
  }
  return out;
}

std::vector<ModelBlock> with_offsets(std::vector<ModelBlock> blocks) {
  std::size_t at = 0;
  for (auto& b : blocks) {
    b.offset = at;
    at += b.copies * b.corep.dimension();
  }
  return blocks;
}

Eigen::Index total_dimension(const std::vector<ModelBlock>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.copies * b.corep.dimension();
  return static_cast<Eigen::Index>(n);
}

/// Scalar lambda(a^-1, a)^{*[T][a]} for the factor system of the source block.
cplx transform_prefactor(const FactorSystem& fs, ElementId a, bool antilinear) {
  const MagneticGroup& g = fs.group();
  return bracket(bracket(std::conj(fs(g.inverse(a), a)), antilinear), g.antiunitary(a));
}

struct BlockRange {
  Eigen::Index start;
  Eigen::Index size;
  const FactorSystem* fs;
};

std::vector<BlockRange> ranges(const ModelSpace& space) {
  std::vector<BlockRange> out;
  for (const auto& b : space.blocks())
    out.push_back({static_cast<Eigen::Index>(b.offset), static_cast<Eigen::Index>(b.copies * b.corep.dimension()),
                   &b.corep.factor_system()});
  return out;
}

/// Covariance defect of the set, restricted to rows p and columns q.
RVector covariance_defect(const ModelSpace& space, const BlockRange& p, const BlockRange& q,
                          const Corepresentation& target, const std::vector<CMatrix>& parts, bool antilinear) {
  const MagneticGroup& g = space.group();
  const std::size_t d2 = target.dimension();
  std::vector<RVector> chunks;
  Eigen::Index total = 0;
  for (ElementId a = 0; a < g.order(); ++a) {
    const bool fa = g.antiunitary(a);
    const ElementId ai = g.inverse(a);
    const CMatrix wp = space.wigner().matrix(a).block(p.start, p.start, p.size, p.size);
    const CMatrix wq = space.wigner().matrix(ai).block(q.start, q.start, q.size, q.size);
    const cplx c = transform_prefactor(*q.fs, a, antilinear);
    for (std::size_t m = 0; m < d2; ++m) {
      CMatrix r = c * wp * bracket(parts[m], fa) * bracket(wq, fa != antilinear);
      for (std::size_t n = 0; n < d2; ++n)
        r -= bracket(std::conj(target.matrix(a)(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(m))),
                     antilinear) *
             parts[n];
      chunks.push_back(stack_real(Eigen::Map<const CVector>(r.data(), r.size())));
      total += chunks.back().size();
    }
  }
  RVector out(total);
  Eigen::Index at = 0;
  for (const auto& c : chunks) {
    out.segment(at, c.size()) = c;
    at += c.size();
  }
  return out;
}

std::vector<CMatrix> unpack_parts(const RVector& x, std::size_t count, Eigen::Index rows, Eigen::Index cols) {
  const CVector z = unstack_real(x);
  std::vector<CMatrix> out;
  for (std::size_t m = 0; m < count; ++m)
    out.push_back(reshape(z.segment(static_cast<Eigen::Index>(m) * rows * cols, rows * cols), rows, cols));
  return out;
}

RVector pack_parts(const std::vector<CMatrix>& parts) {
  const Eigen::Index each = parts.front().size();
  CVector z(each * static_cast<Eigen::Index>(parts.size()));
  for (std::size_t m = 0; m < parts.size(); ++m)
    z.segment(static_cast<Eigen::Index>(m) * each, each) = Eigen::Map<const CVector>(parts[m].data(), each);
  return stack_real(z);
}

/// Row-major (compound order) flattening of a matrix.
CVector flatten_rows(const CMatrix& m) {
  CVector v(m.size());
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) v(r * m.cols() + c) = m(r, c);
  return v;
}

char type_char(const Corepresentation& d) {
  return d.wigner_type() ? to_char(*d.wigner_type()) : to_char(classify_wigner_type(d));
}

std::array<const Corepresentation*, 3> arranged(Variant v, const Corepresentation& d1, const Corepresentation& d2,
                                                const Corepresentation& d3) {
  if (v == Variant::L) return {&d1, &d2, &d3};
  return {&d1, &d3, &d2};
}

}  // namespace

// ---- model space ----

ModelSpace::ModelSpace(GroupPtr group, std::vector<ModelBlock> blocks)
    : group_(std::move(group)),
      blocks_(with_offsets(std::move(blocks))),
      wigner_(block_diagonal(blocks_, group_->order(), total_dimension(blocks_)), group_->antiunitary_flags()) {
  for (std::size_t b = 0; b < blocks_.size(); ++b)
    for (std::size_t c = 0; c < blocks_[b].copies; ++c)
      for (std::size_t m = 0; m < blocks_[b].corep.dimension(); ++m) labels_.push_back({b, c, m});
}

std::size_t ModelSpace::index(std::size_t block, std::size_t copy, std::size_t m) const {
  const auto& b = blocks_.at(block);
  if (copy >= b.copies || m >= b.corep.dimension()) throw Error(ErrorKind::IndexOutOfRange, "basis label out of range");
  return b.offset + copy * b.corep.dimension() + m;
}

CVector ModelSpace::basis_vector(std::size_t block, std::size_t copy, std::size_t m) const {
  CVector v = CVector::Zero(static_cast<Eigen::Index>(dimension()));
  v(static_cast<Eigen::Index>(index(block, copy, m))) = 1.0;
  return v;
}

std::size_t ModelSpace::block_of(const std::string& label) const {
  for (std::size_t b = 0; b < blocks_.size(); ++b)
    if (blocks_[b].corep.label() == label) return b;
  throw Error(ErrorKind::UnknownLabel, "no block carries corep '" + label + "'");
}

const FactorSystem& ModelSpace::factor_system_at(std::size_t i) const {
  return blocks_.at(labels_.at(i).block).corep.factor_system();
}

ModelSpace build_model_space(const std::vector<std::pair<Corepresentation, std::size_t>>& blocks) {
  if (blocks.empty()) throw Error(ErrorKind::DimensionMismatch, "model space needs at least one block");
  std::vector<ModelBlock> out;
  for (const auto& [d, copies] : blocks) {
    if (!same_group(d.group(), blocks.front().first.group()))
      throw Error(ErrorKind::GroupMismatch, "model space blocks live on different groups");
    if (copies == 0) throw Error(ErrorKind::DimensionMismatch, "block with zero copies");
    out.push_back({d, copies, 0});
  }
  return ModelSpace(blocks.front().first.factor_system().group_ptr(), std::move(out));
}

// ---- tensor operators ----

Operator transform_operator(const ModelSpace& space, ElementId a, const Operator& t) {
  const MagneticGroup& g = space.group();
  const Operator oa = space.wigner().op(a);
  const Operator oai = space.wigner().op(g.inverse(a));
  Operator out = compose(compose(oa, t), oai);
  for (const auto& r : ranges(space))
    out.matrix.middleCols(r.start, r.size) *= transform_prefactor(*r.fs, a, t.antilinear);
  return out;
}

CMatrix project_tensor(const ModelSpace& space, const CMatrix& t_raw, const Corepresentation& target,
                       std::size_t m, std::size_t m0, bool antilinear) {
  const Eigen::Index n = static_cast<Eigen::Index>(space.dimension());
  if (t_raw.rows() != n || t_raw.cols() != n)
    throw Error(ErrorKind::DimensionMismatch, "tensor must be " + std::to_string(n) + " x " + std::to_string(n));
  if (m >= target.dimension() || m0 >= target.dimension())
    throw Error(ErrorKind::IndexOutOfRange, "component index out of range");
  CMatrix out = CMatrix::Zero(n, n);
  const Operator t{t_raw, antilinear};
  for (ElementId a = 0; a < space.group().order(); ++a) {
    const cplx w = bracket(target.matrix(a)(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m0)), antilinear);
    out += w * transform_operator(space, a, t).matrix;
  }
  return out;
}

ProjectedTensor project_tensor_set(const ModelSpace& space, const CMatrix& t_raw, const Corepresentation& target,
                                   std::size_t m0, bool antilinear) {
  const std::size_t d2 = target.dimension();
  ProjectedTensor out{{target, {}, antilinear}, 0.0, 0.0};
  for (std::size_t m = 0; m < d2; ++m) out.set.components.push_back(project_tensor(space, t_raw, target, m, m0, antilinear));

  for (const auto& p : ranges(space))
    for (const auto& q : ranges(space)) {
      std::vector<CMatrix> parts;
      for (const auto& c : out.set.components) parts.push_back(c.block(p.start, q.start, p.size, q.size));
      const RVector x = pack_parts(parts);
      RMatrix jac(covariance_defect(space, p, q, target, parts, antilinear).size(), x.size());
      for (Eigen::Index k = 0; k < x.size(); ++k) {
        RVector e = RVector::Zero(x.size());
        e(k) = 1.0;
        jac.col(k) = covariance_defect(space, p, q, target, unpack_parts(e, d2, p.size, q.size), antilinear);
      }
      const RMatrix basis = null_space(jac);
      const RVector y = basis * (basis.transpose() * x);
      // T maps block q to block p: lambda_p = lambda_T lambda_q, or lambda_T = lambda_p lambda_q if antilinear.
      const bool fits = antilinear ? factor_compatible(*p.fs, *q.fs, target.factor_system())
                                   : factor_compatible(target.factor_system(), *q.fs, *p.fs);
      double& corr = fits ? out.correction_compatible : out.correction_incompatible;
      corr = std::max(corr, (y - x).cwiseAbs().maxCoeff());
      const auto projected = unpack_parts(y, d2, p.size, q.size);
      for (std::size_t m = 0; m < d2; ++m) out.set.components[m].block(p.start, q.start, p.size, q.size) = projected[m];
    }
  return out;
}

double verify_tensor_covariance(const ModelSpace& space, const TensorOperatorSet& t) {
  const MagneticGroup& g = space.group();
  const std::size_t d2 = t.corep.dimension();
  if (t.components.size() != d2) throw Error(ErrorKind::DimensionMismatch, "one component per corep row required");
  double worst = 0.0;
  for (ElementId a = 0; a < g.order(); ++a)
    for (std::size_t m = 0; m < d2; ++m) {
      CMatrix r = transform_operator(space, a, t.component(m)).matrix;
      for (std::size_t n = 0; n < d2; ++n)
        r -= bracket(std::conj(t.corep.matrix(a)(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(m))),
                     t.antilinear) *
             t.components[n];
      worst = std::max(worst, max_abs(r));
    }
  return worst;
}

CompositionCheck compose_transform_check(const ModelSpace& space, const TensorOperatorSet& t, ElementId a,
                                         ElementId b) {
  const MagneticGroup& g = space.group();
  const auto& w = space.wigner();
  const ElementId ai = g.inverse(a), bi = g.inverse(b), ab = g.product(a, b), abi = g.inverse(ab);
  const bool fab = g.antiunitary(ab);
  CompositionCheck out;
  for (std::size_t m = 0; m < t.components.size(); ++m) {
    const Operator tm = t.component(m);
    const Operator nested = compose(compose(compose(compose(w.op(a), w.op(b)), tm), w.op(bi)), w.op(ai));
    const Operator single = compose(compose(w.op(ab), tm), w.op(abi));
    for (const auto& p : ranges(space))
      for (const auto& q : ranges(space)) {
        const cplx ratio = bracket((*p.fs)(a, b), fab) * bracket((*q.fs)(bi, ai), t.antilinear);
        const FactorSystem& l = *q.fs;
        const cplx printed = bracket(l(a, b), fab) * l(ai, a) * bracket(l(bi, b), g.antiunitary(a)) /
                             l(g.product(bi, ai), ab);
        const CMatrix lhs = nested.matrix.block(p.start, q.start, p.size, q.size);
        const CMatrix rhs = single.matrix.block(p.start, q.start, p.size, q.size);
        out.residual = std::max(out.residual, max_abs(lhs - ratio * rhs));
        out.printed_residual = std::max(out.printed_residual, max_abs(lhs - printed * rhs));
        out.max_ratio_deviation = std::max(out.max_ratio_deviation, std::abs(ratio - 1.0));
      }
  }
  return out;
}

cplx matrix_element(const CVector& bra, const Operator& t, const CVector& ket) {
  if (bra.size() != t.matrix.rows() || ket.size() != t.matrix.cols())
    throw Error(ErrorKind::DimensionMismatch, "state and operator sizes differ");
  return bra.dot(t.apply(ket));
}

// ---- matrix elements ----

double ElementTable::max_abs() const {
  double m = 0.0;
  for (const auto& v : values) m = std::max(m, std::abs(v));
  return m;
}

ElementTable matrix_elements(const ModelSpace& space, const TensorOperatorSet& t, std::size_t bra_block,
                             std::size_t bra_copy, std::size_t ket_block, std::size_t ket_copy) {
  const auto& b1 = space.blocks().at(bra_block).corep;
  const auto& b3 = space.blocks().at(ket_block).corep;
  ElementTable e;
  e.labels = {b1.label(), t.corep.label(), b3.label()};
  e.dims = {b1.dimension(), t.corep.dimension(), b3.dimension()};
  e.values.resize(e.dims[0] * e.dims[1] * e.dims[2]);
  for (std::size_t m1 = 0; m1 < e.dims[0]; ++m1)
    for (std::size_t m2 = 0; m2 < e.dims[1]; ++m2)
      for (std::size_t m3 = 0; m3 < e.dims[2]; ++m3)
        e.at(m1, m2, m3) = matrix_element(space.basis_vector(bra_block, bra_copy, m1), t.component(m2),
                                          space.basis_vector(ket_block, ket_copy, m3));
  return e;
}

CMatrix arrange(const ElementTable& e, Variant v) {
  const auto [d1, d2, d3] = e.dims;
  const Eigen::Index inner = static_cast<Eigen::Index>(v == Variant::L ? d2 : d3);
  const Eigen::Index cols = static_cast<Eigen::Index>(v == Variant::L ? d3 : d2);
  CMatrix out(static_cast<Eigen::Index>(d1) * inner, cols);
  for (std::size_t m1 = 0; m1 < d1; ++m1)
    for (std::size_t m2 = 0; m2 < d2; ++m2)
      for (std::size_t m3 = 0; m3 < d3; ++m3) {
        const Eigen::Index m1i = static_cast<Eigen::Index>(m1);
        if (v == Variant::L)
          out(m1i * inner + static_cast<Eigen::Index>(m2), static_cast<Eigen::Index>(m3)) = e.at(m1, m2, m3);
        else
          out(m1i * inner + static_cast<Eigen::Index>(m3), static_cast<Eigen::Index>(m2)) = e.at(m1, m2, m3);
      }
  return out;
}

ReducedMatrixElement reduced_matrix_element(Variant v, const CGTable& cg, const ElementTable& e) {
  const std::array<std::string, 3> want =
      v == Variant::L ? e.labels : std::array<std::string, 3>{e.labels[0], e.labels[2], e.labels[1]};
  const std::array<std::size_t, 3> dims =
      v == Variant::L ? e.dims : std::array<std::size_t, 3>{e.dims[0], e.dims[2], e.dims[1]};
  if (cg.labels != want || cg.dims != dims)
    throw Error(ErrorKind::TripleMismatch, "CG table does not belong to the element triple for this variant");
  const cplx value = (cg.as_matrix().adjoint() * arrange(e, v)).trace();
  return {value, v, e.labels, cg.tau};
}

WignerEckartReport verify_wigner_eckart(Variant v, const Corepresentation& d1, const Corepresentation& d2,
                                        const Corepresentation& d3, const TensorOperatorSet& t,
                                        const ModelSpace& space) {
  WignerEckartReport rep;
  rep.variant = v;
  rep.labels = {d1.label(), d2.label(), d3.label()};
  rep.wigner_types = {type_char(d1), type_char(d2), type_char(d3)};
  rep.type_b_involved = std::find(rep.wigner_types.begin(), rep.wigner_types.end(), 'b') != rep.wigner_types.end();
  if (t.corep.label() != d2.label() || t.corep.dimension() != d2.dimension())
    throw Error(ErrorKind::TripleMismatch, "tensor set does not carry corep '" + d2.label() + "'");
  const ElementTable e = matrix_elements(space, t, space.block_of(d1.label()), 0, space.block_of(d3.label()), 0);
  rep.max_element = e.max_abs();

  const auto cg = arranged(v, d1, d2, d3);
  rep.compatible = factor_compatible(cg[0]->factor_system(), cg[1]->factor_system(), cg[2]->factor_system());
  auto selection = [&](const std::string& why) {
    if (rep.max_element > kSelectionTolerance)
      throw Error(ErrorKind::SelectionRuleViolation,
                  why + " but the largest matrix element is " + std::to_string(rep.max_element));
    rep.note = why + "; all matrix elements vanish";
    rep.max_defect = rep.max_element;
    return rep;
  };
  if (!rep.compatible) return selection("factor systems incompatible");

  const CGSystem sys = build_cg_system(*cg[0], *cg[1], *cg[2]);
  const RMatrix kernel = null_space(sys.equations);
  const UniquenessVerdict verdict = uniqueness_test(sys);
  rep.kernel_dim_real = verdict.kernel_dim_real;
  rep.essentially_unique = verdict.essentially_unique;
  const auto families = solve_cg(sys, *cg[2]);
  rep.multiplicity = families.size();
  if (families.empty()) return selection("no CG coupling");

  const CMatrix ef = arrange(e, v);
  const double d = static_cast<double>(cg[2]->dimension());
  for (const auto& f : families) rep.reduced.push_back(reduced_matrix_element(v, f, e).value);
  rep.factorization_defect = max_abs(ef - (rep.reduced.front() / d) * families.front().as_matrix());
  const RVector y = stack_real(flatten_rows(ef));
  rep.span_residual = (kernel * (kernel.transpose() * y) - y).cwiseAbs().maxCoeff();
  rep.max_defect = rep.essentially_unique ? rep.factorization_defect : rep.span_residual;
  rep.note = rep.essentially_unique ? "essentially unique coupling: single-term factorization"
                                      : "coupling not unique: elements expanded over all CG solutions";
  return rep;
}

SumRuleReport sum_rule_check(const Corepresentation& d1, const Corepresentation& d2, const Corepresentation& d3,
                             const TensorOperatorSet& t, const ModelSpace& space) {
  const auto families = solve_cg(d1, d2, d3);
  if (families.empty()) throw Error(ErrorKind::EmptyCG, "no CG coupling for the triple");
  const std::size_t b1 = space.block_of(d1.label()), b3 = space.block_of(d3.label());
  const ElementTable e = matrix_elements(space, t, b1, 0, b3, 0);
  const CMatrix k = families.front().as_matrix();
  const CMatrix c = k.adjoint() * arrange(e, Variant::L);
  const Eigen::Index n3 = c.rows();
  SumRuleReport rep;
  rep.reduced = c.trace();
  const CMatrix sym = 0.5 * (c + c.adjoint());
  rep.symmetrized_residual =
      max_abs(sym - (rep.reduced / static_cast<double>(n3)) * CMatrix::Identity(n3, n3));

  // Elements between transformed states, summed separately over G and M - G.
  const MagneticGroup& g = space.group();
  ElementTable sum_u = e, sum_a = e;
  std::fill(sum_u.values.begin(), sum_u.values.end(), cplx(0.0));
  std::fill(sum_a.values.begin(), sum_a.values.end(), cplx(0.0));
  for (ElementId a = 0; a < g.order(); ++a) {
    ElementTable& acc = g.antiunitary(a) ? sum_a : sum_u;
    for (std::size_t m1 = 0; m1 < e.dims[0]; ++m1)
      for (std::size_t m2 = 0; m2 < e.dims[1]; ++m2)
        for (std::size_t m3 = 0; m3 < e.dims[2]; ++m3) {
          const CVector bra = apply_wigner_operator(space.wigner(), a, space.basis_vector(b1, 0, m1));
          const CVector ket = apply_wigner_operator(space.wigner(), a, space.basis_vector(b3, 0, m3));
          acc.at(m1, m2, m3) += matrix_element(bra, transform_operator(space, a, t.component(m2)), ket);
        }
  }
  CMatrix lhs = CMatrix::Zero(n3, n3);
  for (Eigen::Index m3 = 0; m3 < n3; ++m3)
    for (Eigen::Index mp = 0; mp < n3; ++mp)
      for (std::size_t m1 = 0; m1 < e.dims[0]; ++m1)
        for (std::size_t m2 = 0; m2 < e.dims[1]; ++m2) {
          const Eigen::Index row = static_cast<Eigen::Index>(m1 * e.dims[1] + m2);
          lhs(m3, mp) += std::conj(k(row, mp)) * sum_u.at(m1, m2, static_cast<std::size_t>(m3)) +
                         k(row, m3) * sum_a.at(m1, m2, static_cast<std::size_t>(mp));
        }
  const double scale = lhs.cwiseAbs().maxCoeff();
  rep.reality_defect = scale > 0.0 ? lhs.imag().cwiseAbs().maxCoeff() / scale : 0.0;
  return rep;
}

double transformed_element_residual(const ModelSpace& space, const TensorOperatorSet& t, std::size_t bra_block,
                                    std::size_t ket_block, ElementId a) {
  const ElementTable e = matrix_elements(space, t, bra_block, 0, ket_block, 0);
  const auto& d1 = space.blocks().at(bra_block).corep.matrix(a);
  const auto& d2 = t.corep.matrix(a);
  const auto& d3 = space.blocks().at(ket_block).corep.matrix(a);
  const bool tl = t.antilinear;
  double worst = 0.0;
  for (std::size_t m1 = 0; m1 < e.dims[0]; ++m1)
    for (std::size_t m2 = 0; m2 < e.dims[1]; ++m2)
      for (std::size_t m3 = 0; m3 < e.dims[2]; ++m3) {
        const CVector bra = apply_wigner_operator(space.wigner(), a, space.basis_vector(bra_block, 0, m1));
        const CVector ket = apply_wigner_operator(space.wigner(), a, space.basis_vector(ket_block, 0, m3));
        const cplx lhs = matrix_element(bra, transform_operator(space, a, t.component(m2)), ket);
        cplx rhs = 0.0;
        for (std::size_t n1 = 0; n1 < e.dims[0]; ++n1)
          for (std::size_t n2 = 0; n2 < e.dims[1]; ++n2)
            for (std::size_t n3 = 0; n3 < e.dims[2]; ++n3)
              rhs += e.at(n1, n2, n3) * std::conj(d1(static_cast<Eigen::Index>(n1), static_cast<Eigen::Index>(m1))) *
                     bracket(std::conj(d2(static_cast<Eigen::Index>(n2), static_cast<Eigen::Index>(m2))), tl) *
                     bracket(d3(static_cast<Eigen::Index>(n3), static_cast<Eigen::Index>(m3)), tl);
        worst = std::max(worst, std::abs(lhs - rhs));
      }
  return worst;
}

ElementTable mixed_state_expansion(const std::vector<cplx>& coeffs, const std::vector<ElementTable>& per_tau,
                                   bool antilinear) {
  if (coeffs.size() != per_tau.size() || per_tau.empty())
    throw Error(ErrorKind::LengthMismatch, "one coefficient per tau table required");
  ElementTable out = per_tau.front();
  std::fill(out.values.begin(), out.values.end(), cplx(0.0));
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (per_tau[k].dims != out.dims) throw Error(ErrorKind::LengthMismatch, "tau tables differ in shape");
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += bracket(coeffs[k], antilinear) * per_tau[k].values[i];
  }
  return out;
}

CMatrix random_matrix(Eigen::Index rows, Eigen::Index cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  CMatrix m(rows, cols);
  for (Eigen::Index c = 0; c < cols; ++c)
    for (Eigen::Index r = 0; r < rows; ++r) {
      const double re = normal(rng);
      m(r, c) = cplx(re, normal(rng));
    }
  return m;
}

}  // namespace magrep
