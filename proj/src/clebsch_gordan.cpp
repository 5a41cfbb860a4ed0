#include "magrep/clebsch_gordan.hpp"

#include <algorithm>
#include <cmath>

#include "magrep/error.hpp"

namespace magrep {

namespace {

std::array<std::string, 3> labels_of(const Corepresentation& d1, const Corepresentation& d2,
                                     const Corepresentation& d3) {
  return {d1.label(), d2.label(), d3.label()};
}

/// End(D3) basis, orthonormal for <E, F> = Re tr(E^dagger F) / d3.
std::vector<CMatrix> orthonormal_endomorphisms(const Corepresentation& d3) {
  const double d = static_cast<double>(d3.dimension());
  std::vector<CMatrix> out;
  for (CMatrix e : intertwiners(d3, d3)) {
    for (const auto& f : out) e -= ((f.adjoint() * e).trace().real() / d) * f;
    const double norm = std::sqrt((e.adjoint() * e).trace().real() / d);
    if (norm > 1e-8) out.push_back(e / norm);
  }
  return out;
}

/// Picks the representative of {K E : E in End(D3), E^dagger E = 1} that
/// maximizes the first non-degenerate functional among Re (rE)_j, Im (rE)_j,
/// where r is the first nonzero row of K.
CMatrix fix_phase(const CMatrix& k, const std::vector<CMatrix>& ends) {
  const double scale = k.cwiseAbs().maxCoeff();
  Eigen::Index row = 0;
  while (row < k.rows() && k.row(row).cwiseAbs().maxCoeff() <= 1e-8 * scale) ++row;
  if (row == k.rows()) return k;
  const CMatrix r = k.row(row);
  for (Eigen::Index j = 0; j < k.cols(); ++j)
    for (int part = 0; part < 2; ++part) {
      RVector g(static_cast<Eigen::Index>(ends.size()));
      for (std::size_t e = 0; e < ends.size(); ++e) {
        const cplx z = (r * ends[e])(0, j);
        g(static_cast<Eigen::Index>(e)) = part == 0 ? z.real() : z.imag();
      }
      const double norm = g.norm();
      if (norm <= 1e-8 * scale) continue;
      CMatrix best = CMatrix::Zero(k.cols(), k.cols());
      for (std::size_t e = 0; e < ends.size(); ++e) best += (g(static_cast<Eigen::Index>(e)) / norm) * ends[e];
      return k * best;
    }
  return k;
}

}  // namespace

CMatrix CGTable::as_matrix() const {
  CMatrix m(static_cast<Eigen::Index>(dims[0] * dims[1]), static_cast<Eigen::Index>(dims[2]));
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) m(r, c) = coefficients(r * m.cols() + c);
  return m;
}

bool factor_compatible(const FactorSystem& fs1, const FactorSystem& fs2, const FactorSystem& fs3) {
  if (!same_group(fs1.group(), fs2.group()) || !same_group(fs1.group(), fs3.group()))
    throw Error(ErrorKind::GroupMismatch, "factor systems live on different groups");
  const double tol = std::max({fs1.tolerance(), fs2.tolerance(), fs3.tolerance()});
  const std::size_t n = fs1.group().order();
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = 0; b < n; ++b)
      if (std::abs(fs3(a, b) - fs1(a, b) * fs2(a, b)) > tol) return false;
  return true;
}

CGSystem build_cg_system(const Corepresentation& d1, const Corepresentation& d2, const Corepresentation& d3,
                         bool enforce_compatibility) {
  const bool compatible = factor_compatible(d1.factor_system(), d2.factor_system(), d3.factor_system());
  if (enforce_compatibility && !compatible)
    throw Error(ErrorKind::IncompatibleFactors,
                "lambda3 differs from lambda1 * lambda2 for (" + d1.label() + ", " + d2.label() + ", " +
                    d3.label() + ")");
  const MagneticGroup& g = d1.group();
  const Eigen::Index n1 = static_cast<Eigen::Index>(d1.dimension());
  const Eigen::Index n2 = static_cast<Eigen::Index>(d2.dimension());
  const Eigen::Index n3 = static_cast<Eigen::Index>(d3.dimension());
  const Eigen::Index n = n1 * n2 * n3;

  CGSystem sys;
  sys.labels = labels_of(d1, d2, d3);
  sys.dims = {d1.dimension(), d2.dimension(), d3.dimension()};
  sys.group_order = g.order();
  sys.L = CMatrix::Zero(n, n);
  sys.A = CMatrix::Zero(n, n);
  const double pre = static_cast<double>(n3) / static_cast<double>(g.order());
  for (ElementId a = 0; a < g.order(); ++a) {
    // kron(D1, D2) rows/cols are (i1 i2)/(m1 m2); the D3 factor is appended as the last index.
    const CMatrix k12 = kron(d1.matrix(a), d2.matrix(a));
    const CMatrix k123 = kron(k12, d3.matrix(a).conjugate());
    (g.antiunitary(a) ? sys.A : sys.L) += pre * k123;
  }
  sys.realified_operator = realify(sys.L, sys.A);

  const Eigen::Index n12 = n1 * n2;
  CMatrix lin = CMatrix::Zero(n * n3 * n3, n);
  CMatrix con = CMatrix::Zero(n * n3 * n3, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index m3 = 0; m3 < n3; ++m3)
      for (Eigen::Index mp = 0; mp < n3; ++mp) {
        const Eigen::Index e = (i * n3 + m3) * n3 + mp;
        for (Eigen::Index m12 = 0; m12 < n12; ++m12) {
          lin(e, m12 * n3 + m3) += sys.L(i, m12 * n3 + mp);
          con(e, m12 * n3 + mp) += sys.A(i, m12 * n3 + m3);
        }
        if (m3 == mp) lin(e, i) -= 1.0;
      }
  sys.equations = realify(lin, con);
  sys.target_endomorphisms = endomorphism_dimension(d3);
  return sys;
}

double cg_equation_residual(const CGSystem& sys, const CVector& k) {
  return (sys.equations * stack_real(k)).cwiseAbs().maxCoeff();
}

double cg_fixed_point_residual(const CGSystem& sys, const CVector& k) {
  const double d3 = static_cast<double>(sys.dims[2]);
  const CVector image = (sys.L * k + sys.A * k.conjugate()) / d3;
  return (image - k).cwiseAbs().maxCoeff();
}

UniquenessVerdict uniqueness_test(const CGSystem& sys) {
  UniquenessVerdict v;
  const Eigen::Index n = sys.L.rows();
  const CMatrix id = CMatrix::Identity(n, n);
  v.det_plus = std::abs((sys.L + sys.A - id).determinant());
  v.det_minus = std::abs((sys.L - sys.A - id).determinant());
  const RMatrix kernel = null_space(sys.equations);
  v.kernel_dim_real = static_cast<std::size_t>(kernel.cols());
  if (kernel.cols() > 0) {
    CMatrix solutions(n, kernel.cols());
    for (Eigen::Index j = 0; j < kernel.cols(); ++j) solutions.col(j) = unstack_real(kernel.col(j));
    v.complex_rank = static_cast<std::size_t>(n - null_space(CMatrix(solutions.adjoint())).cols());
  }
  const double d3 = static_cast<double>(sys.dims[2]);
  v.fixed_point_kernel_dim = static_cast<std::size_t>(
      null_space(RMatrix(sys.realified_operator - d3 * RMatrix::Identity(2 * n, 2 * n))).cols());
  v.essentially_unique = v.complex_rank == 1;
  v.determinants_vanish = v.det_plus < kDeterminantThreshold && v.det_minus < kDeterminantThreshold;
  v.consistent = !(v.determinants_vanish && v.kernel_dim_real < 2);
  if (v.determinants_vanish)
    v.note = "both determinants vanish; kernel dimension " + std::to_string(v.kernel_dim_real) +
             (v.kernel_dim_real >= 2 ? " (not unique)" : " (contradicts the determinant test)");
  else if (v.kernel_dim_real == 0)
    v.note = "no solution";
  else
    v.note = "at most one determinant vanishes; kernel dimension " + std::to_string(v.kernel_dim_real);
  return v;
}

std::vector<CGTable> solve_cg(const Corepresentation& d1, const Corepresentation& d2,
                              const Corepresentation& d3) {
  return solve_cg(build_cg_system(d1, d2, d3), d3);
}

std::vector<CGTable> solve_cg(const CGSystem& sys, const Corepresentation& d3) {
  const RMatrix kernel = null_space(sys.equations);
  if (kernel.cols() == 0) return {};
  const Eigen::Index rows = static_cast<Eigen::Index>(sys.dims[0] * sys.dims[1]);
  const Eigen::Index cols = static_cast<Eigen::Index>(sys.dims[2]);
  const double d = static_cast<double>(cols);
  const auto ends = orthonormal_endomorphisms(d3);
  const std::size_t count = static_cast<std::size_t>(kernel.cols()) / ends.size();

  std::vector<CMatrix> candidates;
  for (Eigen::Index j = 0; j < kernel.cols(); ++j) {
    const CVector z = unstack_real(kernel.col(j));
    CMatrix m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r)
      for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = z(r * cols + c);
    candidates.push_back(std::move(m));
  }

  std::vector<CMatrix> families;
  while (families.size() < count) {
    for (auto& c : candidates)
      for (const auto& f : families) c -= f * (f.adjoint() * c);
    // Earliest compound index (row-major over (m1 m2), m3) where some candidate is significant.
    Eigen::Index best = -1;
    for (Eigen::Index idx = 0; idx < rows * cols && best < 0; ++idx) {
      double top = 1e-8;
      for (std::size_t k = 0; k < candidates.size(); ++k) {
        const double v = std::abs(candidates[k](idx / cols, idx % cols));
        if (v > top) {
          top = v;
          best = static_cast<Eigen::Index>(k);
        }
      }
    }
    if (best < 0) break;
    CMatrix f = candidates[static_cast<std::size_t>(best)];
    candidates.erase(candidates.begin() + best);
    f /= std::sqrt((f.adjoint() * f).trace().real() / d);
    families.push_back(fix_phase(f, ends));
  }

  std::vector<CGTable> out;
  for (std::size_t t = 0; t < families.size(); ++t) {
    CGTable table;
    table.labels = sys.labels;
    table.dims = sys.dims;
    table.tau = t;
    table.coefficients.resize(rows * cols);
    for (Eigen::Index r = 0; r < rows; ++r)
      for (Eigen::Index c = 0; c < cols; ++c) table.coefficients(r * cols + c) = families[t](r, c);
    out.push_back(std::move(table));
  }
  return out;
}

std::size_t multiplicity(const Corepresentation& d1, const Corepresentation& d2, const Corepresentation& d3) {
  const CGSystem sys = build_cg_system(d1, d2, d3);
  return static_cast<std::size_t>(null_space(sys.equations).cols()) / sys.target_endomorphisms;
}

OrthogonalityReport orthogonality_check(const std::vector<CGTable>& families, double tolerance) {
  OrthogonalityReport rep;
  for (const auto& f : families)
    if (f.labels != families.front().labels || f.dims != families.front().dims)
      throw Error(ErrorKind::MixedTriples, "CG tables belong to different triples");
  for (std::size_t t = 0; t < families.size(); ++t)
    for (std::size_t s = 0; s < families.size(); ++s) {
      const CMatrix overlap = families[t].as_matrix().adjoint() * families[s].as_matrix();
      const CMatrix expected =
          t == s ? CMatrix(CMatrix::Identity(overlap.rows(), overlap.cols())) : CMatrix::Zero(overlap.rows(), overlap.cols());
      const double dev = max_abs(overlap - expected);
      rep.max_residual = std::max(rep.max_residual, dev);
      if (t != s) rep.max_cross = std::max(rep.max_cross, dev);
    }
  rep.passed = rep.max_residual <= tolerance;
  return rep;
}

}  // namespace magrep
