#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

#include "magrep/corep.hpp"
#include "magrep/error.hpp"

namespace magrep {

namespace {

using Rep = SubgroupRep;

std::vector<std::size_t> subgroup_positions(const MagneticGroup& g) {
  std::vector<std::size_t> pos(g.order(), g.order());
  for (std::size_t k = 0; k < g.unitary_subgroup().size(); ++k) pos[g.unitary_subgroup()[k]] = k;
  return pos;
}

/// Complex-linear {X : r1(u) X = X r2(u)}.
CMatrix complex_hom(const Rep& r1, const Rep& r2) {
  const Eigen::Index n1 = r1.front().rows();
  const Eigen::Index n2 = r2.front().rows();
  CMatrix system(n1 * n2 * static_cast<Eigen::Index>(r1.size()), n1 * n2);
  for (std::size_t k = 0; k < r1.size(); ++k)
    system.middleRows(n1 * n2 * static_cast<Eigen::Index>(k), n1 * n2) =
        kron(CMatrix::Identity(n2, n2), r1[k]) - kron(r2[k].transpose(), CMatrix::Identity(n1, n1));
  return null_space(system);
}

double subgroup_product_residual(const Rep& r, const FactorSystem& fs) {
  const MagneticGroup& g = fs.group();
  const auto pos = subgroup_positions(g);
  double worst = 0.0;
  for (ElementId u : g.unitary_subgroup())
    for (ElementId v : g.unitary_subgroup()) {
      const CMatrix lhs = r[pos[u]] * r[pos[v]];
      worst = std::max(worst, max_abs(lhs - fs(u, v) * r[pos[g.product(u, v)]]));
    }
  return worst;
}

/// S R S^-1 with S^2 the group average of R^dagger R.
Rep unitarize(const Rep& r) {
  const Eigen::Index n = r.front().rows();
  CMatrix gram = CMatrix::Zero(n, n);
  for (const auto& m : r) gram += m.adjoint() * m;
  gram /= static_cast<double>(r.size());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(gram);
  const CMatrix s = es.operatorSqrt();
  const CMatrix s_inv = es.operatorInverseSqrt();
  Rep out;
  out.reserve(r.size());
  for (const auto& m : r) out.push_back(s * m * s_inv);
  return out;
}

/// Induced corep on span{e_i, O_a0 e_i}: for alpha r_t = r_s h,
/// D_(s,i),(t,j)(alpha) = [lambda(alpha, r_t) / lambda(r_s, h)]^[alpha r_t] Delta_ij(h)^[r_s].
std::vector<CMatrix> induce(const Rep& delta, const FactorSystem& fs) {
  const MagneticGroup& g = fs.group();
  const auto pos = subgroup_positions(g);
  const ElementId reps[2] = {g.identity(), *g.coset_representative()};
  const Eigen::Index n = delta.front().rows();
  std::vector<CMatrix> out;
  out.reserve(g.order());
  for (ElementId alpha = 0; alpha < g.order(); ++alpha) {
    CMatrix m = CMatrix::Zero(2 * n, 2 * n);
    for (int t = 0; t < 2; ++t) {
      const ElementId x = g.product(alpha, reps[t]);
      const int s = g.antiunitary(x) ? 1 : 0;
      const ElementId h = g.product(g.inverse(reps[s]), x);
      const cplx c = bracket(fs(alpha, reps[t]) / fs(reps[s], h), g.antiunitary(x));
      m.block(s * n, t * n, n, n) = c * bracket(delta[pos[h]], s == 1);
    }
    out.push_back(std::move(m));
  }
  return out;
}

/// Hermitian elements of span_R(basis), as a basis of matrices.
std::vector<CMatrix> hermitian_part(const std::vector<CMatrix>& basis) {
  const Eigen::Index d = basis.front().rows();
  RMatrix skew(2 * d * d, static_cast<Eigen::Index>(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const CMatrix s = basis[k] - basis[k].adjoint();
    skew.col(static_cast<Eigen::Index>(k)) = stack_real(Eigen::Map<const CVector>(s.data(), d * d));
  }
  const RMatrix coeff = null_space(skew);
  std::vector<CMatrix> out;
  for (Eigen::Index j = 0; j < coeff.cols(); ++j) {
    CMatrix h = CMatrix::Zero(d, d);
    for (std::size_t k = 0; k < basis.size(); ++k) h += coeff(static_cast<Eigen::Index>(k), j) * basis[k];
    out.push_back(0.5 * (h + h.adjoint()));
  }
  return out;
}

/// Orthonormal basis of the lowest `dim` eigenvectors of a generic Hermitian
/// combination, retried until there is a clear gap after index dim - 1.
CMatrix split_eigenspace(const std::vector<CMatrix>& hermitian, Eigen::Index dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  for (int attempt = 0; attempt < 16; ++attempt) {
    CMatrix h = CMatrix::Zero(hermitian.front().rows(), hermitian.front().cols());
    for (const auto& b : hermitian) h += normal(rng) * b;
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
    const auto& w = es.eigenvalues();
    const double scale = std::max(1.0, w.cwiseAbs().maxCoeff());
    if (w(dim) - w(dim - 1) > 1e-6 * scale) return es.eigenvectors().leftCols(dim);
  }
  throw Error(ErrorKind::NotIrreducible, "could not split a reducible corep");
}

/// Makes the first non-negligible entry of D(a0) real positive via D -> V^-1 D V^[alpha], V = e^{i phi/2}.
std::vector<CMatrix> fix_gauge(std::vector<CMatrix> m, const MagneticGroup& g) {
  const CMatrix& rep = m[*g.coset_representative()];
  for (Eigen::Index k = 0; k < rep.size(); ++k) {
    const cplx z = rep.data()[k];
    if (std::abs(z) > 1e-9) {
      const cplx phase = std::polar(1.0, -std::arg(z));
      for (ElementId a : g.antiunitary_coset()) m[a] *= phase;
      break;
    }
  }
  return m;
}

}  // namespace

std::vector<Corepresentation> induce_coreps(const std::vector<SubgroupRep>& irreps_of_g,
                                            const FactorSystemPtr& fs, const std::string& label_prefix) {
  const MagneticGroup& g = fs->group();
  if (!g.has_antiunitary())
    throw Error(ErrorKind::IncompleteInput, "corep induction needs an antiunitary coset");
  const std::size_t order_g = g.unitary_subgroup().size();

  std::vector<Rep> distinct;
  for (const auto& raw : irreps_of_g) {
    if (raw.size() != order_g) throw Error(ErrorKind::NotAnIrrep, "irrep needs one matrix per element of G");
    for (const auto& m : raw)
      if (m.rows() != raw.front().rows() || m.cols() != m.rows())
        throw Error(ErrorKind::NotAnIrrep, "irrep matrices are ragged");
    Rep r = raw;
    if (std::any_of(r.begin(), r.end(), [&](const CMatrix& m) { return unitarity_defect(m) > fs->tolerance(); }))
      r = unitarize(r);
    if (subgroup_product_residual(r, *fs) > 1e3 * fs->tolerance())
      throw Error(ErrorKind::NotAnIrrep, "supplied matrices violate the product law on G");
    if (complex_hom(r, r).cols() != 1) throw Error(ErrorKind::NotAnIrrep, "supplied representation is reducible");
    const bool seen = std::any_of(distinct.begin(), distinct.end(), [&](const Rep& q) {
      return q.front().rows() == r.front().rows() && complex_hom(q, r).cols() > 0;
    });
    if (!seen) distinct.push_back(std::move(r));
  }
  std::size_t sum_sq = 0;
  for (const auto& r : distinct) sum_sq += static_cast<std::size_t>(r.front().rows() * r.front().rows());
  if (sum_sq != order_g)
    throw Error(ErrorKind::IncompleteInput, "irreps of G account for " + std::to_string(sum_sq) + " of " +
                                                std::to_string(order_g) + " in the sum of squared dimensions");

  std::vector<Corepresentation> out;
  for (const auto& delta : distinct) {
    const std::vector<CMatrix> ind = induce(delta, *fs);
    const auto end = twisted_intertwiners(ind, ind, g.antiunitary_flags());
    const auto herm = hermitian_part(end);
    std::vector<CMatrix> mats;
    WignerType type;
    if (herm.size() == 1) {
      mats = ind;
      type = end.size() == 2 ? WignerType::c : WignerType::b;
    } else {
      const Eigen::Index n = delta.front().rows();
      const CMatrix u = split_eigenspace(herm, n, out.size());
      mats.reserve(g.order());
      for (ElementId a = 0; a < g.order(); ++a) mats.push_back(u.adjoint() * ind[a] * bracket(u, g.antiunitary(a)));
      mats = fix_gauge(std::move(mats), g);
      type = WignerType::a;
    }
    Corepresentation cand(fs, std::move(mats), label_prefix + std::to_string(out.size()), true, type);
    const bool seen = std::any_of(out.begin(), out.end(), [&](const Corepresentation& d) {
      return d.dimension() == cand.dimension() && !intertwiners(d, cand).empty();
    });
    if (!seen) out.push_back(std::move(cand));
  }
  return out;
}

std::vector<SubgroupRep> regular_irreps_of_unitary_half(const FactorSystem& fs, std::uint64_t seed) {
  const MagneticGroup& g = fs.group();
  const auto pos = subgroup_positions(g);
  const Eigen::Index n = static_cast<Eigen::Index>(g.unitary_subgroup().size());
  Rep regular;
  for (ElementId u : g.unitary_subgroup()) {
    CMatrix m = CMatrix::Zero(n, n);
    for (ElementId v : g.unitary_subgroup()) m(static_cast<Eigen::Index>(pos[g.product(u, v)]), pos[v]) = fs(u, v);
    regular.push_back(std::move(m));
  }

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::vector<Rep> pending{regular};
  std::vector<Rep> irreps;
  while (!pending.empty()) {
    Rep r = std::move(pending.back());
    pending.pop_back();
    const CMatrix comm = complex_hom(r, r);
    const Eigen::Index d = r.front().rows();
    if (comm.cols() == 1) {
      irreps.push_back(std::move(r));
      continue;
    }
    CMatrix h = CMatrix::Zero(d, d);
    for (Eigen::Index k = 0; k < comm.cols(); ++k) {
      const CMatrix b = reshape(comm.col(k), d, d);
      h += cplx(normal(rng), normal(rng)) * b;
    }
    h = (h + h.adjoint()).eval();
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
    const auto& w = es.eigenvalues();
    const double tol = 1e-6 * std::max(1.0, w.cwiseAbs().maxCoeff());
    for (Eigen::Index i = 0; i < d;) {
      Eigen::Index j = i + 1;
      while (j < d && w(j) - w(i) < tol) ++j;
      const CMatrix u = es.eigenvectors().middleCols(i, j - i);
      Rep part;
      for (const auto& m : r) part.push_back(u.adjoint() * m * u);
      pending.push_back(std::move(part));
      i = j;
    }
  }

  std::vector<Rep> distinct;
  for (auto& r : irreps) {
    const bool seen = std::any_of(distinct.begin(), distinct.end(), [&](const Rep& q) {
      return q.front().rows() == r.front().rows() && complex_hom(q, r).cols() > 0;
    });
    if (!seen) distinct.push_back(std::move(r));
  }
  std::stable_sort(distinct.begin(), distinct.end(),
                   [](const Rep& x, const Rep& y) { return x.front().rows() < y.front().rows(); });
  return distinct;
}

}  // namespace magrep
