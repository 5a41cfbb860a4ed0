// Independent reference computations shared by the unit tests and the
// acceptance run. Nothing here calls the library's solvers.
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "magrep/corep.hpp"
#include "magrep/group.hpp"

namespace oracle {

using magrep::cplx;
using magrep::CMatrix;

/// Z_n x {1, T} with T central, elements ordered r^0..r^{n-1}, T r^0..T r^{n-1}.
inline magrep::GroupSpec gray_cyclic(std::size_t n) {
  magrep::GroupSpec s;
  for (std::size_t t = 0; t < 2; ++t)
    for (std::size_t k = 0; k < n; ++k) {
      s.names.push_back((t ? "T" : "") + std::string("r") + std::to_string(k));
      s.antiunitary.push_back(t == 1);
    }
  s.product_table.assign(2 * n, std::vector<magrep::ElementId>(2 * n));
  for (std::size_t a = 0; a < 2 * n; ++a)
    for (std::size_t b = 0; b < 2 * n; ++b)
      s.product_table[a][b] = ((a / n + b / n) % 2) * n + (a % n + b % n) % n;
  return s;
}

/// Rank of a real matrix by SVD with a relative cutoff.
inline std::size_t rank(const Eigen::MatrixXd& m, double rel = 1e-9) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& s = svd.singularValues();
  const double cut = rel * std::max(1.0, s(0));
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) r += s(i) > cut;
  return r;
}

/// Real dimension of {X : D1(a) X^[a] = X D2(a)}, from the rank of the
/// twirl X -> (1/|M|) sum_a D1(a) X^[a] D2(a)^dagger acting on the real
/// coordinates of X. The twirl is an idempotent whose image is that space.
inline std::size_t intertwiner_dim(const magrep::Corepresentation& d1, const magrep::Corepresentation& d2) {
  const auto& g = d1.group();
  const Eigen::Index r = static_cast<Eigen::Index>(d1.dimension()), c = static_cast<Eigen::Index>(d2.dimension());
  const Eigen::Index n = r * c;
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  for (Eigen::Index k = 0; k < 2 * n; ++k) {
    CMatrix x = CMatrix::Zero(r, c);
    x(k % n / c, k % n % c) = k < n ? cplx(1, 0) : cplx(0, 1);
    CMatrix y = CMatrix::Zero(r, c);
    for (magrep::ElementId a = 0; a < g.order(); ++a) {
      const CMatrix xa = g.antiunitary(a) ? CMatrix(x.conjugate()) : x;
      y += d1.matrix(a) * xa * d2.matrix(a).adjoint();
    }
    y /= static_cast<double>(g.order());
    for (Eigen::Index i = 0; i < n; ++i) {
      p(i, k) = y(i / c, i % c).real();
      p(i + n, k) = y(i / c, i % c).imag();
    }
  }
  return rank(p);
}

/// Standard angular momentum matrices in the basis m = j, j-1, ..., -j.
inline void spin_operators(int twice_j, CMatrix& jy, CMatrix& jz) {
  const int d = twice_j + 1;
  const double j = twice_j / 2.0;
  CMatrix jp = CMatrix::Zero(d, d);
  jz = CMatrix::Zero(d, d);
  for (int k = 0; k < d; ++k) {
    const double m = j - k;
    jz(k, k) = m;
    if (k > 0) jp(k - 1, k) = std::sqrt(j * (j + 1) - m * (m + 1));
  }
  jy = (jp - jp.adjoint()) / cplx(0, 2);
}

/// exp(x) by a plain Taylor series with scaling and squaring.
inline CMatrix expm(const CMatrix& x) {
  int s = 0;
  CMatrix y = x;
  while (y.cwiseAbs().maxCoeff() > 0.25) {
    y /= 2.0;
    ++s;
  }
  CMatrix term = CMatrix::Identity(x.rows(), x.cols()), sum = term;
  for (int k = 1; k < 30; ++k) {
    term = term * y / static_cast<double>(k);
    sum += term;
  }
  for (int k = 0; k < s; ++k) sum = sum * sum;
  return sum;
}

/// exp(-i alpha Jz) exp(-i beta Jy) exp(-i gamma Jz).
inline CMatrix rotation_series(int twice_j, double alpha, double beta, double gamma) {
  CMatrix jy, jz;
  spin_operators(twice_j, jy, jz);
  const cplx i(0, 1);
  return expm(-i * alpha * jz) * expm(-i * beta * jy) * expm(-i * gamma * jz);
}

inline CMatrix random_unitary(Eigen::Index n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> z;
  CMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = cplx(z(rng), z(rng));
  Eigen::HouseholderQR<CMatrix> qr(m);
  return qr.householderQ() * CMatrix::Identity(n, n);
}

}  // namespace oracle
