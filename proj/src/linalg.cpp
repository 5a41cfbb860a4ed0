#include "magrep/linalg.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/SVD>

#include "magrep/error.hpp"

namespace magrep {

RMatrix realify(const CMatrix& lin, const CMatrix& con) {
  const Eigen::Index r = lin.rows();
  const Eigen::Index c = lin.cols();
  RMatrix out(2 * r, 2 * c);
  out.topLeftCorner(r, c) = lin.real() + con.real();
  out.topRightCorner(r, c) = -lin.imag() + con.imag();
  out.bottomLeftCorner(r, c) = lin.imag() + con.imag();
  out.bottomRightCorner(r, c) = lin.real() - con.real();
  return out;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

RVector stack_real(const CVector& z) {
  RVector x(2 * z.size());
  x.head(z.size()) = z.real();
  x.tail(z.size()) = z.imag();
  return x;
}

CVector unstack_real(const RVector& x) {
  const Eigen::Index n = x.size() / 2;
  CVector z(n);
  for (Eigen::Index i = 0; i < n; ++i) z(i) = cplx(x(i), x(n + i));
  return z;
}

namespace {

constexpr double kZeroMatrix = 1e-12;

template <typename Matrix>
Matrix null_space_impl(const Matrix& a, double threshold) {
  const Eigen::Index n = a.cols();
  if (a.rows() == 0 || n == 0) return Matrix::Identity(n, n);
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double smax = s.size() > 0 ? s(0) : 0.0;
  Eigen::Index rank = 0;
  // A matrix whose largest singular value is rounding noise is treated as zero.
  if (smax > kZeroMatrix) {
    while (rank < s.size() && s(rank) > threshold * smax) ++rank;
  }
  return svd.matrixV().rightCols(n - rank);
}

}  // namespace

RMatrix null_space(const RMatrix& a, double threshold) { return null_space_impl(a, threshold); }
CMatrix null_space(const CMatrix& a, double threshold) { return null_space_impl(a, threshold); }

CMatrix reshape(const CVector& v, Eigen::Index rows, Eigen::Index cols) {
  return Eigen::Map<const CMatrix>(v.data(), rows, cols);
}

std::vector<CMatrix> twisted_intertwiners(const std::vector<CMatrix>& d1,
                                          const std::vector<CMatrix>& d2,
                                          const std::vector<bool>& antiunitary) {
  if (d1.size() != d2.size() || d1.size() != antiunitary.size())
    throw Error(ErrorKind::DimensionMismatch, "intertwiner inputs over different element sets");
  if (d1.empty()) return {};
  const Eigen::Index n1 = d1.front().rows();
  const Eigen::Index n2 = d2.front().rows();
  const Eigen::Index unknowns = n1 * n2;
  const CMatrix id1 = CMatrix::Identity(n1, n1);
  const CMatrix id2 = CMatrix::Identity(n2, n2);

  // vec(A X B) = (B^T kron A) vec(X), column-major.
  RMatrix system(2 * unknowns * static_cast<Eigen::Index>(d1.size()), 2 * unknowns);
  for (std::size_t a = 0; a < d1.size(); ++a) {
    CMatrix lin = -kron(d2[a].transpose(), id1);
    CMatrix con = CMatrix::Zero(unknowns, unknowns);
    const CMatrix left = kron(id2, d1[a]);
    if (antiunitary[a])
      con = left;
    else
      lin += left;
    system.middleRows(2 * unknowns * static_cast<Eigen::Index>(a), 2 * unknowns) = realify(lin, con);
  }
  const RMatrix basis = null_space(system);
  std::vector<CMatrix> out;
  out.reserve(static_cast<std::size_t>(basis.cols()));
  for (Eigen::Index k = 0; k < basis.cols(); ++k)
    out.push_back(reshape(unstack_real(basis.col(k)), n1, n2));
  return out;
}

double max_abs(const CMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double unitarity_defect(const CMatrix& u) {
  return max_abs(u.adjoint() * u - CMatrix::Identity(u.cols(), u.cols()));
}

}  // namespace magrep
