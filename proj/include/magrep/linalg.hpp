#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace magrep {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

/// Relative singular-value threshold below which a direction counts as null.
inline constexpr double kKernelThreshold = 1e-8;

/// x^[alpha]: identity for linear alpha, complex conjugate for antiunitary alpha.
inline cplx bracket(cplx x, bool antiunitary) { return antiunitary ? std::conj(x) : x; }
inline CMatrix bracket(const CMatrix& m, bool antiunitary) {
  return antiunitary ? CMatrix(m.conjugate()) : m;
}
inline CVector bracket(const CVector& v, bool antiunitary) {
  return antiunitary ? CVector(v.conjugate()) : v;
}

/// Real 2n x 2m matrix of the real-linear map z -> lin*z + con*conj(z),
/// acting on the stacked vector (Re z, Im z).
RMatrix realify(const CMatrix& lin, const CMatrix& con);

/// Kronecker product; row index of the result is (i_a * rows(b) + i_b).
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Stacks (Re z, Im z).
RVector stack_real(const CVector& z);
/// Inverse of stack_real.
CVector unstack_real(const RVector& x);

/// Orthonormal basis (columns) of the null space of `a`. Singular values below
/// threshold * sigma_max are treated as zero; a matrix with sigma_max below 1e-12
/// counts as zero and has full null space.
RMatrix null_space(const RMatrix& a, double threshold = kKernelThreshold);

/// Complex-linear counterpart of null_space.
CMatrix null_space(const CMatrix& a, double threshold = kKernelThreshold);

/// Real dimension of the solution space of D1(alpha) X^[alpha] = X D2(alpha)
/// over all alpha, returned as a basis of d1 x d2 complex matrices.
std::vector<CMatrix> twisted_intertwiners(const std::vector<CMatrix>& d1,
                                          const std::vector<CMatrix>& d2,
                                          const std::vector<bool>& antiunitary);

/// Column-major reshape of a length rows*cols vector.
CMatrix reshape(const CVector& v, Eigen::Index rows, Eigen::Index cols);

double max_abs(const CMatrix& m);

/// Unitary deviation max|U^dagger U - I|.
double unitarity_defect(const CMatrix& u);

}  // namespace magrep
