#pragma once

#include <array>
#include <string>
#include <vector>

#include "magrep/corep.hpp"

namespace magrep {

/// One family of CG coefficients <m1; m2 | tau m3>, stored in compound
/// order c = (m1 * d2 + m2) * d3 + m3.
struct CGTable {
  std::array<std::string, 3> labels;
  std::array<std::size_t, 3> dims{};
  std::size_t tau = 0;
  CVector coefficients;

  cplx operator()(std::size_t m1, std::size_t m2, std::size_t m3) const {
    return coefficients((m1 * dims[1] + m2) * dims[2] + m3);
  }
  /// Rows (m1, m2) in kron order, columns m3.
  CMatrix as_matrix() const;
};

/// Linear system for the CG coefficients of a triple.
///   L(i; m) = d3/|M| sum_{u in G}   D1_{i1 m1}(u) D2_{i2 m2}(u) conj(D3_{i3 m3}(u))
///   A(i; m) = d3/|M| sum_{a in M-G} D1_{i1 m1}(a) D2_{i2 m2}(a) conj(D3_{i3 m3}(a))
/// realified_operator is K -> L K + A conj(K) on (Re K, Im K). On solutions
/// it acts as d3 times the identity.
/// equations stacks, for every (i, m3, m3'),
///   sum_{m1 m2} K(m1 m2 m3) L(i; m1 m2 m3') + conj(K(m1 m2 m3')) A(i; m1 m2 m3) - delta_{m3 m3'} K(i)
/// in real form; its kernel is the CG solution space.
struct CGSystem {
  std::array<std::string, 3> labels;
  std::array<std::size_t, 3> dims{};
  std::size_t group_order = 0;
  CMatrix L;
  CMatrix A;
  RMatrix realified_operator;
  RMatrix equations;
  /// Real dimension of End(D3): 1, 4, 2 for types a, b, c.
  std::size_t target_endomorphisms = 1;
};

/// lambda3 == lambda1 * lambda2 entrywise within tolerance. GroupMismatch otherwise.
bool factor_compatible(const FactorSystem& fs1, const FactorSystem& fs2, const FactorSystem& fs3);

/// IncompatibleFactors unless factor_compatible, when enforce_compatibility is set.
CGSystem build_cg_system(const Corepresentation& d1, const Corepresentation& d2, const Corepresentation& d3,
                         bool enforce_compatibility = true);

/// Max abs residual of the stacked equations at K.
double cg_equation_residual(const CGSystem& sys, const CVector& k);

/// Max abs of (L K + A conj K) / d3 - K.
double cg_fixed_point_residual(const CGSystem& sys, const CVector& k);

struct UniquenessVerdict {
  double det_plus = 0.0;   ///< |det(L + A - I)|
  double det_minus = 0.0;  ///< |det(L - A - I)|
  std::size_t kernel_dim_real = 0;
  /// Nullity of realified_operator - d3 I; equals kernel_dim_real.
  std::size_t fixed_point_kernel_dim = 0;
  /// Complex rank of the solutions: 1 when all of them are complex multiples of one family.
  std::size_t complex_rank = 0;
  bool essentially_unique = false;  ///< complex_rank == 1
  bool determinants_vanish = false; ///< both below kDeterminantThreshold
  /// False iff both determinants vanish but kernel_dim_real < 2.
  bool consistent = true;
  std::string note;
};

inline constexpr double kDeterminantThreshold = 1e-8;

UniquenessVerdict uniqueness_test(const CGSystem& sys);

/// Families of CG coefficients, one table per tau. Each family is an isometry
/// (columns orthonormal); families are orthogonal. Empty if there is no solution.
std::vector<CGTable> solve_cg(const Corepresentation& d1, const Corepresentation& d2,
                              const Corepresentation& d3);
std::vector<CGTable> solve_cg(const CGSystem& sys, const Corepresentation& d3);

/// Number of independent families: kernel_dim_real / dim End(D3).
std::size_t multiplicity(const Corepresentation& d1, const Corepresentation& d2, const Corepresentation& d3);

struct OrthogonalityReport {
  double max_residual = 0.0;
  double max_cross = 0.0;
  bool passed = false;
};

/// sum_{m1 m2} conj(K_t(m1 m2 m3)) K_t'(m1 m2 m3') against delta_{t t'} delta_{m3 m3'}.
/// MixedTriples if the tables belong to different triples.
OrthogonalityReport orthogonality_check(const std::vector<CGTable>& families, double tolerance = 1e-8);

}  // namespace magrep
