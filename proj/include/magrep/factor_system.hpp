#pragma once

#include <array>
#include <memory>
#include <vector>

#include "magrep/group.hpp"
#include "magrep/linalg.hpp"

namespace magrep {

inline constexpr double kDefaultTolerance = 1e-10;

/// Cofactor table lambda(a, b) over a magnetic group. Normalization
/// lambda(a, e) = lambda(e, a) = 1 is enforced at construction; the cocycle law
/// and unit modulus are checked by validate_factor_system.
class FactorSystem {
 public:
  /// Throws DimensionMismatch for a table that is not |M| x |M| (row-major),
  /// NotNormalized if any lambda(a, e) or lambda(e, a) differs from 1.
  FactorSystem(GroupPtr group, std::vector<cplx> table, double tolerance = kDefaultTolerance);

  static FactorSystem trivial(GroupPtr group, double tolerance = kDefaultTolerance);

  const MagneticGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  cplx operator()(ElementId a, ElementId b) const { return table_[a * group_->order() + b]; }
  const std::vector<cplx>& table() const { return table_; }
  double tolerance() const { return tolerance_; }

  bool is_trivial() const;

 private:
  GroupPtr group_;
  std::vector<cplx> table_;
  double tolerance_;
};

using FactorSystemPtr = std::shared_ptr<const FactorSystem>;

struct ValidationReport {
  double max_cocycle_residual = 0.0;
  double max_modulus_deviation = 0.0;
  std::vector<std::array<ElementId, 3>> violations;  ///< offending (a, b, c); pairs use c = a
  bool passed = true;
};

ValidationReport validate_factor_system(const FactorSystem& fs);

/// Entrywise product; result is revalidated and throws if it fails.
FactorSystem multiply_factor_systems(const FactorSystem& a, const FactorSystem& b);

/// Entrywise agreement within tolerance (no gauge reduction).
bool same_factor_system(const FactorSystem& a, const FactorSystem& b, double tolerance);

}  // namespace magrep

namespace magrep {

/// x^[alpha] for a group element.
inline cplx bracket_conjugate(cplx x, const GroupElement& alpha) { return bracket(x, alpha.antiunitary); }
inline CMatrix bracket_conjugate(const CMatrix& x, const GroupElement& alpha) {
  return bracket(x, alpha.antiunitary);
}

}  // namespace magrep
