#include "magrep/factor_system.hpp"

#include <algorithm>
#include <cmath>

#include "magrep/error.hpp"

namespace magrep {

FactorSystem::FactorSystem(GroupPtr group, std::vector<cplx> table, double tolerance)
    : group_(std::move(group)), table_(std::move(table)), tolerance_(tolerance) {
  const std::size_t n = group_->order();
  if (table_.size() != n * n)
    throw Error(ErrorKind::DimensionMismatch, "factor table size differs from |M|^2");
  const ElementId e = group_->identity();
  for (ElementId a = 0; a < n; ++a)
    if ((*this)(a, e) != cplx(1.0) || (*this)(e, a) != cplx(1.0))
      throw Error(ErrorKind::NotNormalized,
                  "lambda(" + group_->name(a) + ", e) and lambda(e, " + group_->name(a) + ") must be 1");
}

FactorSystem FactorSystem::trivial(GroupPtr group, double tolerance) {
  const std::size_t n = group->order();
  return FactorSystem(std::move(group), std::vector<cplx>(n * n, cplx(1.0)), tolerance);
}

bool FactorSystem::is_trivial() const {
  return std::all_of(table_.begin(), table_.end(), [&](cplx z) { return std::abs(z - 1.0) <= tolerance_; });
}

ValidationReport validate_factor_system(const FactorSystem& fs) {
  const MagneticGroup& g = fs.group();
  const std::size_t n = g.order();
  if (fs.table().size() != n * n) throw Error(ErrorKind::DimensionMismatch, "factor table size");
  ValidationReport rep;
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = 0; b < n; ++b) {
      const double dev = std::abs(std::abs(fs(a, b)) - 1.0);
      rep.max_modulus_deviation = std::max(rep.max_modulus_deviation, dev);
      if (dev > fs.tolerance()) rep.violations.push_back({a, b, a});
    }
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = 0; b < n; ++b) {
      const ElementId ab = g.product(a, b);
      for (ElementId c = 0; c < n; ++c) {
        const cplx lhs = bracket(fs(a, b), g.antiunitary(c)) * fs(ab, c);
        const cplx rhs = fs(a, g.product(b, c)) * fs(b, c);
        const double r = std::abs(lhs - rhs);
        rep.max_cocycle_residual = std::max(rep.max_cocycle_residual, r);
        if (r > fs.tolerance()) rep.violations.push_back({a, b, c});
      }
    }
  rep.passed = rep.max_cocycle_residual <= fs.tolerance() && rep.max_modulus_deviation <= fs.tolerance();
  return rep;
}

FactorSystem multiply_factor_systems(const FactorSystem& a, const FactorSystem& b) {
  if (!same_group(a.group(), b.group()))
    throw Error(ErrorKind::GroupMismatch, "factor systems live on different groups");
  std::vector<cplx> table(a.table().size());
  for (std::size_t k = 0; k < table.size(); ++k) table[k] = a.table()[k] * b.table()[k];
  FactorSystem out(a.group_ptr(), std::move(table), std::max(a.tolerance(), b.tolerance()));
  const auto rep = validate_factor_system(out);
  if (!rep.passed)
    throw Error(ErrorKind::IncompatibleFactors, "product of factor systems fails the cocycle law");
  return out;
}

bool same_factor_system(const FactorSystem& a, const FactorSystem& b, double tolerance) {
  if (!same_group(a.group(), b.group())) return false;
  for (std::size_t k = 0; k < a.table().size(); ++k)
    if (std::abs(a.table()[k] - b.table()[k]) > tolerance) return false;
  return true;
}

}  // namespace magrep
