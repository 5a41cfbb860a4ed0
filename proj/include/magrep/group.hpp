#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace magrep {

using ElementId = std::size_t;

struct GroupElement {
  ElementId id = 0;
  std::string name;
  bool antiunitary = false;
};

/// Raw input for build_group: product_table[a][b] is the id of a*b.
struct GroupSpec {
  std::vector<std::string> names;
  std::vector<bool> antiunitary;
  std::vector<std::vector<ElementId>> product_table;
};

/// Finite magnetic group M = G + a0 G. Immutable once built; construct
/// through build_group so every invariant has been checked.
class MagneticGroup {
 public:
  std::size_t order() const { return elements_.size(); }
  const std::vector<GroupElement>& elements() const { return elements_; }
  const GroupElement& element(ElementId a) const { return elements_.at(a); }
  const std::string& name(ElementId a) const { return elements_.at(a).name; }
  bool antiunitary(ElementId a) const { return elements_[a].antiunitary; }

  ElementId product(ElementId a, ElementId b) const { return table_[a * order() + b]; }
  ElementId inverse(ElementId a) const { return inverse_[a]; }
  ElementId identity() const { return identity_; }

  /// Ids of G in ascending order.
  const std::vector<ElementId>& unitary_subgroup() const { return unitary_; }
  /// Ids of M - G in ascending order (empty for a purely unitary group).
  const std::vector<ElementId>& antiunitary_coset() const { return antiunitary_ids_; }
  bool has_antiunitary() const { return !antiunitary_ids_.empty(); }
  /// Lowest-id antiunitary element, used as the coset representative a0.
  std::optional<ElementId> coset_representative() const;

  std::optional<ElementId> find(const std::string& name) const;
  std::vector<bool> antiunitary_flags() const;

  bool operator==(const MagneticGroup& other) const;

 private:
  friend std::shared_ptr<const MagneticGroup> build_group(const GroupSpec& spec);

  std::vector<GroupElement> elements_;
  std::vector<ElementId> table_;
  std::vector<ElementId> inverse_;
  std::vector<ElementId> unitary_;
  std::vector<ElementId> antiunitary_ids_;
  ElementId identity_ = 0;
};

using GroupPtr = std::shared_ptr<const MagneticGroup>;

/// Validates the table exhaustively (associativity by sampling above 96
/// elements) and derives inverses and the unitary half.
GroupPtr build_group(const GroupSpec& spec);

/// Groups are interchangeable when their tables and flags agree.
bool same_group(const MagneticGroup& a, const MagneticGroup& b);

}  // namespace magrep
