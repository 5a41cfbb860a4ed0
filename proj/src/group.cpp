#include "magrep/group.hpp"

#include <random>
#include <sstream>

#include "magrep/error.hpp"

namespace magrep {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonAssociative: return "NonAssociative";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::MissingInverse: return "MissingInverse";
    case ErrorKind::AntiunitaryParityViolation: return "AntiunitaryParityViolation";
    case ErrorKind::BadCosetStructure: return "BadCosetStructure";
    case ErrorKind::BadTable: return "BadTable";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::GroupMismatch: return "GroupMismatch";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::NotAnIrrep: return "NotAnIrrep";
    case ErrorKind::IncompleteInput: return "IncompleteInput";
    case ErrorKind::NotIrreducible: return "NotIrreducible";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::BadAngle: return "BadAngle";
    case ErrorKind::IncompatibleFactors: return "IncompatibleFactors";
    case ErrorKind::MixedTriples: return "MixedTriples";
    case ErrorKind::TripleMismatch: return "TripleMismatch";
    case ErrorKind::EmptyCG: return "EmptyCG";
    case ErrorKind::SelectionRuleViolation: return "SelectionRuleViolation";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
  }
  return "Unknown";
}

std::optional<ElementId> MagneticGroup::coset_representative() const {
  if (antiunitary_ids_.empty()) return std::nullopt;
  return antiunitary_ids_.front();
}

std::optional<ElementId> MagneticGroup::find(const std::string& name) const {
  for (const auto& e : elements_)
    if (e.name == name) return e.id;
  return std::nullopt;
}

std::vector<bool> MagneticGroup::antiunitary_flags() const {
  std::vector<bool> flags(order());
  for (const auto& e : elements_) flags[e.id] = e.antiunitary;
  return flags;
}

bool MagneticGroup::operator==(const MagneticGroup& other) const { return same_group(*this, other); }

bool same_group(const MagneticGroup& a, const MagneticGroup& b) {
  if (&a == &b) return true;
  if (a.order() != b.order()) return false;
  for (ElementId x = 0; x < a.order(); ++x) {
    if (a.antiunitary(x) != b.antiunitary(x)) return false;
    for (ElementId y = 0; y < a.order(); ++y)
      if (a.product(x, y) != b.product(x, y)) return false;
  }
  return true;
}

namespace {

constexpr std::size_t kExhaustiveLimit = 96;
constexpr std::size_t kSampledTriples = 200000;

std::string triple_text(const GroupSpec& s, ElementId a, ElementId b, ElementId c) {
  std::ostringstream os;
  os << "(" << s.names[a] << ", " << s.names[b] << ", " << s.names[c] << ")";
  return os.str();
}

}  // namespace

GroupPtr build_group(const GroupSpec& spec) {
  const std::size_t n = spec.names.size();
  if (n == 0) throw Error(ErrorKind::BadTable, "group has no elements");
  if (spec.antiunitary.size() != n || spec.product_table.size() != n)
    throw Error(ErrorKind::BadTable, "table and element list sizes differ");
  for (const auto& row : spec.product_table) {
    if (row.size() != n) throw Error(ErrorKind::BadTable, "product table is not square");
    for (ElementId v : row)
      if (v >= n) throw Error(ErrorKind::BadTable, "product table entry out of range");
  }
  auto mul = [&](ElementId a, ElementId b) { return spec.product_table[a][b]; };

  std::optional<ElementId> identity;
  for (ElementId e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (ElementId x = 0; x < n && ok; ++x) ok = mul(e, x) == x && mul(x, e) == x;
    if (ok) identity = e;
  }
  if (!identity) throw Error(ErrorKind::NoIdentity, "no two-sided identity in table");

  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = 0; b < n; ++b)
      if (spec.antiunitary[mul(a, b)] != (spec.antiunitary[a] != spec.antiunitary[b]))
        throw Error(ErrorKind::AntiunitaryParityViolation,
                    spec.names[a] + "*" + spec.names[b] + " breaks the antiunitary XOR rule");

  auto check_triple = [&](ElementId a, ElementId b, ElementId c) {
    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
      throw Error(ErrorKind::NonAssociative, "associativity fails at " + triple_text(spec, a, b, c));
  };
  if (n <= kExhaustiveLimit) {
    for (ElementId a = 0; a < n; ++a)
      for (ElementId b = 0; b < n; ++b)
        for (ElementId c = 0; c < n; ++c) check_triple(a, b, c);
  } else {
    std::mt19937_64 rng(0);
    std::uniform_int_distribution<ElementId> pick(0, n - 1);
    for (std::size_t k = 0; k < kSampledTriples; ++k) check_triple(pick(rng), pick(rng), pick(rng));
  }

  auto group = std::make_shared<MagneticGroup>();
  group->identity_ = *identity;
  group->inverse_.resize(n);
  for (ElementId a = 0; a < n; ++a) {
    std::optional<ElementId> inv;
    for (ElementId b = 0; b < n && !inv; ++b)
      if (mul(a, b) == *identity && mul(b, a) == *identity) inv = b;
    if (!inv) throw Error(ErrorKind::MissingInverse, "element " + spec.names[a] + " has no inverse");
    group->inverse_[a] = *inv;
  }

  group->elements_.reserve(n);
  group->table_.reserve(n * n);
  for (ElementId a = 0; a < n; ++a) {
    group->elements_.push_back({a, spec.names[a], static_cast<bool>(spec.antiunitary[a])});
    (spec.antiunitary[a] ? group->antiunitary_ids_ : group->unitary_).push_back(a);
    for (ElementId b = 0; b < n; ++b) group->table_.push_back(mul(a, b));
  }

  // M - G must be exactly a0 G.
  if (!group->antiunitary_ids_.empty()) {
    const ElementId a0 = group->antiunitary_ids_.front();
    if (group->antiunitary_ids_.size() * 2 != n)
      throw Error(ErrorKind::BadCosetStructure, "antiunitary part is not half the group");
    std::vector<bool> hit(n, false);
    for (ElementId u : group->unitary_) hit[mul(a0, u)] = true;
    for (ElementId a : group->antiunitary_ids_)
      if (!hit[a]) throw Error(ErrorKind::BadCosetStructure, "antiunitary part is not a single coset a0 G");
  }
  return group;
}

}  // namespace magrep
