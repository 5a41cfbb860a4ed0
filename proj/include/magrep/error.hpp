#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace magrep {

enum class ErrorKind {
  NonAssociative,
  NoIdentity,
  MissingInverse,
  AntiunitaryParityViolation,
  BadCosetStructure,
  BadTable,
  DimensionMismatch,
  GroupMismatch,
  NotNormalized,
  NotAnIrrep,
  IncompleteInput,
  NotIrreducible,
  IndexOutOfRange,
  NotClosed,
  BadAngle,
  IncompatibleFactors,
  MixedTriples,
  TripleMismatch,
  EmptyCG,
  SelectionRuleViolation,
  LengthMismatch,
  ParseError,
  UnknownLabel,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (and the CLI exit-code mapping) can dispatch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace magrep
