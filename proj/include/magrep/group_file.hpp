#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "magrep/corep.hpp"

namespace magrep {

/// Group-definition text format:
///
///   # comment
///   [elements]
///   E L
///   T A
///   [table]
///   E T
///   T E
///   [factor_system spinor]      # name optional, defaults to "default"
///   T T -1 0                    # name, name, re, im; missing entries are 1
///   [corep SA spinor]           # label, then factor system name (optional if only one)
///   @ E
///   1,0 0,0
///   0,0 1,0
///   @ T
///   ...
///
/// Commas and whitespace both separate tokens.

struct RawSystem {
  std::string name;
  std::vector<std::tuple<std::string, std::string, cplx>> entries;
  std::size_t line = 0;
};

struct RawCorep {
  std::string label;
  std::string system;
  std::vector<std::pair<std::string, std::vector<std::vector<cplx>>>> blocks;
  std::size_t line = 0;
};

/// Syntactic content of a group file; no group axioms checked yet.
struct GroupFileData {
  std::string name;
  std::vector<std::string> names;
  std::vector<bool> antiunitary;
  std::vector<std::vector<std::string>> table;
  std::vector<RawSystem> systems;
  std::vector<RawCorep> coreps;
};

struct SystemModel {
  std::string name;
  FactorSystemPtr fs;
  std::vector<Corepresentation> coreps;
};

struct GroupModel {
  std::string name;
  GroupPtr group;
  std::vector<SystemModel> systems;

  const SystemModel* system(std::string_view name) const;
  /// Corep by label across all systems; nullptr if absent.
  const Corepresentation* corep(std::string_view label) const;
};

/// ParseError (with line number) on malformed text.
GroupFileData parse_group_file(std::string_view text, std::string name = "");

/// Builds the group, factor systems and embedded coreps. Group errors
/// (NonAssociative, ...) and DimensionMismatch propagate. A file without
/// factor systems gets a trivial one named "trivial".
GroupModel assemble(const GroupFileData& data, double tolerance = kDefaultTolerance);

GroupModel load_group_file(const std::filesystem::path& path, double tolerance = kDefaultTolerance);

/// Text form of the model; floats at 17 significant digits, so parsing the
/// output reproduces every value bit for bit.
std::string write_group_file(const GroupModel& model);

}  // namespace magrep
