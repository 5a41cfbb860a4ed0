#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "magrep/wigner_eckart.hpp"

namespace magrep::cli {

enum class Format { Text, Records };

struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;
  std::optional<double> tolerance;
  std::uint64_t seed = 0;
  Format format = Format::Text;
  std::optional<std::array<std::string, 3>> triple;
  Variant variant = Variant::L;
  /// "random" (projected from a seeded matrix) or "theta" (the Wigner operator of a0).
  std::string tensor = "random";
  std::string dump_dir;
};

struct Report {
  std::string output;
  int exit_code = 0;  ///< 0 pass, 1 a check failed, 2 bad input
};

Report cmd_catalog(const RunConfig& cfg);
Report cmd_validate(const RunConfig& cfg);
Report cmd_coreps(const RunConfig& cfg);
Report cmd_cg(const RunConfig& cfg);
Report cmd_we(const RunConfig& cfg);

/// Dispatches on cfg.command; library errors become exit code 2 (input) or 1.
Report run(const RunConfig& cfg);

/// Parses argv and runs; writes the report to out and diagnostics to err.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace magrep::cli
