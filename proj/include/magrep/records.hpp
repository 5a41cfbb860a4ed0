#pragma once

#include <string>

#include "json.hpp"

namespace magrep {

using Record = nlohmann::ordered_json;

/// One-line JSON with fields in insertion order; floating point values at 17
/// significant digits so parsing and re-rendering gives the same bytes.
std::string render_record(const Record& r);

/// ParseError on malformed input.
Record parse_record(const std::string& line);

}  // namespace magrep
