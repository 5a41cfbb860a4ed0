#include "magrep/records.hpp"

#include <cmath>
#include <cstdio>

#include "magrep/error.hpp"

namespace magrep {

namespace {

void render(const Record& r, std::string& out) {
  switch (r.type()) {
    case Record::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& [k, v] : r.items()) {
        if (!first) out += ',';
        first = false;
        out += Record(k).dump();
        out += ':';
        render(v, out);
      }
      out += '}';
      break;
    }
    case Record::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (i) out += ',';
        render(r[i], out);
      }
      out += ']';
      break;
    }
    case Record::value_t::number_float: {
      const double x = r.get<double>();
      if (!std::isfinite(x)) {
        out += "null";
        break;
      }
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", x);
      out += buf;
      break;
    }
    default:
      out += r.dump();
  }
}

}  // namespace

std::string render_record(const Record& r) {
  std::string out;
  render(r, out);
  return out;
}

Record parse_record(const std::string& line) {
  try {
    return Record::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

}  // namespace magrep
