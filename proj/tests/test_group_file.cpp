#include <cmath>
#include <limits>

#include "doctest.h"
#include "magrep/catalog.hpp"
#include "magrep/error.hpp"
#include "magrep/group_file.hpp"
#include "magrep/records.hpp"

using namespace magrep;

namespace {

const char* kGrayC1 = R"(# gray C1 with its Kramers doublet
[elements]
E L
T A
[table]
E T
T E
[factor_system spinor]
T T -1 0
[corep SA spinor]
@ E
1,0 0,0
0,0 1,0
@ T
0,0 -1,0
1,0 0,0
)";

std::size_t parse_error_line(const std::string& text) {
  try {
    parse_group_file(text);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
    const std::string w = e.what();
    const auto p = w.find("line ");
    REQUIRE(p != std::string::npos);
    return std::stoul(w.substr(p + 5));
  }
  FAIL("accepted");
  return 0;
}

}  // namespace

TEST_CASE("hand-written file assembles into a valid model") {
  const GroupModel m = assemble(parse_group_file(kGrayC1, "c1"));
  CHECK(m.name == "c1");
  CHECK(m.group->order() == 2);
  REQUIRE(m.systems.size() == 1);
  CHECK((*m.systems[0].fs)(1, 1) == cplx(-1, 0));
  const Corepresentation* sa = m.corep("SA");
  REQUIRE(sa != nullptr);
  CHECK(verify_corep(*sa).passed);
  CHECK(m.corep("nope") == nullptr);
}

TEST_CASE("file without factor systems gets the trivial one") {
  const GroupModel m = assemble(parse_group_file("[elements]\nE L\n[table]\nE\n"));
  REQUIRE(m.systems.size() == 1);
  CHECK(m.systems[0].name == "trivial");
  CHECK(m.systems[0].fs->is_trivial());
}

TEST_CASE("every builtin group survives a write/parse round trip bit for bit") {
  for (const auto& m : catalog()) {
    const std::string text = write_group_file(m);
    const GroupModel back = assemble(parse_group_file(text, m.name));
    CHECK(same_group(*back.group, *m.group));
    REQUIRE(back.systems.size() == m.systems.size());
    for (std::size_t k = 0; k < m.systems.size(); ++k) {
      CHECK(back.systems[k].fs->table() == m.systems[k].fs->table());
      REQUIRE(back.systems[k].coreps.size() == m.systems[k].coreps.size());
      for (std::size_t i = 0; i < m.systems[k].coreps.size(); ++i)
        CHECK(back.systems[k].coreps[i].matrices() == m.systems[k].coreps[i].matrices());
    }
    CHECK(write_group_file(back) == text);
  }
}

TEST_CASE("syntax errors carry the line number") {
  CHECK(parse_error_line("[elements]\nE L\nT X\n[table]\nE T\nT E\n") == 3);
  CHECK(parse_error_line("[elements]\nE L\n[bogus]\n") == 3);
  CHECK(parse_error_line("[elements]\nE L\nT A\n[table]\nE T\nT E\n[factor_system]\nT T -1\n") == 8);
  CHECK(parse_error_line("[elements]\nE L\n") > 0);
}

TEST_CASE("semantic errors from assemble") {
  const auto kind = [](const std::string& text) {
    try {
      assemble(parse_group_file(text));
    } catch (const Error& e) {
      return e.kind();
    }
    FAIL("accepted");
    return ErrorKind::BadTable;
  };
  CHECK(kind("[elements]\nE L\nT A\n[table]\nE T\nT X\n") == ErrorKind::ParseError);
  CHECK(kind("[elements]\nE L\nT L\n[table]\nE T\nT T\n") == ErrorKind::MissingInverse);
  CHECK(kind("[elements]\nE L\nT A\n[table]\nE T\nT E\n[factor_system]\nE T -1 0\n") == ErrorKind::NotNormalized);
  CHECK(kind("[elements]\nE L\nT A\n[table]\nE T\nT E\n[corep X]\n@ E\n1,0\n@ T\n1,0 0,0\n0,0 1,0\n") ==
        ErrorKind::DimensionMismatch);
}

TEST_CASE("records round trip") {
  Record r;
  r["command"] = "cg";
  r["labels"] = Record::array({"A", "B", "C"});
  r["value"] = 0.1;
  r["tiny"] = 1e-300;
  r["count"] = 3;
  r["flag"] = true;
  r["nested"] = {{"x", -2.5}};
  const std::string line = render_record(r);
  CHECK(line.find('\n') == std::string::npos);
  CHECK(line.find("0.10000000000000001") != std::string::npos);
  const Record back = parse_record(line);
  CHECK(back == r);
  CHECK(render_record(back) == line);
  CHECK(line.find("\"command\"") < line.find("\"labels\""));

  Record inf;
  inf["x"] = std::numeric_limits<double>::infinity();
  CHECK(render_record(inf) == "{\"x\":null}");
  try {
    parse_record("{\"x\":");
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
  }
}
