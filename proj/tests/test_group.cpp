#include "doctest.h"
#include "magrep/error.hpp"
#include "magrep/group.hpp"
#include "oracles.hpp"

using namespace magrep;

namespace {

ErrorKind kind_of(const GroupSpec& s) {
  try {
    build_group(s);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("build_group accepted a broken table");
  return ErrorKind::BadTable;
}

}  // namespace

TEST_CASE("gray cyclic group: inverses, halves, coset representative") {
  const GroupPtr g = build_group(oracle::gray_cyclic(4));
  CHECK(g->order() == 8);
  CHECK(g->identity() == 0);
  CHECK(g->unitary_subgroup() == std::vector<ElementId>{0, 1, 2, 3});
  CHECK(g->antiunitary_coset() == std::vector<ElementId>{4, 5, 6, 7});
  CHECK(*g->coset_representative() == 4);
  for (ElementId a = 0; a < g->order(); ++a) {
    CHECK(g->product(a, g->inverse(a)) == g->identity());
    CHECK(g->product(g->inverse(a), a) == g->identity());
  }
  CHECK(*g->find("Tr2") == 6);
  CHECK_FALSE(g->find("nope").has_value());
}

TEST_CASE("purely unitary group has no coset") {
  GroupSpec s = oracle::gray_cyclic(3);
  s.names.resize(3);
  s.antiunitary.resize(3);
  s.product_table.resize(3);
  for (auto& row : s.product_table) row.resize(3);
  const GroupPtr g = build_group(s);
  CHECK_FALSE(g->has_antiunitary());
  CHECK_FALSE(g->coset_representative().has_value());
}

TEST_CASE("table mutations are rejected with the matching error") {
  SUBCASE("non-square") {
    GroupSpec s = oracle::gray_cyclic(2);
    s.product_table[1].pop_back();
    CHECK(kind_of(s) == ErrorKind::BadTable);
  }
  SUBCASE("entry out of range") {
    GroupSpec s = oracle::gray_cyclic(2);
    s.product_table[1][1] = 9;
    CHECK(kind_of(s) == ErrorKind::BadTable);
  }
  SUBCASE("no identity") {
    GroupSpec s = oracle::gray_cyclic(2);
    s.product_table[0][1] = 0;
    CHECK(kind_of(s) == ErrorKind::NoIdentity);
  }
  SUBCASE("antiunitary parity") {
    GroupSpec s = oracle::gray_cyclic(4);
    s.antiunitary[1] = true;
    s.antiunitary[5] = false;
    CHECK(kind_of(s) == ErrorKind::AntiunitaryParityViolation);
  }
  SUBCASE("associativity") {
    GroupSpec s = oracle::gray_cyclic(3);
    std::swap(s.product_table[1][1], s.product_table[1][2]);
    CHECK(kind_of(s) == ErrorKind::NonAssociative);
  }
  SUBCASE("missing inverse") {
    GroupSpec s;
    s.names = {"e", "z"};
    s.antiunitary = {false, false};
    s.product_table = {{0, 1}, {1, 1}};
    CHECK(kind_of(s) == ErrorKind::MissingInverse);
  }
}

TEST_CASE("same_group compares tables and flags") {
  const GroupPtr a = build_group(oracle::gray_cyclic(3));
  const GroupPtr b = build_group(oracle::gray_cyclic(3));
  const GroupPtr c = build_group(oracle::gray_cyclic(2));
  CHECK(same_group(*a, *b));
  CHECK_FALSE(same_group(*a, *c));
}
