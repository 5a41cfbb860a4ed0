#include "doctest.h"
#include "magrep/catalog.hpp"
#include "magrep/error.hpp"
#include "magrep/factor_system.hpp"
#include "oracles.hpp"

using namespace magrep;

namespace {

// lambda(a,b)^[c] lambda(ab,c) - lambda(a,bc) lambda(b,c), maximised directly.
double cocycle_oracle(const FactorSystem& fs) {
  const auto& g = fs.group();
  double worst = 0.0;
  for (ElementId a = 0; a < g.order(); ++a)
    for (ElementId b = 0; b < g.order(); ++b)
      for (ElementId c = 0; c < g.order(); ++c) {
        const cplx lhs = (g.antiunitary(c) ? std::conj(fs(a, b)) : fs(a, b)) * fs(g.product(a, b), c);
        const cplx rhs = fs(a, g.product(b, c)) * fs(b, c);
        worst = std::max(worst, std::abs(lhs - rhs));
      }
  return worst;
}

}  // namespace

TEST_CASE("builtin factor systems satisfy the twisted cocycle law") {
  for (const auto& m : catalog())
    for (const auto& s : m.systems) {
      const ValidationReport v = validate_factor_system(*s.fs);
      CHECK(v.passed);
      CHECK(v.max_cocycle_residual <= 1e-12);
      CHECK(cocycle_oracle(*s.fs) <= 1e-12);
    }
}

TEST_CASE("spinor system of the gray group has lambda(T,T) = -1") {
  const GroupModel m = catalog_entry("gray-C4");
  const FactorSystem& fs = *m.system("spinor")->fs;
  const ElementId t = *m.group->coset_representative();
  CHECK(fs(t, t) == cplx(-1, 0));
  CHECK_FALSE(fs.is_trivial());
  CHECK(m.system("vector")->fs->is_trivial());
}

TEST_CASE("mutations are detected") {
  const GroupModel m = catalog_entry("gray-C3");
  const FactorSystem& fs = *m.system("spinor")->fs;
  const std::size_t n = fs.group().order();
  const ElementId r = 1, t = *fs.group().coset_representative();

  SUBCASE("sign flip breaks the cocycle law") {
    auto table = fs.table();
    table[r * n + t] *= -1.0;
    const FactorSystem bad(fs.group_ptr(), table);
    const ValidationReport v = validate_factor_system(bad);
    CHECK_FALSE(v.passed);
    CHECK(v.max_cocycle_residual > 1.0);
    CHECK_FALSE(v.violations.empty());
    CHECK(cocycle_oracle(bad) > 1.0);
  }
  SUBCASE("non-unit modulus") {
    auto table = fs.table();
    table[r * n + r] *= 1.5;
    const ValidationReport v = validate_factor_system(FactorSystem(fs.group_ptr(), table));
    CHECK_FALSE(v.passed);
    CHECK(v.max_modulus_deviation == doctest::Approx(0.5));
  }
  SUBCASE("lambda(a, e) != 1 is rejected") {
    auto table = fs.table();
    table[r * n + 0] = cplx(0, 1);
    CHECK_THROWS_AS(FactorSystem(fs.group_ptr(), table), Error);
    try {
      FactorSystem(fs.group_ptr(), table);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotNormalized);
    }
  }
  SUBCASE("wrong table size") {
    auto table = fs.table();
    table.pop_back();
    try {
      FactorSystem(fs.group_ptr(), table);
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::DimensionMismatch);
    }
  }
}

TEST_CASE("product of factor systems") {
  const GroupModel m = catalog_entry("gray-D3");
  const FactorSystem& s = *m.system("spinor")->fs;
  const FactorSystem sq = multiply_factor_systems(s, s);
  CHECK(sq.is_trivial());
  const FactorSystem same = multiply_factor_systems(s, *m.system("vector")->fs);
  CHECK(same_factor_system(same, s, 1e-14));
  const GroupModel other = catalog_entry("gray-C2");
  try {
    multiply_factor_systems(s, *other.system("spinor")->fs);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::GroupMismatch);
  }
}
