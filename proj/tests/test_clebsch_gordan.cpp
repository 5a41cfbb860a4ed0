#include "doctest.h"
#include "magrep/catalog.hpp"
#include "magrep/clebsch_gordan.hpp"
#include "magrep/error.hpp"
#include "oracles.hpp"

using namespace magrep;

namespace {

// max over a of |(D1 x D2)(a) K^[a] - K D3(a)| for the d1 d2 x d3 matrix K.
double intertwining_oracle(const Corepresentation& d1, const Corepresentation& d2, const Corepresentation& d3,
                           const CMatrix& k) {
  const auto& g = d1.group();
  double worst = 0.0;
  for (ElementId a = 0; a < g.order(); ++a) {
    const CMatrix p = kron(d1.matrix(a), d2.matrix(a));
    const CMatrix ka = g.antiunitary(a) ? CMatrix(k.conjugate()) : k;
    worst = std::max(worst, (p * ka - k * d3.matrix(a)).cwiseAbs().maxCoeff());
  }
  return worst;
}

}  // namespace

TEST_CASE("every compatible catalog triple: residuals, orthogonality, multiplicity oracle") {
  std::size_t triples = 0;
  for (const auto& m : catalog()) {
    std::vector<const Corepresentation*> all;
    for (const auto& s : m.systems)
      for (const auto& d : s.coreps) all.push_back(&d);
    for (const auto* d1 : all)
      for (const auto* d2 : all)
        for (const auto* d3 : all) {
          if (!factor_compatible(d1->factor_system(), d2->factor_system(), d3->factor_system())) continue;
          ++triples;
          CAPTURE(m.name);
          CAPTURE(d1->label() + " " + d2->label() + " " + d3->label());
          const CGSystem sys = build_cg_system(*d1, *d2, *d3);
          const auto fam = solve_cg(sys, *d3);
          const std::size_t hom = oracle::intertwiner_dim(kronecker(*d1, *d2), *d3);
          CHECK(fam.size() * oracle::intertwiner_dim(*d3, *d3) == hom);
          for (const auto& f : fam) {
            CHECK(cg_equation_residual(sys, f.coefficients) <= 1e-10);
            CHECK(cg_fixed_point_residual(sys, f.coefficients) <= 1e-10);
            CHECK(intertwining_oracle(*d1, *d2, *d3, f.as_matrix()) <= 1e-10);
          }
          if (!fam.empty()) CHECK(orthogonality_check(fam).passed);
          const UniquenessVerdict v = uniqueness_test(sys);
          CHECK(v.consistent);
          CHECK(v.kernel_dim_real == hom);
          CHECK(v.essentially_unique == (hom > 0 && v.complex_rank == 1));
        }
  }
  CHECK(triples > 500);
}

TEST_CASE("coupling to the trivial corep is a Kronecker delta") {
  for (const auto& m : catalog()) {
    const auto& vec = m.system("vector")->coreps;
    const Corepresentation& a = vec.front();
    for (const auto& s : m.systems)
      for (const auto& d : s.coreps) {
        CAPTURE(m.name + " " + d.label());
        const auto fam = solve_cg(a, d, d);
        REQUIRE(fam.size() == 1);
        const CMatrix k = fam.front().as_matrix();
        CHECK((k - CMatrix::Identity(k.rows(), k.cols())).cwiseAbs().maxCoeff() <= 1e-10);
      }
  }
}

TEST_CASE("gray C2: small cases") {
  const GroupModel m = catalog_entry("gray-C2");
  const auto& v = m.system("vector")->coreps;
  const auto& s = m.system("spinor")->coreps;
  const UniquenessVerdict bba = uniqueness_test(build_cg_system(v[1], v[1], v[0]));
  CHECK(bba.kernel_dim_real == 1);
  CHECK(bba.essentially_unique);
  CHECK(multiplicity(v[1], v[1], v[0]) == 1);
  CHECK(multiplicity(v[1], v[1], v[1]) == 0);
  // SA x SA is four dimensional: A and B twice each
  CHECK(multiplicity(s[0], s[0], v[0]) == 2);
  CHECK(multiplicity(s[0], s[0], v[1]) == 2);
  try {
    build_cg_system(v[0], s[0], v[0]);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IncompatibleFactors);
  }
}

TEST_CASE("type c target: kernel of two real dimensions is not essentially unique") {
  const GroupModel m = catalog_entry("gray-D3");
  const Corepresentation& sa = *m.corep("SA");
  const Corepresentation& a = *m.corep("A");
  const UniquenessVerdict v = uniqueness_test(build_cg_system(sa, sa, a));
  CHECK(v.kernel_dim_real == 2);
  CHECK(v.complex_rank == 2);
  CHECK_FALSE(v.essentially_unique);
  CHECK(v.determinants_vanish);
  const auto fam = solve_cg(sa, sa, a);
  CHECK(fam.size() == 2);
  CHECK(orthogonality_check(fam).max_cross <= 1e-12);
}

TEST_CASE("orthogonality rejects families of different triples") {
  const GroupModel m = catalog_entry("gray-C4");
  const auto f1 = solve_cg(*m.corep("A"), *m.corep("B"), *m.corep("B"));
  const auto f2 = solve_cg(*m.corep("B"), *m.corep("B"), *m.corep("A"));
  try {
    orthogonality_check({f1.front(), f2.front()});
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MixedTriples);
  }
}
