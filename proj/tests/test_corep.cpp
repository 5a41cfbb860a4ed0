#include <map>

#include "doctest.h"
#include "magrep/catalog.hpp"
#include "magrep/corep.hpp"
#include "magrep/error.hpp"
#include "magrep/wigner_eckart.hpp"
#include "oracles.hpp"

using namespace magrep;

namespace {

// max |D(a) D(b)^[a] - lambda(a,b)^[ab] D(ab)| by direct evaluation.
double product_law_oracle(const Corepresentation& d) {
  const auto& g = d.group();
  const auto& fs = d.factor_system();
  double worst = 0.0;
  for (ElementId a = 0; a < g.order(); ++a)
    for (ElementId b = 0; b < g.order(); ++b) {
      const ElementId ab = g.product(a, b);
      const CMatrix db = g.antiunitary(a) ? CMatrix(d.matrix(b).conjugate()) : d.matrix(b);
      const cplx l = g.antiunitary(ab) ? std::conj(fs(a, b)) : fs(a, b);
      worst = std::max(worst, (d.matrix(a) * db - l * d.matrix(ab)).cwiseAbs().maxCoeff());
    }
  return worst;
}

}  // namespace

TEST_CASE("builtin coreps satisfy the product law and are irreducible") {
  for (const auto& m : catalog())
    for (const auto& s : m.systems) {
      double restricted = 0.0;
      for (const auto& d : s.coreps) {
        CAPTURE(d.label());
        const CorepReport r = verify_corep(d);
        CHECK(r.passed);
        CHECK(r.max_product_residual <= 1e-10);
        CHECK(product_law_oracle(d) <= 1e-10);
        CHECK(oracle::intertwiner_dim(d, d) == endomorphism_dimension(d));
        CHECK(is_irreducible(d));
        const WignerType t = classify_wigner_type(d);
        const double dd = static_cast<double>(d.dimension());
        restricted += t == WignerType::a ? dd * dd : t == WignerType::b ? dd * dd / 4 : dd * dd / 2;
      }
      // the restrictions to G exhaust the irreps of G once each
      CHECK(restricted == doctest::Approx(static_cast<double>(m.group->unitary_subgroup().size())));
      for (std::size_t i = 0; i < s.coreps.size(); ++i)
        for (std::size_t j = i + 1; j < s.coreps.size(); ++j)
          CHECK(oracle::intertwiner_dim(s.coreps[i], s.coreps[j]) == 0);
    }
}

TEST_CASE("Wigner types and indicator on the vector systems") {
  const std::map<std::string, std::string> expected{
      {"gray-C3", "ac"}, {"gray-C4", "aac"}, {"gray-D3", "aaa"}, {"gray-C4v", "aaaaa"}};
  for (const auto& [name, types] : expected) {
    const GroupModel m = catalog_entry(name);
    const auto& cs = m.system("vector")->coreps;
    REQUIRE(cs.size() == types.size());
    for (std::size_t k = 0; k < cs.size(); ++k) {
      CHECK(to_char(classify_wigner_type(cs[k])) == types[k]);
      const double ind = types[k] == 'a' ? 1.0 : types[k] == 'b' ? -2.0 : 0.0;
      CHECK(wigner_indicator(cs[k]) == doctest::Approx(ind));
    }
  }
  const GroupModel c1 = catalog_entry("gray-C1");
  CHECK(classify_wigner_type(c1.system("spinor")->coreps.front()) == WignerType::b);
  CHECK(endomorphism_dimension(c1.system("spinor")->coreps.front()) == 4);
}

TEST_CASE("a perturbed matrix is caught") {
  const GroupModel m = catalog_entry("gray-C4");
  const Corepresentation& d = m.system("spinor")->coreps.front();
  auto mats = d.matrices();
  mats[2](0, 0) += 1e-3;
  const Corepresentation bad(d.factor_system_ptr(), mats, "bad");
  const CorepReport r = verify_corep(bad);
  CHECK_FALSE(r.passed);
  CHECK(r.max_product_residual > 1e-4);
  CHECK(product_law_oracle(bad) > 1e-4);
}

TEST_CASE("random unitary change of basis keeps everything invariant") {
  const GroupModel m = catalog_entry("gray-C4v");
  for (const auto& s : m.systems)
    for (const auto& d : s.coreps) {
      const CMatrix u = oracle::random_unitary(static_cast<Eigen::Index>(d.dimension()), 7);
      const Corepresentation e = d.change_basis(u);
      CHECK(verify_corep(e).passed);
      CHECK(equivalent(d, e));
      CHECK(classify_wigner_type(e) == classify_wigner_type(d));
      CHECK(intertwiners(d, e).size() == oracle::intertwiner_dim(d, e));
    }
}

TEST_CASE("Wigner operators compose through the factor system") {
  const GroupModel m = catalog_entry("gray-C6");
  const Corepresentation& d = m.system("spinor")->coreps.back();
  const WignerRealization w(d);
  std::vector<CVector> probes;
  for (std::uint64_t k = 0; k < 3; ++k) probes.push_back(random_matrix(static_cast<Eigen::Index>(d.dimension()), 1, k).col(0));
  CHECK(wigner_composition_residual(w, d.factor_system(), probes) <= 1e-12);
  CHECK((apply_wigner_operator(w, m.group->identity(), probes[0]) - probes[0]).norm() <= 1e-14);
  try {
    apply_wigner_operator(w, 0, CVector::Zero(5));
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DimensionMismatch);
  }
}

TEST_CASE("state projection") {
  const GroupModel m = catalog_entry("gray-C4v");
  const auto& cs = m.system("vector")->coreps;
  const Corepresentation& a = cs[0];
  const Corepresentation& e = cs[4];
  const ModelSpace space = build_model_space({{a, 1}, {e, 1}});
  const std::size_t n = space.dimension();
  const auto basis = [&](std::size_t i) {
    CVector v = CVector::Zero(static_cast<Eigen::Index>(n));
    v(static_cast<Eigen::Index>(i)) = 1.0;
    return v;
  };
  // a vector of the A block projected on E vanishes, and vice versa
  CHECK(project_state(space.wigner(), e, 0, 0, basis(0)).norm() <= 1e-12);
  CHECK(project_state(space.wigner(), a, 0, 0, basis(1)).norm() <= 1e-12);
  // the m0 vector of E projects onto a positive multiple of itself
  const CVector p = project_state(space.wigner(), e, 0, 0, basis(1));
  CHECK(p(1).real() > 1.0);
  CHECK((p - p(1) * basis(1)).norm() <= 1e-12);
  CHECK(project_state(space.wigner(), e, 1, 0, CVector::Zero(3)).norm() == 0.0);
  try {
    project_state(space.wigner(), e, 2, 0, basis(1));
    FAIL("accepted");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::IndexOutOfRange);
  }
}

TEST_CASE("Kronecker product of one-dimensional coreps") {
  const GroupModel m = catalog_entry("gray-C2");
  const auto& cs = m.system("vector")->coreps;
  const Corepresentation bb = kronecker(cs[1], cs[1]);
  CHECK(bb.dimension() == 1);
  CHECK(equivalent(bb, cs[0]));
  const Corepresentation& s = m.system("spinor")->coreps.front();
  const Corepresentation ss = kronecker(s, s);
  CHECK(ss.dimension() == 4);
  CHECK(ss.factor_system().is_trivial());
  CHECK(verify_corep(ss).passed);
}
