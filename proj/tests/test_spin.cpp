#include <cmath>
#include <numbers>

#include "doctest.h"
#include "magrep/error.hpp"
#include "magrep/spin.hpp"
#include "oracles.hpp"

using namespace magrep;

namespace {

constexpr double pi = std::numbers::pi;

ErrorKind kind_of(int twice_j, const std::vector<EulerAngles>& r, bool t) {
  try {
    build_spin_example(twice_j, r, t);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("accepted");
  return ErrorKind::NotClosed;
}

}  // namespace

TEST_CASE("closed-form rotation matrices agree with the exponential series") {
  const std::vector<EulerAngles> angles{{0.3, 1.1, -0.7}, {pi, pi / 2, 0.0}, {2.0, 3.0, 5.5}, {0, 0, 0}};
  for (int tj : {1, 2})
    for (const auto& e : angles) {
      const CMatrix ref = oracle::rotation_series(tj, e.alpha, e.beta, e.gamma);
      CHECK((rotation_matrix(tj, e) - ref).cwiseAbs().maxCoeff() <= 1e-13);
    }
}

TEST_CASE("spin-1 matrices reproduce the 3d rotation in the spherical basis") {
  const EulerAngles e{0.4, 0.9, -1.3};
  const RMatrix r = rotation_3d(e);
  CHECK((r * r.transpose() - RMatrix::Identity(3, 3)).cwiseAbs().maxCoeff() <= 1e-14);
  CHECK(r.determinant() == doctest::Approx(1.0));
  // spherical components e_{+1}, e_0, e_{-1} as columns of U
  const double s = 1 / std::sqrt(2.0);
  CMatrix u(3, 3);
  u << cplx(-s, 0), 0, cplx(s, 0), cplx(0, -s), 0, cplx(0, -s), 0, 1, 0;
  const CMatrix d = u.adjoint() * r.cast<cplx>() * u;
  CHECK((d - rotation_matrix(2, e)).cwiseAbs().maxCoeff() <= 1e-13);
}

TEST_CASE("time reversal sign pattern") {
  const CMatrix h = time_reversal_matrix(1);
  // <1/2,-1/2| theta |1/2,1/2> = 1 and theta|1/2,-1/2> = -|1/2,1/2>
  CHECK(h(1, 0) == cplx(1, 0));
  CHECK(h(0, 1) == cplx(-1, 0));
  CHECK(h(0, 0) == cplx(0, 0));
  CHECK(h(1, 1) == cplx(0, 0));
  // theta^2 = theta conj(theta)
  CHECK(((h * h.conjugate()) + CMatrix::Identity(2, 2)).cwiseAbs().maxCoeff() == 0.0);
  const CMatrix one = time_reversal_matrix(2);
  CHECK(((one * one.conjugate()) - CMatrix::Identity(3, 3)).cwiseAbs().maxCoeff() == 0.0);
  CHECK(one(2, 0) == cplx(1, 0));
  CHECK(one(1, 1) == cplx(-1, 0));
  CHECK(one(0, 2) == cplx(1, 0));
}

TEST_CASE("time reversal commutes with rotations") {
  for (int tj : {1, 2}) {
    const CMatrix h = time_reversal_matrix(tj);
    const CMatrix d = rotation_matrix(tj, {0.5, 2.1, -0.2});
    CHECK((h * d.conjugate() - d * h).cwiseAbs().maxCoeff() <= 1e-14);
  }
}

TEST_CASE("spin examples carry the expected factor systems") {
  const std::vector<EulerAngles> c2{{0, 0, 0}, {pi, 0, 0}};
  const SpinExample half = build_spin_example(1, c2, true);
  const auto& g = *half.group;
  REQUIRE(g.order() == 4);
  const ElementId t = *g.find("T"), r = *g.find("g1");
  CHECK((*half.factor_system)(t, t) == cplx(-1, 0));
  CHECK((*half.factor_system)(r, r) == cplx(-1, 0));
  CHECK(validate_factor_system(*half.factor_system).passed);
  CHECK(verify_corep(half.corep).passed);
  CHECK((half.corep.matrix(t) - time_reversal_matrix(1)).cwiseAbs().maxCoeff() == 0.0);
  const ElementId tr = *g.find("Tg1");
  CHECK((half.corep.matrix(tr) - time_reversal_matrix(1) * half.corep.matrix(r).conjugate()).cwiseAbs().maxCoeff() <=
        1e-15);

  const SpinExample one = build_spin_example(2, c2, true);
  CHECK(one.factor_system->is_trivial());
  CHECK(verify_corep(one.corep).passed);

  const SpinExample plain = build_spin_example(1, c2, false);
  CHECK_FALSE(plain.group->has_antiunitary());
  CHECK(verify_corep(plain.corep).passed);
}

TEST_CASE("spin example errors") {
  CHECK(kind_of(1, {{0, 0, 0}, {2 * pi, 0, 0}}, true) == ErrorKind::NotClosed);
  CHECK(kind_of(1, {{pi, 0, 0}}, true) == ErrorKind::NotClosed);
  CHECK(kind_of(1, {{0, 0, 0}, {pi / 2, 0, 0}}, false) == ErrorKind::NotClosed);
  CHECK(kind_of(1, {{0, 0, 0}, {std::nan(""), 0, 0}}, true) == ErrorKind::BadAngle);
  CHECK(kind_of(3, {{0, 0, 0}}, true) == ErrorKind::BadAngle);
}
