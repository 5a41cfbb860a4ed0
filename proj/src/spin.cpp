#include "magrep/spin.hpp"

#include <cmath>

#include "magrep/error.hpp"

namespace magrep {

namespace {

constexpr double kSameRotation = 1e-8;
constexpr double kSnap = 1e-12;

RMatrix rz(double a) {
  RMatrix m = RMatrix::Identity(3, 3);
  m(0, 0) = std::cos(a);
  m(0, 1) = -std::sin(a);
  m(1, 0) = std::sin(a);
  m(1, 1) = std::cos(a);
  return m;
}

RMatrix ry(double b) {
  RMatrix m = RMatrix::Identity(3, 3);
  m(0, 0) = std::cos(b);
  m(0, 2) = std::sin(b);
  m(2, 0) = -std::sin(b);
  m(2, 2) = std::cos(b);
  return m;
}

void check_spin(int twice_j) {
  if (twice_j != 1 && twice_j != 2)
    throw Error(ErrorKind::BadAngle, "only j = 1/2 and j = 1 are supported");
}

// Rounds values within kSnap of 1, -1, i, -i onto them.
cplx snap(cplx z) {
  for (cplx c : {cplx(1, 0), cplx(-1, 0), cplx(0, 1), cplx(0, -1)})
    if (std::abs(z - c) < kSnap) return c;
  return z;
}

}  // namespace

RMatrix rotation_3d(const EulerAngles& e) { return rz(e.alpha) * ry(e.beta) * rz(e.gamma); }

CMatrix rotation_matrix(int twice_j, const EulerAngles& e) {
  check_spin(twice_j);
  if (!std::isfinite(e.alpha) || !std::isfinite(e.beta) || !std::isfinite(e.gamma))
    throw Error(ErrorKind::BadAngle, "Euler angles must be finite");
  const int n = twice_j + 1;
  CMatrix d(n, n);
  if (twice_j == 1) {
    const double c = std::cos(e.beta / 2), s = std::sin(e.beta / 2);
    d << c, -s, s, c;
  } else {
    const double c = std::cos(e.beta), s = std::sin(e.beta), r = std::sqrt(0.5);
    d << (1 + c) / 2, -s * r, (1 - c) / 2,
         s * r, c, -s * r,
         (1 - c) / 2, s * r, (1 + c) / 2;
  }
  CMatrix out(n, n);
  for (int row = 0; row < n; ++row)
    for (int col = 0; col < n; ++col) {
      // m = j - index, in units of 1/2
      const double m_row = (twice_j - 2 * row) / 2.0, m_col = (twice_j - 2 * col) / 2.0;
      out(row, col) = std::polar(1.0, -e.alpha * m_row) * d(row, col) * std::polar(1.0, -e.gamma * m_col);
    }
  return out;
}

CMatrix time_reversal_matrix(int twice_j) {
  check_spin(twice_j);
  const int n = twice_j + 1;
  CMatrix t = CMatrix::Zero(n, n);
  for (int col = 0; col < n; ++col) {
    const int j_minus_m = col;  // (2j - 2m) / 2 with m = j - col
    t(n - 1 - col, col) = (j_minus_m % 2 == 0) ? 1.0 : -1.0;
  }
  return t;
}

SpinExample build_spin_example(int twice_j, const std::vector<EulerAngles>& rotations,
                               bool include_time_reversal, const std::vector<std::string>& names) {
  check_spin(twice_j);
  if (rotations.empty()) throw Error(ErrorKind::NotClosed, "no rotations given");
  if (!names.empty() && names.size() != rotations.size())
    throw Error(ErrorKind::LengthMismatch, "one name per rotation required");

  std::vector<RMatrix> so3;
  std::vector<CMatrix> lifts;
  for (const auto& e : rotations) {
    lifts.push_back(rotation_matrix(twice_j, e));
    so3.push_back(rotation_3d(e));
  }
  const std::size_t nr = rotations.size();
  auto find = [&](const RMatrix& r) -> std::size_t {
    for (std::size_t k = 0; k < nr; ++k)
      if ((so3[k] - r).cwiseAbs().maxCoeff() < kSameRotation) return k;
    return nr;
  };
  for (std::size_t k = 0; k < nr; ++k)
    if (find(so3[k]) != k)
      throw Error(ErrorKind::NotClosed, "rotations " + std::to_string(find(so3[k])) + " and " +
                                            std::to_string(k) + " are the same element of SO(3)");
  const std::size_t id = find(RMatrix::Identity(3, 3));
  if (id == nr) throw Error(ErrorKind::NotClosed, "rotation list lacks the identity");

  // Put the identity first with the exact unit matrix as its lift.
  std::vector<std::size_t> order{id};
  for (std::size_t k = 0; k < nr; ++k)
    if (k != id) order.push_back(k);
  const int dim = twice_j + 1;
  std::vector<RMatrix> rot;
  std::vector<CMatrix> mats;
  std::vector<std::string> labels;
  for (std::size_t k : order) {
    rot.push_back(so3[k]);
    mats.push_back(k == id ? CMatrix(CMatrix::Identity(dim, dim)) : lifts[k]);
    labels.push_back(names.empty() ? (k == id ? "E" : "g" + std::to_string(k)) : names[k]);
  }
  so3 = rot;

  const std::size_t n = include_time_reversal ? 2 * nr : nr;
  GroupSpec spec;
  const CMatrix theta = time_reversal_matrix(twice_j);
  std::vector<CMatrix> all = mats;
  spec.names = labels;
  spec.antiunitary.assign(nr, false);
  if (include_time_reversal) {
    for (std::size_t k = 0; k < nr; ++k) {
      all.push_back(theta * mats[k].conjugate());
      spec.names.push_back(k == 0 ? std::string("T") : "T" + labels[k]);
      spec.antiunitary.push_back(true);
    }
  }
  spec.product_table.assign(n, std::vector<ElementId>(n, 0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t k = find(so3[a % nr] * so3[b % nr]);
      if (k == nr)
        throw Error(ErrorKind::NotClosed, "product of " + spec.names[a] + " and " + spec.names[b] +
                                              " is not in the rotation list");
      const bool anti = (a >= nr) != (b >= nr);
      spec.product_table[a][b] = anti ? k + nr : k;
    }
  GroupPtr group = build_group(spec);

  std::vector<cplx> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const ElementId ab = group->product(a, b);
      const CMatrix ratio = all[a] * bracket(all[b], group->antiunitary(a)) * all[ab].adjoint();
      const cplx mu = ratio(0, 0);
      if (max_abs(ratio - mu * CMatrix::Identity(dim, dim)) > 1e-9)
        throw Error(ErrorKind::NotClosed, "spin matrices do not close up to a phase");
      table[a * n + b] = snap(bracket(mu, group->antiunitary(ab)));
    }
  auto fs = std::make_shared<const FactorSystem>(group, std::move(table));
  Corepresentation corep(fs, std::move(all), "j=" + std::string(twice_j == 1 ? "1/2" : "1"));
  return SpinExample{group, fs, std::move(corep)};
}

}  // namespace magrep
