#pragma once

#include <string>
#include <vector>

#include "magrep/corep.hpp"

namespace magrep {

/// ZYZ Euler angles: R = Rz(alpha) Ry(beta) Rz(gamma).
struct EulerAngles {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
};

/// Real 3x3 rotation for the given angles.
RMatrix rotation_3d(const EulerAngles& e);

/// exp(-i alpha Jz) exp(-i beta Jy) exp(-i gamma Jz) in the basis m = j, j-1, ..., -j.
/// Only twice_j = 1 and twice_j = 2 are supported.
CMatrix rotation_matrix(int twice_j, const EulerAngles& e);

/// Time reversal: theta|j,m> = (-1)^(j-m) |j,-m>, same basis order.
CMatrix time_reversal_matrix(int twice_j);

struct SpinExample {
  GroupPtr group;
  FactorSystemPtr factor_system;
  Corepresentation corep;
};

/// Magnetic group of the given rotations (plus theta times each one when
/// include_time_reversal), the spin-j matrices on it and the factor system
/// they carry. Rotations are identified as SO(3) elements, so two triples
/// giving the same rotation are rejected.
SpinExample build_spin_example(int twice_j, const std::vector<EulerAngles>& rotations,
                               bool include_time_reversal,
                               const std::vector<std::string>& names = {});

}  // namespace magrep
