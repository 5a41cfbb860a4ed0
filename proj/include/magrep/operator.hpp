#pragma once

#include "magrep/linalg.hpp"

namespace magrep {

/// A linear or antilinear operator on coordinate space. Antilinear operators
/// act as v -> matrix * conj(v).
struct Operator {
  CMatrix matrix;
  bool antilinear = false;

  CVector apply(const CVector& v) const { return matrix * bracket(v, antilinear); }

  /// The composition this * other (other acts first). Two antilinear factors
  /// give a linear operator with matrix A * conj(B).
  Operator then_after(const Operator& other) const {
    return {matrix * bracket(other.matrix, antilinear), antilinear != other.antilinear};
  }

  /// Scalar multiple c * this (scalar applied to the output).
  Operator scaled(cplx c) const { return {c * matrix, antilinear}; }
};

inline Operator compose(const Operator& outer, const Operator& inner) { return outer.then_after(inner); }

}  // namespace magrep
