#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "magrep/factor_system.hpp"
#include "magrep/operator.hpp"

namespace magrep {

enum class WignerType { a, b, c };

char to_char(WignerType t);

/// Matrices D(alpha) for every element of a magnetic group, tied to the
/// factor system they are meant to satisfy D(a) D(b)^[a] = lambda(a,b)^[ab] D(ab).
class Corepresentation {
 public:
  /// Throws DimensionMismatch unless there is one square matrix per element,
  /// all of the same size.
  Corepresentation(FactorSystemPtr fs, std::vector<CMatrix> matrices, std::string label,
                   bool irreducible = false, std::optional<WignerType> wigner_type = std::nullopt);

  std::size_t dimension() const { return static_cast<std::size_t>(matrices_.front().rows()); }
  const CMatrix& matrix(ElementId a) const { return matrices_.at(a); }
  const std::vector<CMatrix>& matrices() const { return matrices_; }
  const FactorSystem& factor_system() const { return *fs_; }
  const FactorSystemPtr& factor_system_ptr() const { return fs_; }
  const MagneticGroup& group() const { return fs_->group(); }
  const std::string& label() const { return label_; }
  bool irreducible() const { return irreducible_; }
  std::optional<WignerType> wigner_type() const { return wigner_type_; }

  Corepresentation relabeled(std::string label) const;
  /// U^dagger D(a) U^[a]: the same corep in the basis given by the columns of U.
  Corepresentation change_basis(const CMatrix& u) const;
  /// The action O_alpha v = D(alpha) v^[alpha] as an Operator.
  Operator wigner_operator(ElementId a) const;

 private:
  FactorSystemPtr fs_;
  std::vector<CMatrix> matrices_;
  std::string label_;
  bool irreducible_;
  std::optional<WignerType> wigner_type_;
};

struct CorepReport {
  double max_product_residual = 0.0;
  double max_unitarity_defect = 0.0;
  double identity_defect = 0.0;
  ElementId worst_a = 0;
  ElementId worst_b = 0;
  bool passed = true;
};

/// Product law over all |M|^2 pairs plus unitarity of every matrix.
CorepReport verify_corep(const Corepresentation& d, std::optional<double> tolerance = std::nullopt);

/// Coordinate realization of the Wigner operators: O_alpha v = D(alpha) v^[alpha].
class WignerRealization {
 public:
  explicit WignerRealization(const Corepresentation& d);
  WignerRealization(std::vector<CMatrix> matrices, std::vector<bool> antiunitary);

  std::size_t dimension() const { return static_cast<std::size_t>(matrices_.front().rows()); }
  std::size_t order() const { return matrices_.size(); }
  const CMatrix& matrix(ElementId a) const { return matrices_.at(a); }
  bool antiunitary(ElementId a) const { return antiunitary_.at(a); }
  Operator op(ElementId a) const { return {matrices_.at(a), antiunitary_.at(a)}; }

 private:
  std::vector<CMatrix> matrices_;
  std::vector<bool> antiunitary_;
};

/// D(alpha) v^[alpha]; DimensionMismatch if v has the wrong length.
CVector apply_wigner_operator(const WignerRealization& w, ElementId a, const CVector& v);

/// max over the given vectors of |O_a(O_b v) - lambda(a,b)^[ab] O_ab v|, for all pairs (a, b).
double wigner_composition_residual(const WignerRealization& w, const FactorSystem& fs,
                                   const std::vector<CVector>& probes);

/// sum_alpha conj(D_{m m0}(alpha)) O_alpha v over all of M. Real-linear in v.
CVector project_state(const WignerRealization& w, const Corepresentation& target, std::size_t m,
                      std::size_t m0, const CVector& v);

/// D1(a) kron D2(a) under the product factor system.
Corepresentation kronecker(const Corepresentation& d1, const Corepresentation& d2);

/// Real basis of {X : D1(a) X^[a] = X D2(a) for all a}.
std::vector<CMatrix> intertwiners(const Corepresentation& d1, const Corepresentation& d2);

/// Irreducible coreps with matching factor systems related by a unitary change of basis.
bool equivalent(const Corepresentation& d1, const Corepresentation& d2);

/// Real dimension of the self-intertwiner algebra (1, 2, 4 for types a, c, b).
std::size_t endomorphism_dimension(const Corepresentation& d);

/// True iff the only Hermitian self-intertwiners are real multiples of 1.
bool is_irreducible(const Corepresentation& d);

/// Wigner type from the restriction to G: complex commutant dimension of
/// D|G is 1 (a), 4 (b) or 2 (c). NotIrreducible if D is reducible.
WignerType classify_wigner_type(const Corepresentation& d);

/// sum over a in M - G of tr D(a^2), divided by |G|: 1, -2, 0 for a, b, c.
/// Only meaningful for the trivial factor system.
double wigner_indicator(const Corepresentation& d);

// ---- construction from irreducible representations of the unitary half ----

/// Matrices of a (projective) representation of G, one per id in
/// group.unitary_subgroup() order.
using SubgroupRep = std::vector<CMatrix>;

/// All pairwise-inequivalent irreducible coreps of M for the factor system,
/// built from the complete list of irreps of G (restricted factor system).
std::vector<Corepresentation> induce_coreps(const std::vector<SubgroupRep>& irreps_of_g,
                                            const FactorSystemPtr& fs,
                                            const std::string& label_prefix = "D");

/// Irreps of G for lambda restricted to G, split out of the lambda-regular
/// representation. Used to seed induce_coreps for builtin and file groups.
std::vector<SubgroupRep> regular_irreps_of_unitary_half(const FactorSystem& fs, std::uint64_t seed = 0);

}  // namespace magrep
