#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "magrep/clebsch_gordan.hpp"
#include "magrep/operator.hpp"

namespace magrep {

struct ModelBlock {
  Corepresentation corep;
  std::size_t copies = 1;
  std::size_t offset = 0;
};

struct BasisLabel {
  std::size_t block = 0;
  std::size_t copy = 0;
  std::size_t m = 0;
};

/// Direct sum of corep blocks; basis (block, copy, m) with copy-major order
/// inside a block. Wigner operators are block diagonal.
class ModelSpace {
 public:
  ModelSpace(GroupPtr group, std::vector<ModelBlock> blocks);

  const MagneticGroup& group() const { return *group_; }
  std::size_t dimension() const { return labels_.size(); }
  const std::vector<ModelBlock>& blocks() const { return blocks_; }
  const std::vector<BasisLabel>& labels() const { return labels_; }
  const WignerRealization& wigner() const { return wigner_; }

  std::size_t index(std::size_t block, std::size_t copy, std::size_t m) const;
  CVector basis_vector(std::size_t block, std::size_t copy, std::size_t m) const;
  /// First block whose corep carries the label; UnknownLabel if none.
  std::size_t block_of(const std::string& label) const;
  /// Factor system of the block holding basis index i.
  const FactorSystem& factor_system_at(std::size_t i) const;

 private:
  GroupPtr group_;
  std::vector<ModelBlock> blocks_;
  std::vector<BasisLabel> labels_;
  WignerRealization wigner_;
};

/// GroupMismatch if the coreps live on different groups.
ModelSpace build_model_space(const std::vector<std::pair<Corepresentation, std::size_t>>& blocks);

/// Components T_m of an irreducible tensor operator for `corep`.
struct TensorOperatorSet {
  Corepresentation corep;
  std::vector<CMatrix> components;
  bool antilinear = false;

  Operator component(std::size_t m) const { return {components.at(m), antilinear}; }
};

/// lambda(a^-1, a)^{*[T][a]} O_a T O_{a^-1}, with lambda taken from the block
/// T acts on (column block).
Operator transform_operator(const ModelSpace& space, ElementId a, const Operator& t);

/// sum over M of D_{m m0}(a)^[T] transform_operator(a, T).
CMatrix project_tensor(const ModelSpace& space, const CMatrix& t_raw, const Corepresentation& target,
                       std::size_t m, std::size_t m0, bool antilinear);

struct ProjectedTensor {
  TensorOperatorSet set;
  /// Max entry change made by the final projection onto covariant sets, over
  /// block pairs whose factor systems fit the target (expected zero up to
  /// rounding) and over the remaining pairs.
  double correction_compatible = 0.0;
  double correction_incompatible = 0.0;
};

/// All components from project_tensor, followed by the orthogonal projection
/// onto the real subspace of covariant sets. Block pairs whose factor systems
/// do not match the target's come out as zero.
ProjectedTensor project_tensor_set(const ModelSpace& space, const CMatrix& t_raw, const Corepresentation& target,
                                   std::size_t m0, bool antilinear);

/// Max over a and m of |transform(a, T_m) - sum_n D_{nm}(a)^{*[T]} T_n|.
double verify_tensor_covariance(const ModelSpace& space, const TensorOperatorSet& t);

struct CompositionCheck {
  double residual = 0.0;          ///< with lambda_dst(a,b)^[ab] lambda_src(b^-1,a^-1)^[T]
  double printed_residual = 0.0;  ///< with the extra lambda(a,b)^[ab] of the single-system printed form
  double max_ratio_deviation = 0.0;  ///< max |ratio - 1|
};

/// Compares O_a O_b T O_{b^-1} O_{a^-1} with ratio * O_ab T O_{(ab)^-1} for every component.
CompositionCheck compose_transform_check(const ModelSpace& space, const TensorOperatorSet& t, ElementId a,
                                         ElementId b);

/// <bra | T ket>, with ket conjugated first when T is antilinear.
cplx matrix_element(const CVector& bra, const Operator& t, const CVector& ket);

/// E(m1, m2, m3) = <Phi1_m1 | T_m2 Phi3_m3>, stored row-major in (m1, m2, m3).
struct ElementTable {
  std::array<std::string, 3> labels;
  std::array<std::size_t, 3> dims{};
  std::vector<cplx> values;

  cplx& at(std::size_t m1, std::size_t m2, std::size_t m3) { return values[(m1 * dims[1] + m2) * dims[2] + m3]; }
  cplx at(std::size_t m1, std::size_t m2, std::size_t m3) const {
    return values[(m1 * dims[1] + m2) * dims[2] + m3];
  }
  double max_abs() const;
};

ElementTable matrix_elements(const ModelSpace& space, const TensorOperatorSet& t, std::size_t bra_block,
                             std::size_t bra_copy, std::size_t ket_block, std::size_t ket_copy);

enum class Variant { L, AL };

/// E arranged for the CG family of the variant: rows (m1 m2), columns m3 for L;
/// rows (m1 m3), columns m2 for AL.
CMatrix arrange(const ElementTable& e, Variant v);

struct ReducedMatrixElement {
  cplx value;
  Variant variant = Variant::L;
  std::array<std::string, 3> labels;
  std::size_t tau = 0;
};

/// sum conj(CG) * E. The CG triple must be (1, 2, 3) for L and (1, 3, 2) for AL;
/// TripleMismatch otherwise.
ReducedMatrixElement reduced_matrix_element(Variant v, const CGTable& cg, const ElementTable& e);

struct WignerEckartReport {
  std::array<std::string, 3> labels;
  std::array<char, 3> wigner_types{};
  Variant variant = Variant::L;
  bool compatible = true;
  std::size_t kernel_dim_real = 0;
  bool essentially_unique = false;
  std::size_t multiplicity = 0;
  bool type_b_involved = false;
  /// |E - (1/d) red K| with K the first CG family.
  double factorization_defect = 0.0;
  /// Residual of E after least squares over the real span of all CG solutions.
  double span_residual = 0.0;
  /// factorization_defect when the coupling is essentially unique, span_residual otherwise.
  double max_defect = 0.0;
  double max_element = 0.0;
  std::vector<cplx> reduced;
  std::string note;
};

/// Elements from the first copy of the D1 and D3 blocks (located by label).
/// If no CG family exists every element must vanish within 1e-10; otherwise
/// SelectionRuleViolation.
WignerEckartReport verify_wigner_eckart(Variant v, const Corepresentation& d1, const Corepresentation& d2,
                                        const Corepresentation& d3, const TensorOperatorSet& t,
                                        const ModelSpace& space);

struct SumRuleReport {
  double symmetrized_residual = 0.0;
  double reality_defect = 0.0;
  cplx reduced;
};

/// Linear variant. The left side of the sum rule is assembled from elements
/// taken between explicitly transformed states, sum over u in G and a in M - G.
SumRuleReport sum_rule_check(const Corepresentation& d1, const Corepresentation& d2, const Corepresentation& d3,
                             const TensorOperatorSet& t, const ModelSpace& space);

/// Max over (m1, m2, m3) of the difference between the element in transformed
/// states and operator, <O_a Phi1_m1 | transform(a, T_m2) O_a Phi3_m3>, and the
/// D-weighted sum of untransformed elements.
double transformed_element_residual(const ModelSpace& space, const TensorOperatorSet& t, std::size_t bra_block,
                                    std::size_t ket_block, ElementId a);

/// sum_tau a_tau^[T] E_tau; LengthMismatch if the counts differ or tables disagree in shape.
ElementTable mixed_state_expansion(const std::vector<cplx>& coeffs, const std::vector<ElementTable>& per_tau,
                                   bool antilinear = false);

/// Pseudo-random complex matrix with standard normal parts (mt19937_64).
CMatrix random_matrix(Eigen::Index rows, Eigen::Index cols, std::uint64_t seed);

}  // namespace magrep
