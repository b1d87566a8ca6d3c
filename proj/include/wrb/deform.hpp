#pragma once

// Linear, formal (truncated) and finite-order deformations of a weighted
// relative Rota-Baxter operator: equivalences, Nijenhuis elements, the
// obstruction 2-cocycle and extension by solving d_T(x) = Ob.

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "wrb/rb_assoc.hpp"

namespace wrb {

/// T_t = T + t T_1 + ... + t^N T_N
struct DeformationData {
  RBOperator base;
  std::vector<Matrix> terms;  // T_1 .. T_N

  std::size_t order() const { return terms.size(); }
  /// T_i with T_0 = base.t
  const Matrix& term(std::size_t i) const { return i == 0 ? base.t : terms.at(i - 1); }

  friend bool operator==(const DeformationData&, const DeformationData&) = default;
};

/// phi_t = id + t(l_a0 - r_a0) + sum_{i>=2} t^i phi_i, psi_t likewise on B.
struct EquivalenceData {
  Vec a0;
  std::vector<Matrix> phi;  // phi_2, phi_3, ...
  std::vector<Matrix> psi;  // psi_2, psi_3, ...

  friend bool operator==(const EquivalenceData&, const EquivalenceData&) = default;
};

struct LinearDefReport {
  bool ok = true;
  bool lin1 = true;
  bool lin2 = true;
  /// d_T(T_1) = 0
  bool cocycle = true;
  /// T_1 is a relative Rota-Baxter operator of weight 0
  bool weight_zero_rb = true;
  CheckResult where;
};

LinearDefReport check_linear_def(const RBOperator& T, const Matrix& t1);

/// Values of c used to spot-check that T + c T_1 is Rota-Baxter.
const std::array<Scalar, 5>& deformation_samples();
bool linear_def_holds_at_samples(const RBOperator& T, const Matrix& t1);

struct EquivReport {
  bool ok = true;
  bool equiv1 = true;
  bool equiv2 = true;
  bool equiv3 = true;
  /// T_1 - T_1' = d_T(a0); only meaningful when ok
  bool difference_is_dT_a0 = false;
  /// T_1 - T_1' lies in the image of d_T on degree 0
  bool cohomologous = false;
  CheckResult where;
};

EquivReport check_equiv_data(const RBOperator& T, const Matrix& t1, const Matrix& t1p, const Vec& a0);

/// phi_t, psi_t form a morphism T_t -> T'_t modulo t^{order+1}.
CheckResult check_formal_equivalence(const DeformationData& d, const DeformationData& dp,
                                     const EquivalenceData& eq, std::size_t order);

/// d_T(a0) as a matrix B -> A.
Matrix d_T_element(const RBOperator& T, const Vec& a0);

CheckResult check_nijenhuis(const RBOperator& T, const Vec& a0);
bool is_nijenhuis(const RBOperator& T, const Vec& a0);
/// T_1 = d_T(a0); throws PreconditionError unless a0 is Nijenhuis.
Matrix trivial_def_from_nijenhuis(const RBOperator& T, const Vec& a0);

struct OrderReport {
  bool ok = true;
  /// smallest n in 1..N where the order-n equation fails
  std::optional<std::size_t> first_failing;
};

/// d_T(T_n) + 1/2 sum_{i+j=n, i,j>=1} [[T_i, T_j]] for n >= 1.
TensorMap order_residual(const DeformationData& d, std::size_t n);
/// sum_{i+j=n} T_i(u)T_j(v) - T_i(T_j(u).v + u.T_j(v)) - lambda T_n(u.v).
TensorMap deformation_equation_defect(const DeformationData& d, std::size_t n);

OrderReport check_order_N(const DeformationData& d);
/// Same verdict computed from the expanded equations instead of d_T.
OrderReport check_order_N_expanded(const DeformationData& d);

struct ObstructionReport {
  TensorMap ob;
  bool cocycle = false;
};

/// -1/2 sum_{i+j=N+1, i,j>=1} [[T_i, T_j]]; requires a valid order-N deformation.
ObstructionReport obstruction(const DeformationData& d);

struct ExtensionResult {
  std::optional<Matrix> next;
  ObstructionReport obstruction;
  std::size_t rank_d1 = 0;
  std::size_t rank_augmented = 0;
};

ExtensionResult try_extend(const DeformationData& d, Exec exec = Exec::parallel);

struct RigidityReport {
  std::size_t dim_z1 = 0;
  std::size_t dim_b1 = 0;
  /// rank of span{d_T(a0)} over the Nijenhuis candidates
  std::size_t nijenhuis_span = 0;
  std::size_t nijenhuis_count = 0;
  /// dim Z^1 equals the span of d_T(Nij); a spot check, not a proof
  bool spans_z1 = false;
};

RigidityReport rigidity_report(const RBOperator& T, const std::vector<Vec>& candidates);
/// All elements of A with coordinates in {-1, 0, 1}.
std::vector<Vec> small_elements(std::size_t dim);

}  // namespace wrb
