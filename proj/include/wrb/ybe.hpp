#pragma once

// Yang-Baxter type equations and their correspondences with weighted
// Rota-Baxter operators.

#include <cstddef>

#include "wrb/algebra.hpp"
#include "wrb/multilinear.hpp"
#include "wrb/rb_assoc.hpp"
#include "wrb/rb_lie.hpp"

namespace wrb {

/// r = sum coeffs(i, j) e_i (x) e_j in A (x) A.
struct TensorElement {
  Algebra algebra;
  Matrix coeffs;

  TensorElement() = default;
  TensorElement(Algebra a, Matrix c);

  friend bool operator==(const TensorElement&, const TensorElement&) = default;
};

/// R(a)R(b) - R(R(a)b + aR(b)) + lambda^2 ab on basis pairs.
TensorMap maybe_defect(const Algebra& a, const Matrix& R, const Scalar& lambda);

/// R = lambda id + 2T; T must act on an adjoint bimodule.
Matrix rb_to_modified(const RBOperator& T);
/// T = (R - lambda id) / 2 on the adjoint bimodule of `a`; R must solve the
/// modified equation.
RBOperator modified_to_rb(const Algebra& a, const Matrix& R, const Scalar& lambda);

struct WaybeCheck {
  bool ok = true;
  /// r13 r12 - r12 r23 + r23 r13 - lambda r13, indexed (i * n + j) * n + k.
  Vec defect;
};

/// Requires a unit on the algebra.
WaybeCheck waybe_check(const TensorElement& r, const Scalar& lambda);
/// a -> sum r_ij e_i a e_j, of weight -lambda; requires a solution.
RBOperator aybe_to_rb(const TensorElement& r, const Scalar& lambda);

/// [Rx,Ry] - R([Rx,y] + [x,Ry]) + lambda^2 [x,y] on pairs p < q.
AltMap mybe_defect(const LieAlgebra& g, const Matrix& R, const Scalar& lambda);
/// R = lambda id + 2T; T must act on an adjoint Lie action.
Matrix rb_to_modified(const LieRBOperator& T);

}  // namespace wrb
