#pragma once

// Weighted relative Rota-Baxter operators T : B -> A over associative
// algebras, the differential graded Lie algebra (Hom(B^{(x)*}, A), [[,]], d)
// whose Maurer-Cartan elements they are, and the cohomology of T.
//
// Cochains of degree n are TensorMaps with source dim B, target dim A.

#include <cstddef>
#include <vector>

#include "wrb/algebra.hpp"
#include "wrb/complex.hpp"
#include "wrb/error.hpp"
#include "wrb/multilinear.hpp"

namespace wrb {

struct RBOperator {
  BimoduleAction action;
  Scalar weight;
  Matrix t;  // dim A x dim B

  RBOperator() = default;
  RBOperator(BimoduleAction action, Scalar weight, Matrix t);

  Vec apply(std::span<const Scalar> u) const { return t.apply(u); }
  TensorMap as_map() const { return TensorMap::from_matrix(t); }

  friend bool operator==(const RBOperator&, const RBOperator&) = default;
};

/// Raised when an operation requires a weighted Rota-Baxter operator and
/// gets something else. Carries the defect T(u)T(v) - T(T(u).v + u.T(v) + l u.v).
class NotRotaBaxter : public PreconditionError {
 public:
  NotRotaBaxter(const std::string& what, TensorMap defect)
      : PreconditionError(what), defect_(std::move(defect)) {}
  const TensorMap& defect() const { return defect_; }

 private:
  TensorMap defect_;
};

struct RBCheck {
  bool ok = true;
  /// LHS - RHS of the Rota-Baxter identity on basis pairs.
  TensorMap defect;
  CheckResult where;
};

RBCheck is_wrbo(const RBOperator& T);
void require_wrbo(const RBOperator& T, const char* operation);

/// u ._T v = T(u).v + u.T(v) + lambda u v on B.
Algebra induced_product(const RBOperator& T);

/// Derived bracket [[P, Q]] on Hom(B^{(x)*}, A), degrees >= 0.
TensorMap derived_bracket(const TensorMap& P, const TensorMap& Q, const BimoduleAction& ctx,
                          Exec exec = Exec::parallel);
/// (-1)^m [[mu_A + l + r, P]_G, Q]_G computed on V = A (+) B; degrees >= 1.
TensorMap derived_bracket_via_g(const TensorMap& P, const TensorMap& Q, const BimoduleAction& ctx,
                                Exec exec = Exec::parallel);

/// mu_A + l + r as a bilinear map on V = A (+) B.
TensorMap structure_element(const BimoduleAction& ctx);
/// lambda mu_B as a bilinear map on V.
TensorMap module_product_element(const BimoduleAction& ctx, const Scalar& lambda);

/// The weight differential; zero in degree 0.
TensorMap d_lambda(const TensorMap& f, const BimoduleAction& ctx, const Scalar& lambda,
                   Exec exec = Exec::parallel);
/// -[lambda mu_B, f]_G restricted to Hom(B^{(x)*}, A); degree >= 1.
TensorMap d_lambda_via_g(const TensorMap& f, const BimoduleAction& ctx, const Scalar& lambda,
                         Exec exec = Exec::parallel);

/// The twisted differential d_T = d + [[T, -]], from its closed five-term form.
TensorMap d_T(const TensorMap& f, const RBOperator& T, Exec exec = Exec::parallel);

/// d(T) + 1/2 [[T, T]]
TensorMap mc_defect(const RBOperator& T);
/// d_T(T') + 1/2 [[T', T']]; requires T to be Rota-Baxter.
TensorMap twisted_mc_defect(const RBOperator& T, const Matrix& t_prime);

/// A as a bimodule over (B, ._T) via l^T_u(a) = T(u)a - T(u.a),
/// r^T_u(a) = aT(u) - T(a.u). The returned action's `algebra` is (B, ._T),
/// its `module` is A carrying the zero product.
BimoduleAction induced_bimodule_T(const RBOperator& T);

/// Hochschild coboundary of an algebra R with coefficients in a bimodule M
/// (given as an action whose `algebra` is R and `module` is M).
TensorMap hochschild_coboundary(const TensorMap& f, const BimoduleAction& rm, Exec exec = Exec::parallel);
/// Hochschild coboundary of (B, ._T) with coefficients in (A, l^T, r^T).
TensorMap hochschild_d(const TensorMap& f, const RBOperator& T, Exec exec = Exec::parallel);

enum class AssocRoute { twisted, hochschild };

CochainComplexReport cohomology_dims(const RBOperator& T, std::size_t max_degree,
                                     AssocRoute route = AssocRoute::twisted, Exec exec = Exec::parallel);

/// Spanning set {(T(f_p), f_p)} of the graph of T inside A (+) B.
std::vector<Vec> graph_basis(const RBOperator& T);
bool graph_is_subalgebra(const RBOperator& T);

/// (phi, psi) from T to T': algebra morphisms, phi T = T' psi and
/// compatibility with both actions.
CheckResult check_rb_morphism(const MorphismPair& pair, const RBOperator& T, const RBOperator& Tp);

}  // namespace wrb
