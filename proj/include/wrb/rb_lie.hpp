#pragma once

// Weighted relative Rota-Baxter operators T : h -> g over Lie algebras, the
// dgLa (Hom(wedge^* h, g), {[,]}, delta), the twisted differential and its
// Chevalley-Eilenberg description, and the skew-symmetrization bridge from
// the associative side.

#include <cstddef>
#include <vector>

#include "wrb/algebra.hpp"
#include "wrb/complex.hpp"
#include "wrb/multilinear.hpp"
#include "wrb/rb_assoc.hpp"

namespace wrb {

struct LieRBOperator {
  LieAction action;
  Scalar weight;
  Matrix t;  // dim g x dim h

  LieRBOperator() = default;
  LieRBOperator(LieAction action, Scalar weight, Matrix t);

  AltMap as_map() const { return AltMap::from_matrix(t); }

  friend bool operator==(const LieRBOperator&, const LieRBOperator&) = default;
};

/// Same as NotRotaBaxter for the Lie identity; the defect is an AltMap.
class NotLieRotaBaxter : public PreconditionError {
 public:
  NotLieRotaBaxter(const std::string& what, AltMap defect)
      : PreconditionError(what), defect_(std::move(defect)) {}
  const AltMap& defect() const { return defect_; }

 private:
  AltMap defect_;
};

struct LieRBCheck {
  bool ok = true;
  /// [Tu,Tv] - T(rho(Tu)v - rho(Tv)u + lambda [u,v]) on pairs p < q.
  AltMap defect;
  CheckResult where;
};

LieRBCheck is_wrbo_lie(const LieRBOperator& T);
void require_wrbo_lie(const LieRBOperator& T, const char* operation);

/// [u,v]_T = rho(Tu)v - rho(Tv)u + lambda [u,v]_h
LieAlgebra induced_lie_bracket(const LieRBOperator& T);

/// pi_g + rho as a skew bilinear map on W = g (+) h.
AltMap lie_structure_element(const LieAction& ctx);
/// lambda pi_h on W.
AltMap lie_module_element(const LieAction& ctx, const Scalar& lambda);

/// (-1)^m [[pi_g + rho, P]_NR, Q]_NR restricted to Hom(wedge^* h, g).
AltMap lie_derived_bracket(const AltMap& P, const AltMap& Q, const LieAction& ctx, Exec exec = Exec::parallel);
/// -[lambda pi_h, f]_NR restricted to Hom(wedge^* h, g).
AltMap delta_lambda(const AltMap& f, const LieAction& ctx, const Scalar& lambda, Exec exec = Exec::parallel);
/// delta(f) + {[T, f]}
AltMap delta_T(const AltMap& f, const LieRBOperator& T, Exec exec = Exec::parallel);

/// delta(T) + 1/2 {[T, T]}
AltMap lie_mc_defect(const LieRBOperator& T);
/// delta_T(T') + 1/2 {[T', T']}; requires T to be Rota-Baxter.
AltMap lie_twisted_mc_defect(const LieRBOperator& T, const Matrix& t_prime);

/// Representation rho^T(u)(x) = T(rho(x)u) + [Tu, x] of (h, [,]_T) on g.
/// The returned action's `lie` is (h, [,]_T) and its `module` is g with the
/// zero bracket; check it with check_representation.
LieAction rho_T(const LieRBOperator& T);

/// Chevalley-Eilenberg coboundary of a Lie algebra L with coefficients in a
/// representation M (given as an action whose `lie` is L, `module` is M).
AltMap ce_coboundary(const AltMap& f, const LieAction& rep, Exec exec = Exec::parallel);
/// Chevalley-Eilenberg coboundary of (h, [,]_T) with coefficients in (g, rho^T).
AltMap ce_d(const AltMap& f, const LieRBOperator& T, Exec exec = Exec::parallel);

enum class LieRoute { twisted, chevalley_eilenberg };

CochainComplexReport cohomology_dims_lie(const LieRBOperator& T, std::size_t max_degree,
                                         LieRoute route = LieRoute::twisted, Exec exec = Exec::parallel);

std::vector<Vec> graph_basis(const LieRBOperator& T);
bool graph_is_subalgebra(const LieRBOperator& T);

/// The same linear map over the commutator algebras.
LieRBOperator commutatorize_operator(const RBOperator& T);

/// S_{n+1}(d_H f) = delta_CE(S_n f), the Lie side built from the commutator
/// of (B, ._T) acting on A by l^T - r^T.
bool bridge_check(const TensorMap& f, const RBOperator& T, Exec exec = Exec::parallel);

/// (phi, psi) Lie morphisms with phi T = T' psi and psi(rho(x)u) = rho(phi x) psi(u).
CheckResult check_rb_morphism(const MorphismPair& pair, const LieRBOperator& T, const LieRBOperator& Tp);

}  // namespace wrb
