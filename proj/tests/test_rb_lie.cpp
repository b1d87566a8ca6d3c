#include <doctest.h>

#include "oracle.hpp"
#include "support.hpp"
#include "wrb/rb_lie.hpp"

using namespace wrb;
using namespace support;

TEST_SUITE("rb_lie") {
  TEST_CASE("is_wrbo_lie examples") {
    for (const auto& c : lie_contexts())
      CHECK(is_wrbo_lie(LieRBOperator(c.ctx, 1, Matrix(c.ctx.dim_g(), c.ctx.dim_h()))).ok);
    Gen gen(31);
    const LieAction ab(LieAlgebra(2), LieAlgebra(2));
    for (int trial = 0; trial < 10; ++trial) CHECK(is_wrbo_lie(LieRBOperator(ab, gen.scalar(), gen.matrix(2, 2))).ok);
    CHECK(is_wrbo_lie(LieRBOperator(adjoint_lie_action(r2()), 1, Matrix::scalar(2, -1))).ok);
  }

  TEST_CASE("is_wrbo_lie agrees with the oracle identity") {
    for (const auto& c : lie_contexts())
      for (const auto& w : sweep_weights())
        for (const auto& t : all_matrices(c.ctx.dim_g(), c.ctx.dim_h(), entries_1()))
          CHECK(is_wrbo_lie(LieRBOperator(c.ctx, w, t)).ok == oracle::lie_rb_identity(c.ctx, w, t));
  }

  TEST_CASE("failing operators raise NotLieRotaBaxter") {
    const LieRBOperator T(adjoint_lie_action(r2()), 1, Matrix::scalar(2, 1));
    REQUIRE_FALSE(is_wrbo_lie(T).ok);
    CHECK_THROWS_AS(require_wrbo_lie(T, "test"), NotLieRotaBaxter);
    CHECK_THROWS_AS(cohomology_dims_lie(T, 2), NotLieRotaBaxter);
  }

  TEST_CASE("induced bracket") {
    const LieAction ad = adjoint_lie_action(r2());
    CHECK(induced_lie_bracket(LieRBOperator(ad, 1, Matrix(2, 2))).bracket == r2().bracket);
    Gen gen(32);
    const LieAction zero(r2(), LieAlgebra(2));
    Matrix line = gen.matrix(2, 2);  // image in span{x}, so [Tu, Tv] = 0
    line(1, 0) = line(1, 1) = 0;
    CHECK(induced_lie_bracket(LieRBOperator(zero, 0, line)).bracket.is_zero());
    for (const auto& T : verified_lie_operators(entries_1())) {
      CHECK(check_jacobi(induced_lie_bracket(T)).ok);
      CHECK(graph_is_subalgebra(T));
    }
  }

  TEST_CASE("derived bracket of T with itself") {
    Gen gen(33);
    for (const auto& c : lie_contexts()) {
      const std::size_t ng = c.ctx.dim_g(), nh = c.ctx.dim_h();
      const Matrix t = gen.matrix(ng, nh);
      const LieRBOperator T(c.ctx, gen.scalar(), t);
      const AltMap tt = lie_derived_bracket(T.as_map(), T.as_map(), c.ctx);
      for (std::size_t u = 0; u < nh; ++u)
        for (std::size_t v = 0; v < nh; ++v) {
          const Vec tu = t.column(u), tv = t.column(v);
          Vec expect = sub(t.apply(c.ctx.act(tu, unit_vec(nh, v))), t.apply(c.ctx.act(tv, unit_vec(nh, u))));
          expect = scaled(2, sub(expect, c.ctx.lie.br(tu, tv)));
          CHECK(tt.evaluate_basis(std::vector<std::size_t>{u, v}) == expect);
        }
      CHECK(lie_mc_defect(T) == delta_lambda(T.as_map(), c.ctx, T.weight) + Scalar(1, 2) * tt);
    }
  }

  TEST_CASE("graded antisymmetry and differential laws") {
    Gen gen(34);
    const LieAction ctx = adjoint_lie_action(r2());
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t m = gen.below(3), n = gen.below(3);
      const AltMap P = gen.alt(2, 2, m), Q = gen.alt(2, 2, n);
      CHECK(lie_derived_bracket(P, Q, ctx) == Scalar(-sign_pow(m * n)) * lie_derived_bracket(Q, P, ctx));
      const Scalar lambda = gen.scalar();
      CHECK(delta_lambda(delta_lambda(P, ctx, lambda), ctx, lambda).is_zero());
    }
    CHECK(lie_derived_bracket(AltMap(2, 2, 1), AltMap(2, 2, 1), ctx).is_zero());
    CHECK(delta_lambda(gen.alt(2, 2, 1), ctx, 0).is_zero());
    const LieAction ab(LieAlgebra(2), LieAlgebra(2));
    CHECK(delta_lambda(gen.alt(2, 2, 1), ab, 3).is_zero());
  }

  TEST_CASE("twisted and Chevalley-Eilenberg differentials") {
    Gen gen(35);
    for (const auto& T : verified_lie_operators(entries_1())) {
      CHECK(check_representation(rho_T(T)).ok);
      const std::size_t ng = T.action.dim_g(), nh = T.action.dim_h();
      for (std::size_t n = 0; n <= 3; ++n) {
        const AltMap f = gen.alt(nh, ng, n);
        const AltMap x = delta_T(f, T);
        CHECK(x == Scalar(sign_pow(n)) * ce_d(f, T));
        CHECK(delta_T(x, T).is_zero());
        CHECK(ce_d(ce_d(f, T), T).is_zero());
      }
    }
    const LieRBOperator Z(adjoint_lie_action(r2()), 0, Matrix(2, 2));
    CHECK(delta_T(gen.alt(2, 2, 1), Z).is_zero());
    CHECK(ce_d(gen.alt(2, 2, 1), Z).is_zero());
    CHECK(rho_T(Z).rho.is_zero());
  }

  TEST_CASE("rho_T with zero action is the adjoint of T") {
    Gen gen(36);
    const LieAction zero(r2(), LieAlgebra(2));
    // rank one, so [Tu, Tv] = 0 as the abelian module requires
    const Vec c = gen.vec(2);
    const Matrix t = Matrix::from_rows({{c[0], 2 * c[0]}, {c[1], 2 * c[1]}});
    const LieRBOperator T(zero, 1, t);
    REQUIRE(is_wrbo_lie(T).ok);
    const LieAction rep = rho_T(T);
    for (std::size_t u = 0; u < 2; ++u)
      for (std::size_t x = 0; x < 2; ++x)
        CHECK(rep.act(unit_vec(2, u), unit_vec(2, x)) == r2().br(t.column(u), unit_vec(2, x)));
  }

  TEST_CASE("Maurer-Cartan defect vanishes exactly on operators") {
    for (const auto& c : lie_contexts())
      for (const auto& w : sweep_weights())
        for (const auto& t : all_matrices(c.ctx.dim_g(), c.ctx.dim_h(), entries_1())) {
          const LieRBOperator T(c.ctx, w, t);
          const bool ok = is_wrbo_lie(T).ok;
          CHECK(lie_mc_defect(T).is_zero() == ok);
          CHECK(graph_is_subalgebra(T) == ok);
        }
  }

  TEST_CASE("cohomology across routes and against the oracle") {
    for (const auto& T : verified_lie_operators(entries_1())) {
      const auto tw = cohomology_dims_lie(T, 3);
      const auto ce = cohomology_dims_lie(T, 3, LieRoute::chevalley_eilenberg, Exec::serial);
      CHECK(tw.composes_to_zero);
      CHECK(tw.h_dims == ce.h_dims);
      CHECK(tw.h_dims == oracle::ce_h_dims(T.action, T.weight, T.t, 3));
    }
    const LieRBOperator Z(LieAction(LieAlgebra(1), LieAlgebra(1)), 0, Matrix(1, 1));
    CHECK(cohomology_dims_lie(Z, 3).h_dims == std::vector<std::size_t>{1, 1, 0, 0});
  }

  TEST_CASE("commutatorized one-dimensional example") {
    const RBOperator A(adjoint_bimodule(field()), 1, Matrix::scalar(1, -1));
    const LieRBOperator L = commutatorize_operator(A);
    CHECK(L.action.module.bracket.is_zero());
    CHECK(L.action.rho.is_zero());
    CHECK(is_wrbo_lie(L).ok);
    AltMap f(1, 1, 1);
    f.coeffs()[0] = 4;
    CHECK(delta_T(f, L).is_zero());
    CHECK(cohomology_dims_lie(L, 2).h_dims == std::vector<std::size_t>{1, 1, 0});
  }

  TEST_CASE("commutatorization preserves operators and induced structures") {
    for (const auto& T : verified_operators(entries_1())) {
      const LieRBOperator L = commutatorize_operator(T);
      CHECK(is_wrbo_lie(L).ok);
      CHECK(rho_T(L).rho == commutatorize_action(induced_bimodule_T(T)).rho);
      CHECK(induced_lie_bracket(L).bracket == commutatorize(induced_product(T)).bracket);
    }
  }

  TEST_CASE("bridge identity") {
    Gen gen(37);
    for (const auto& T : verified_operators(entries_1())) {
      const std::size_t na = T.action.dim_a(), nb = T.action.dim_b();
      for (std::size_t n = 0; n <= 3; ++n) CHECK(bridge_check(gen.tensor(nb, na, n), T));
    }
    const RBOperator T(adjoint_bimodule(dual_numbers()), 1, Matrix::scalar(2, -1));
    TensorMap sym(2, 2, 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t k = 0; k < 2; ++k) sym.value(i * 2 + j)[k] = Scalar(int(i + j + k));
    CHECK(bridge_check(sym, T));
  }

  TEST_CASE("Lie operator morphisms") {
    const LieRBOperator T(adjoint_lie_action(r2()), 1, Matrix::scalar(2, -1));
    const MorphismPair id{Matrix::identity(2), Matrix::identity(2)};
    CHECK(check_rb_morphism(id, T, T).ok);
    CHECK_FALSE(check_rb_morphism(id, T, LieRBOperator(T.action, 1, Matrix(2, 2))).ok);
  }
}
