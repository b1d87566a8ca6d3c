#include <doctest.h>

#include "oracle.hpp"
#include "support.hpp"
#include "wrb/ybe.hpp"

using namespace wrb;
using namespace support;

TEST_SUITE("ybe") {
  TEST_CASE("modified associative Yang-Baxter examples") {
    const Algebra k = field();
    for (const auto& r : {Scalar(1), Scalar(-1)}) CHECK(maybe_defect(k, Matrix::scalar(1, r), 1).is_zero());
    const TensorMap bad = maybe_defect(k, Matrix::scalar(1, 2), 1);
    CHECK_FALSE(bad.is_zero());
    for (const auto& w : sweep_weights()) CHECK(maybe_defect(dual_numbers(), Matrix::scalar(2, w), w).is_zero());
  }

  TEST_CASE("T <-> R correspondence") {
    const RBOperator Z(adjoint_bimodule(dual_numbers()), 2, Matrix(2, 2));
    CHECK(rb_to_modified(Z) == Matrix::scalar(2, 2));
    const RBOperator T(adjoint_bimodule(field()), 1, Matrix::scalar(1, -1));
    CHECK(rb_to_modified(T) == Matrix::scalar(1, -1));
    CHECK(maybe_defect(field(), rb_to_modified(T), 1).is_zero());
    CHECK_THROWS_AS(rb_to_modified(RBOperator(unit_action(dual_numbers()), 1, Matrix(1, 2))), PreconditionError);
    for (const auto& c : assoc_contexts()) {
      if (!(c.ctx == adjoint_bimodule(c.ctx.algebra))) continue;
      for (const auto& w : sweep_weights())
        for (const auto& t : all_matrices(c.ctx.dim_a(), c.ctx.dim_b(), entries_1())) {
          const RBOperator op(c.ctx, w, t);
          const Matrix R = rb_to_modified(op);
          const bool rb = is_wrbo(op).ok;
          CHECK(maybe_defect(c.ctx.algebra, R, w).is_zero() == rb);
          if (rb)
            CHECK(modified_to_rb(c.ctx.algebra, R, w) == op);
          else
            CHECK_THROWS_AS(modified_to_rb(c.ctx.algebra, R, w), PreconditionError);
        }
    }
  }

  TEST_CASE("weighted associative Yang-Baxter examples") {
    const Algebra k = field();
    CHECK(waybe_check(TensorElement(k, Matrix(1, 1)), 1).ok);
    for (const auto& lambda : sweep_weights())
      for (const auto& c : {Scalar(0), Scalar(1), Scalar(-1), Scalar(1, 2), Scalar(2)}) {
        const WaybeCheck r = waybe_check(TensorElement(k, Matrix::scalar(1, c)), lambda);
        CHECK(r.defect == Vec{c * c - lambda * c});
        CHECK(r.ok == (c == 0 || c == lambda));
      }
    const RBOperator T = aybe_to_rb(TensorElement(k, Matrix::scalar(1, 1)), 1);
    CHECK(T.weight == -1);
    CHECK(T.t == Matrix::scalar(1, 1));
    CHECK(is_wrbo(T).ok);
    CHECK(aybe_to_rb(TensorElement(dual_numbers(), Matrix(2, 2)), 1).t.is_zero());
    CHECK_THROWS(waybe_check(TensorElement(nil_square(), Matrix(2, 2)), 1));
  }

  TEST_CASE("w-AYBE defect agrees with the oracle and solutions give operators") {
    Gen gen(51);
    std::size_t solutions = 0;
    for (const auto& a : {dual_numbers(), split_pair(), upper_triangular()})
      for (int trial = 0; trial < 10; ++trial) {
        const Matrix r = gen.matrix(a.dim(), a.dim());
        const Scalar lambda = gen.scalar();
        CHECK(waybe_check(TensorElement(a, r), lambda).defect == oracle::waybe_defect(a, r, lambda));
      }
    for (const auto& a : {dual_numbers(), split_pair()})
      for (const auto& lambda : sweep_weights())
        for (const auto& r : all_matrices(2, 2, entries_1())) {
          const TensorElement el(a, r);
          const WaybeCheck c = waybe_check(el, lambda);
          CHECK(c.ok == is_zero(oracle::waybe_defect(a, r, lambda)));
          if (!c.ok) continue;
          ++solutions;
          const RBOperator T = aybe_to_rb(el, lambda);
          CHECK(T.weight == -lambda);
          CHECK(is_wrbo(T).ok);
        }
    CHECK(solutions > 0);
  }

  TEST_CASE("modified classical Yang-Baxter") {
    const LieAlgebra ab(2);
    Gen gen(52);
    CHECK(mybe_defect(ab, gen.matrix(2, 2), gen.scalar()).is_zero());
    for (const auto& w : sweep_weights()) CHECK(mybe_defect(r2(), Matrix::scalar(2, w), w).is_zero());
    for (const auto& w : sweep_weights())
      for (const auto& t : all_matrices(2, 2, entries_1())) {
        const LieRBOperator T(adjoint_lie_action(r2()), w, t);
        CHECK(mybe_defect(r2(), rb_to_modified(T), w).is_zero() == is_wrbo_lie(T).ok);
      }
  }
}
