#pragma once

// Small algebras, actions and seeded random maps shared by the tests and the
// acceptance binary.

#include <random>
#include <string>
#include <vector>

#include "wrb/algebra.hpp"
#include "wrb/multilinear.hpp"
#include "wrb/rb_assoc.hpp"
#include "wrb/rb_lie.hpp"

namespace support {

using wrb::Algebra;
using wrb::BimoduleAction;
using wrb::LieAction;
using wrb::LieAlgebra;
using wrb::Matrix;
using wrb::Scalar;

inline Algebra field() {
  Algebra a(1);
  a.mu(0, 0, 0) = 1;
  a.unit = wrb::Vec{1};
  return a;
}

inline Algebra zero_algebra(std::size_t n) { return Algebra(n); }

/// k[x]/(x^2), basis (1, x)
inline Algebra dual_numbers() {
  Algebra a(2);
  a.mu(0, 0, 0) = 1;
  a.mu(0, 1, 1) = 1;
  a.mu(1, 0, 1) = 1;
  a.unit = wrb::Vec{1, 0};
  return a;
}

/// k x k, orthogonal idempotents
inline Algebra split_pair() {
  Algebra a(2);
  a.mu(0, 0, 0) = 1;
  a.mu(1, 1, 1) = 1;
  a.unit = wrb::Vec{1, 1};
  return a;
}

/// x x = y, everything else zero
inline Algebra nil_square() {
  Algebra a(2);
  a.mu(0, 0, 1) = 1;
  return a;
}

/// e_i e_j = e_j; not commutative
inline Algebra right_zero() {
  Algebra a(2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) a.mu(i, j, j) = 1;
  return a;
}

/// E11, E12, E22
inline Algebra upper_triangular() {
  Algebra a(3);
  a.mu(0, 0, 0) = 1;
  a.mu(0, 1, 1) = 1;
  a.mu(1, 2, 1) = 1;
  a.mu(2, 2, 2) = 1;
  a.unit = wrb::Vec{1, 0, 1};
  return a;
}

inline BimoduleAction zero_bimodule(const Algebra& a, const Algebra& b) { return BimoduleAction(a, b); }

/// k acting on a unital B through its unit.
inline BimoduleAction unit_action(const Algebra& b) {
  BimoduleAction m(field(), b);
  for (std::size_t p = 0; p < b.dim(); ++p) {
    m.left(0, p, p) = 1;
    m.right(p, 0, p) = 1;
  }
  return m;
}

/// k x k acting on k through the first projection.
inline BimoduleAction projection_action() {
  BimoduleAction m(split_pair(), field());
  m.left(0, 0, 0) = 1;
  m.right(0, 0, 0) = 1;
  return m;
}

struct NamedContext {
  std::string name;
  BimoduleAction ctx;
};

/// Every context has dim A <= 2 and dim B <= 2.
inline std::vector<NamedContext> assoc_contexts() {
  return {
      {"k adjoint", wrb::adjoint_bimodule(field())},
      {"dual adjoint", wrb::adjoint_bimodule(dual_numbers())},
      {"k x k adjoint", wrb::adjoint_bimodule(split_pair())},
      {"nil adjoint", wrb::adjoint_bimodule(nil_square())},
      {"right-zero adjoint", wrb::adjoint_bimodule(right_zero())},
      {"k on dual", unit_action(dual_numbers())},
      {"k x k on k", projection_action()},
      {"zero on dual", zero_bimodule(dual_numbers(), zero_algebra(2))},
  };
}

/// [x, y] = y
inline LieAlgebra r2() {
  LieAlgebra g(2);
  g.bracket(0, 1, 1) = 1;
  g.bracket(1, 0, 1) = -1;
  return g;
}

struct NamedLieContext {
  std::string name;
  LieAction ctx;
};

inline std::vector<NamedLieContext> lie_contexts() {
  std::vector<NamedLieContext> out{
      {"r2 adjoint", wrb::adjoint_lie_action(r2())},
      {"abelian 2", LieAction(LieAlgebra(2), LieAlgebra(2))},
      {"k adjoint", wrb::adjoint_lie_action(LieAlgebra(1))},
  };
  LieAction on_line(r2(), LieAlgebra(1));
  on_line.rho(0, 0, 0) = 1;  // x acts by 1, y by 0
  out.push_back({"r2 on line", on_line});
  for (const auto& c : assoc_contexts())
    if (c.name == "right-zero adjoint" || c.name == "k on dual")
      out.push_back({"commutator of " + c.name, wrb::commutatorize_action(c.ctx)});
  return out;
}

/// Weights used by every sweep.
inline const std::vector<Scalar>& sweep_weights() {
  static const std::vector<Scalar> w{0, 1, -1, Scalar(1, 2)};
  return w;
}

/// All rows x cols matrices with entries in `values`.
inline std::vector<Matrix> all_matrices(std::size_t rows, std::size_t cols, const std::vector<Scalar>& values) {
  std::vector<Matrix> out;
  const std::size_t cells = rows * cols;
  std::vector<std::size_t> digit(cells, 0);
  while (true) {
    Matrix m(rows, cols);
    for (std::size_t k = 0; k < cells; ++k) m(k / cols, k % cols) = values[digit[k]];
    out.push_back(std::move(m));
    std::size_t k = cells;
    while (k > 0 && ++digit[k - 1] == values.size()) digit[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

inline const std::vector<Scalar>& entries_2() {
  static const std::vector<Scalar> v{-2, -1, 0, 1, 2};
  return v;
}

inline const std::vector<Scalar>& entries_1() {
  static const std::vector<Scalar> v{-1, 0, 1};
  return v;
}

/// Coefficients drawn from {-3..3} / {1, 2}.
class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  Scalar scalar() {
    const int num = static_cast<int>(rng_() % 7) - 3;
    const int den = 1 + static_cast<int>(rng_() % 2);
    Scalar s(num, den);
    s.canonicalize();
    return s;
  }
  std::size_t below(std::size_t n) { return rng_() % n; }

  wrb::TensorMap tensor(std::size_t source, std::size_t target, std::size_t degree) {
    wrb::TensorMap f(source, target, degree);
    for (auto& c : f.coeffs()) c = scalar();
    return f;
  }
  wrb::AltMap alt(std::size_t source, std::size_t target, std::size_t degree) {
    wrb::AltMap f(source, target, degree);
    for (auto& c : f.coeffs()) c = scalar();
    return f;
  }
  wrb::Vec vec(std::size_t n) {
    wrb::Vec v(n);
    for (auto& c : v) c = scalar();
    return v;
  }
  Matrix matrix(std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar();
    return m;
  }

 private:
  std::mt19937 rng_;
};

/// Every weighted RB operator with entries in `values`, over all contexts
/// and sweep weights.
inline std::vector<wrb::RBOperator> verified_operators(const std::vector<Scalar>& values) {
  std::vector<wrb::RBOperator> out;
  for (const auto& c : assoc_contexts())
    for (const auto& w : sweep_weights())
      for (const auto& t : all_matrices(c.ctx.dim_a(), c.ctx.dim_b(), values)) {
        wrb::RBOperator T(c.ctx, w, t);
        if (wrb::is_wrbo(T).ok) out.push_back(std::move(T));
      }
  return out;
}

inline std::vector<wrb::LieRBOperator> verified_lie_operators(const std::vector<Scalar>& values) {
  std::vector<wrb::LieRBOperator> out;
  for (const auto& c : lie_contexts())
    for (const auto& w : sweep_weights())
      for (const auto& t : all_matrices(c.ctx.dim_g(), c.ctx.dim_h(), values)) {
        wrb::LieRBOperator T(c.ctx, w, t);
        if (wrb::is_wrbo_lie(T).ok) out.push_back(std::move(T));
      }
  return out;
}

}  // namespace support
