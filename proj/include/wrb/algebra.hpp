#pragma once

// Finite-dimensional associative algebras, Lie algebras and their actions,
// given by structure constants over Q.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wrb/exactnum.hpp"

namespace wrb {

/// Dense rank-3 coefficient tensor c[i][j][k].
class Tensor3 {
 public:
  Tensor3() = default;
  Tensor3(std::size_t n0, std::size_t n1, std::size_t n2);

  std::array<std::size_t, 3> shape() const { return {n0_, n1_, n2_}; }
  Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) {
    return c_[(i * n1_ + j) * n2_ + k];
  }
  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * n1_ + j) * n2_ + k];
  }
  /// The vector sum_k c[i][j][k] e_k.
  std::span<const Scalar> fiber(std::size_t i, std::size_t j) const {
    return {c_.data() + (i * n1_ + j) * n2_, n2_};
  }
  /// Bilinear contraction sum_{i,j} x_i y_j c[i][j][.]
  Vec contract(std::span<const Scalar> x, std::span<const Scalar> y) const;
  bool is_zero() const { return wrb::is_zero(c_); }

  friend bool operator==(const Tensor3&, const Tensor3&) = default;

 private:
  std::size_t n0_ = 0, n1_ = 0, n2_ = 0;
  std::vector<Scalar> c_;
};

/// Offending basis index tuples of a failed check, capped at kMaxViolations.
struct CheckResult {
  static constexpr std::size_t kMaxViolations = 16;

  bool ok = true;
  std::vector<std::vector<std::size_t>> violations;
  /// Which axiom each violation belongs to (parallel to `violations`).
  std::vector<std::string> labels;

  void record(std::vector<std::size_t> where, std::string label = {});
};

struct Algebra {
  std::vector<std::string> basis_names;
  /// e_i e_j = sum_k mu(i, j, k) e_k
  Tensor3 mu;
  std::optional<Vec> unit;

  Algebra() = default;
  explicit Algebra(std::size_t dim);

  std::size_t dim() const { return basis_names.size(); }
  Vec mul(std::span<const Scalar> x, std::span<const Scalar> y) const { return mu.contract(x, y); }

  friend bool operator==(const Algebra&, const Algebra&) = default;
};

struct LieAlgebra {
  std::vector<std::string> basis_names;
  /// [e_i, e_j] = sum_k bracket(i, j, k) e_k
  Tensor3 bracket;

  LieAlgebra() = default;
  explicit LieAlgebra(std::size_t dim);

  std::size_t dim() const { return basis_names.size(); }
  Vec br(std::span<const Scalar> x, std::span<const Scalar> y) const {
    return bracket.contract(x, y);
  }

  friend bool operator==(const LieAlgebra&, const LieAlgebra&) = default;
};

/// A acting on the algebra B from both sides.
struct BimoduleAction {
  Algebra algebra;  // A
  Algebra module;   // B, with its own product mu_B
  /// e_i . f_p = sum_q left(i, p, q) f_q
  Tensor3 left;
  /// f_p . e_i = sum_q right(p, i, q) f_q
  Tensor3 right;

  BimoduleAction() = default;
  BimoduleAction(Algebra a, Algebra b);

  std::size_t dim_a() const { return algebra.dim(); }
  std::size_t dim_b() const { return module.dim(); }
  Vec act_left(std::span<const Scalar> a, std::span<const Scalar> u) const { return left.contract(a, u); }
  Vec act_right(std::span<const Scalar> u, std::span<const Scalar> a) const { return right.contract(u, a); }

  friend bool operator==(const BimoduleAction&, const BimoduleAction&) = default;
};

/// rho : g -> Der(h).
struct LieAction {
  LieAlgebra lie;     // g
  LieAlgebra module;  // h
  /// rho(x_i) y_p = sum_q rho(i, p, q) y_q
  Tensor3 rho;

  LieAction() = default;
  LieAction(LieAlgebra g, LieAlgebra h);

  std::size_t dim_g() const { return lie.dim(); }
  std::size_t dim_h() const { return module.dim(); }
  Vec act(std::span<const Scalar> x, std::span<const Scalar> u) const { return rho.contract(x, u); }

  friend bool operator==(const LieAction&, const LieAction&) = default;
};

/// (phi, psi): phi on A (or g), psi on B (or h).
struct MorphismPair {
  Matrix phi;
  Matrix psi;
};

CheckResult check_associativity(const Algebra& a);
/// Skew-symmetry violations are reported as (i, j, i, j) label "skew";
/// Jacobi violations as (i, j, k) label "jacobi".
CheckResult check_jacobi(const LieAlgebra& g);
/// The three bimodule axioms plus the three compatibilities with mu_B.
CheckResult check_assoc_bimodule(const BimoduleAction& m);
/// rho(x) is a derivation of [,]_h and rho is a Lie homomorphism.
CheckResult check_lie_action(const LieAction& m);
/// rho([x,y]) = [rho(x), rho(y)] only; for plain representations.
CheckResult check_representation(const LieAction& m);
CheckResult check_unit(const Algebra& a);

BimoduleAction adjoint_bimodule(const Algebra& a);
LieAction adjoint_lie_action(const LieAlgebra& g);

/// Algebra on A (+) B, A-basis first, with
/// (a,u)(b,v) = (ab, a.v + u.b + lambda u.v).
Algebra semidirect_assoc(const BimoduleAction& m, const Scalar& lambda);
/// Lie algebra on g (+) h with
/// [(x,u),(y,v)] = ([x,y], rho(x)v - rho(y)u + lambda [u,v]).
LieAlgebra semidirect_lie(const LieAction& m, const Scalar& lambda);

/// Whether span(vectors) is closed under the product (resp. bracket).
bool check_subalgebra(const std::vector<Vec>& span, const Algebra& a);
bool check_subalgebra(const std::vector<Vec>& span, const LieAlgebra& g);

LieAlgebra commutatorize(const Algebra& a);
/// rho(a) u = a.u - u.a on the commutator algebras.
LieAction commutatorize_action(const BimoduleAction& m);

/// phi(xy) = phi(x)phi(y) for phi : from -> to.
bool is_algebra_morphism(const Matrix& phi, const Algebra& from, const Algebra& to);
bool is_algebra_morphism(const Matrix& phi, const Algebra& a);
bool is_lie_morphism(const Matrix& phi, const LieAlgebra& from, const LieAlgebra& to);
bool is_lie_morphism(const Matrix& phi, const LieAlgebra& g);

}  // namespace wrb
