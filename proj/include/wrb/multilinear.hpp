#pragma once

// Multilinear maps on tensor powers (TensorMap) and wedge powers (AltMap),
// with the Gerstenhaber and Nijenhuis-Richardson brackets.

#include <cstddef>
#include <span>
#include <vector>

#include "wrb/exactnum.hpp"
#include "wrb/parallel.hpp"

namespace wrb {

/// Upper bound on the number of coefficients any single map may hold.
/// Defaults to 10^6.
void set_coefficient_cap(std::size_t cap);
std::size_t coefficient_cap();

/// (-1)^e
constexpr int sign_pow(long long e) { return (e % 2 == 0) ? 1 : -1; }

std::size_t binomial(std::size_t n, std::size_t k);

/// Sign of a permutation given by its images (0-based), by inversion parity.
int perm_sign(std::span<const std::size_t> sigma);

struct Permutation {
  std::vector<std::size_t> images;  // images[k] = sigma(k + 1) - 1
  int sign = 1;
};

/// (p,q)-shuffles in lexicographic order of (sigma(1), ..., sigma(p)).
std::vector<Permutation> shuffles(std::size_t p, std::size_t q);
/// All of S_n in lexicographic order.
std::vector<Permutation> permutations(std::size_t n);

/// V = A (+) B, A-basis first.
struct VSplit {
  std::size_t dim_a = 0;
  std::size_t dim_b = 0;
  std::size_t dim() const { return dim_a + dim_b; }
};

/// f : (source)^{(x) n} -> target, stored densely: the coefficient of g_j in
/// f(e_{i1}, ..., e_{in}) lives at ((i1 * s + i2) * s + ...) * t + j.
/// Degree 0 maps are elements of the target space.
class TensorMap {
 public:
  TensorMap() = default;
  TensorMap(std::size_t source_dim, std::size_t target_dim, std::size_t degree);

  static TensorMap element(std::span<const Scalar> value, std::size_t source_dim);
  static TensorMap identity(std::size_t dim);
  /// Degree-1 map with f(e_c) = column c of m.
  static TensorMap from_matrix(const Matrix& m);
  Matrix to_matrix() const;

  std::size_t source_dim() const { return source_dim_; }
  std::size_t target_dim() const { return target_dim_; }
  std::size_t degree() const { return degree_; }
  std::size_t num_tuples() const { return num_tuples_; }

  std::size_t tuple_index(std::span<const std::size_t> idx) const;
  void decode(std::size_t tuple, std::span<std::size_t> idx) const;

  std::span<const Scalar> value(std::size_t tuple) const {
    return {coeffs_.data() + tuple * target_dim_, target_dim_};
  }
  std::span<Scalar> value(std::size_t tuple) {
    return {coeffs_.data() + tuple * target_dim_, target_dim_};
  }
  std::span<const Scalar> value_at(std::span<const std::size_t> idx) const {
    return value(tuple_index(idx));
  }

  /// out += coeff * f(e_{idx_1}, ..., v, ..., e_{idx_n}) with v in `slot`;
  /// idx[slot] is ignored.
  void accumulate_slot(std::span<Scalar> out, const Scalar& coeff, std::span<const std::size_t> idx,
                       std::size_t slot, std::span<const Scalar> v) const;
  /// General multilinear evaluation.
  Vec evaluate(std::span<const Vec> args) const;

  std::vector<Scalar>& coeffs() { return coeffs_; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  bool is_zero() const { return wrb::is_zero(coeffs_); }

  TensorMap& operator+=(const TensorMap& o);
  TensorMap& operator-=(const TensorMap& o);
  TensorMap& operator*=(const Scalar& s);
  friend TensorMap operator+(TensorMap a, const TensorMap& b) { return a += b; }
  friend TensorMap operator-(TensorMap a, const TensorMap& b) { return a -= b; }
  friend TensorMap operator*(const Scalar& s, TensorMap a) { return a *= s; }
  friend bool operator==(const TensorMap&, const TensorMap&) = default;

  /// Builds a map by evaluating fill(idx, out) on every basis tuple; `out`
  /// is zeroed and has length target_dim.
  template <class Fill>
  static TensorMap tabulate(std::size_t source_dim, std::size_t target_dim, std::size_t degree,
                            Fill&& fill, Exec exec = Exec::parallel) {
    TensorMap f(source_dim, target_dim, degree);
    for_each_index(f.num_tuples_, exec, [&](std::size_t t) {
      std::vector<std::size_t> idx(degree);
      f.decode(t, idx);
      fill(std::span<const std::size_t>(idx), f.value(t));
    });
    return f;
  }

 private:
  void check_same_shape(const TensorMap& o) const;

  std::size_t source_dim_ = 0;
  std::size_t target_dim_ = 0;
  std::size_t degree_ = 0;
  std::size_t num_tuples_ = 1;
  std::vector<Scalar> coeffs_;
};

/// Alternating f : wedge^n(source) -> target, stored on strictly increasing
/// index tuples in colexicographic order.
class AltMap {
 public:
  AltMap() = default;
  AltMap(std::size_t source_dim, std::size_t target_dim, std::size_t degree);

  static AltMap element(std::span<const Scalar> value, std::size_t source_dim);
  static AltMap from_matrix(const Matrix& m);
  Matrix to_matrix() const;

  std::size_t source_dim() const { return source_dim_; }
  std::size_t target_dim() const { return target_dim_; }
  std::size_t degree() const { return degree_; }
  std::size_t num_tuples() const { return num_tuples_; }

  /// Colex rank of a strictly increasing tuple.
  static std::size_t rank_of(std::span<const std::size_t> increasing);
  /// The increasing tuples of this map's shape, in storage order.
  const std::vector<std::vector<std::size_t>>& tuples() const;

  /// Sign (0 on repeated indices) and storage rank of an arbitrary tuple.
  int canonical(std::span<const std::size_t> idx, std::size_t& rank) const;

  std::span<const Scalar> value(std::size_t rank) const {
    return {coeffs_.data() + rank * target_dim_, target_dim_};
  }
  std::span<Scalar> value(std::size_t rank) {
    return {coeffs_.data() + rank * target_dim_, target_dim_};
  }
  /// f(e_{idx_1}, ..., e_{idx_n}) for any tuple.
  Vec evaluate_basis(std::span<const std::size_t> idx) const;
  /// out += coeff * f(e_{idx_1}, ..., e_{idx_n})
  void accumulate_basis(std::span<Scalar> out, const Scalar& coeff,
                        std::span<const std::size_t> idx) const;
  void accumulate_slot(std::span<Scalar> out, const Scalar& coeff, std::span<const std::size_t> idx,
                       std::size_t slot, std::span<const Scalar> v) const;
  Vec evaluate(std::span<const Vec> args) const;

  std::vector<Scalar>& coeffs() { return coeffs_; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  bool is_zero() const { return wrb::is_zero(coeffs_); }

  AltMap& operator+=(const AltMap& o);
  AltMap& operator-=(const AltMap& o);
  AltMap& operator*=(const Scalar& s);
  friend AltMap operator+(AltMap a, const AltMap& b) { return a += b; }
  friend AltMap operator-(AltMap a, const AltMap& b) { return a -= b; }
  friend AltMap operator*(const Scalar& s, AltMap a) { return a *= s; }
  friend bool operator==(const AltMap&, const AltMap&) = default;

  /// fill(idx, out) is called once per increasing tuple.
  template <class Fill>
  static AltMap tabulate(std::size_t source_dim, std::size_t target_dim, std::size_t degree,
                         Fill&& fill, Exec exec = Exec::parallel) {
    AltMap f(source_dim, target_dim, degree);
    const auto& tup = f.tuples();
    for_each_index(f.num_tuples_, exec, [&](std::size_t r) {
      fill(std::span<const std::size_t>(tup[r]), f.value(r));
    });
    return f;
  }

 private:
  void check_same_shape(const AltMap& o) const;

  std::size_t source_dim_ = 0;
  std::size_t target_dim_ = 0;
  std::size_t degree_ = 0;
  std::size_t num_tuples_ = 1;
  std::vector<Scalar> coeffs_;
};

/// Full antisymmetric tensor of an alternating map.
TensorMap to_tensor(const AltMap& f);

/// (f o_i g)(v_1..v_{m+n-1}) = f(v_1..v_{i-1}, g(v_i..v_{i+n-1}), ...), 1 <= i <= m.
TensorMap g_insert(const TensorMap& f, const TensorMap& g, std::size_t i, Exec exec = Exec::parallel);
/// Gerstenhaber bracket; both degrees must be >= 1.
TensorMap g_bracket(const TensorMap& f, const TensorMap& g, Exec exec = Exec::parallel);

/// (f <> g)(w..) = sum over (n, m-1)-shuffles of sgn * f(g(w_s1..w_sn), w_s(n+1)..).
/// Zero when f has degree 0.
AltMap nr_diamond(const AltMap& f, const AltMap& g, Exec exec = Exec::parallel);
/// f <> g - (-1)^{(m-1)(n-1)} g <> f
AltMap nr_bracket(const AltMap& f, const AltMap& g, Exec exec = Exec::parallel);

/// S_n(f)(a_1..a_n) = sum over S_n of sgn * f(a_s1..a_sn).
AltMap skew_symmetrize(const TensorMap& f, Exec exec = Exec::parallel);

/// Hom(B^{(x)n}, A) -> Hom(V^{(x)n}, V): zero off B-arguments, values in A.
TensorMap embed_hom(const TensorMap& f, const VSplit& split);
/// Restricts arguments to B and projects values to A.
TensorMap project_hom(const TensorMap& f, const VSplit& split);
/// Hom(wedge^n h, g) -> Hom(wedge^n W, W) for W = g (+) h (g-basis first).
AltMap embed_alt(const AltMap& f, const VSplit& split);
AltMap project_alt(const AltMap& f, const VSplit& split);

}  // namespace wrb
