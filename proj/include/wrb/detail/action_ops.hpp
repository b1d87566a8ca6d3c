#pragma once

// Basis-level action helpers shared by the operator modules.

#include <cstddef>
#include <span>

#include "wrb/algebra.hpp"

namespace wrb::detail {

/// a . f_p for a in A
inline Vec left_on(const BimoduleAction& m, std::span<const Scalar> a, std::size_t p) {
  Vec out(m.dim_b());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0) axpy(out, a[i], m.left.fiber(i, p));
  return out;
}

/// f_p . a for a in A
inline Vec right_on(const BimoduleAction& m, std::size_t p, std::span<const Scalar> a) {
  Vec out(m.dim_b());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0) axpy(out, a[i], m.right.fiber(p, i));
  return out;
}

/// e_i . v for v in B
inline Vec act_left_basis(const BimoduleAction& m, std::size_t i, std::span<const Scalar> v) {
  Vec out(m.dim_b());
  for (std::size_t p = 0; p < v.size(); ++p)
    if (sgn(v[p]) != 0) axpy(out, v[p], m.left.fiber(i, p));
  return out;
}

/// v . e_i for v in B
inline Vec act_right_basis(const BimoduleAction& m, std::span<const Scalar> v, std::size_t i) {
  Vec out(m.dim_b());
  for (std::size_t p = 0; p < v.size(); ++p)
    if (sgn(v[p]) != 0) axpy(out, v[p], m.right.fiber(p, i));
  return out;
}

/// out += c * t(w)
inline void add_image(std::span<Scalar> out, const Scalar& c, const Matrix& t, std::span<const Scalar> w) {
  if (sgn(c) == 0) return;
  for (std::size_t q = 0; q < w.size(); ++q) {
    if (sgn(w[q]) == 0) continue;
    const Scalar s = c * w[q];
    for (std::size_t k = 0; k < t.rows(); ++k) out[k] += s * t(k, q);
  }
}

}  // namespace wrb::detail
