#pragma once

// Brute-force reference computations. Everything here is written straight
// from the defining formulas on plain nested vectors and shares no code with
// the engine beyond reading structure constants.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <vector>

#include "wrb/algebra.hpp"

namespace oracle {

using Q = mpq_class;
using V = std::vector<Q>;
using Rows = std::vector<V>;

inline std::size_t rank(Rows m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Q f = m[i][c] / m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  return r;
}

/// Bilinear table: prod[i][j] is the vector e_i * e_j.
using Table = std::vector<std::vector<V>>;

inline Table table_of(const wrb::Tensor3& t) {
  const auto [n0, n1, n2] = t.shape();
  Table out(n0, std::vector<V>(n1, V(n2)));
  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t j = 0; j < n1; ++j)
      for (std::size_t k = 0; k < n2; ++k) out[i][j][k] = t(i, j, k);
  return out;
}

inline V bil(const Table& t, const V& x, const V& y, std::size_t out_dim) {
  V r(out_dim);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (y[j] == 0) continue;
      for (std::size_t k = 0; k < out_dim; ++k) r[k] += x[i] * y[j] * t[i][j][k];
    }
  }
  return r;
}

inline V basis(std::size_t n, std::size_t i) {
  V v(n);
  v[i] = 1;
  return v;
}

inline V col(const wrb::Matrix& m, std::size_t c) {
  V v(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) v[r] = m(r, c);
  return v;
}

inline V mat_apply(const wrb::Matrix& m, const V& x) {
  V y(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) y[r] += m(r, c) * x[c];
  return y;
}

inline V plus(V a, const V& b, const Q& s = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += s * b[i];
  return a;
}

/// T(u)T(v) - T(T(u).v + u.T(v) + lambda u.v) over all basis pairs.
inline bool rb_identity(const wrb::BimoduleAction& m, const Q& lambda, const wrb::Matrix& t) {
  const Table mu_a = table_of(m.algebra.mu), mu_b = table_of(m.module.mu);
  const Table l = table_of(m.left), r = table_of(m.right);
  const std::size_t na = m.dim_a(), nb = m.dim_b();
  for (std::size_t u = 0; u < nb; ++u)
    for (std::size_t v = 0; v < nb; ++v) {
      const V tu = col(t, u), tv = col(t, v), eu = basis(nb, u), ev = basis(nb, v);
      const V lhs = bil(mu_a, tu, tv, na);
      V inner = plus(bil(l, tu, ev, nb), bil(r, eu, tv, nb));
      inner = plus(inner, bil(mu_b, eu, ev, nb), lambda);
      if (lhs != mat_apply(t, inner)) return false;
    }
  return true;
}

/// [Tu, Tv] - T(rho(Tu)v - rho(Tv)u + lambda [u, v]).
inline bool lie_rb_identity(const wrb::LieAction& m, const Q& lambda, const wrb::Matrix& t) {
  const Table br_g = table_of(m.lie.bracket), br_h = table_of(m.module.bracket), rho = table_of(m.rho);
  const std::size_t ng = m.dim_g(), nh = m.dim_h();
  for (std::size_t u = 0; u < nh; ++u)
    for (std::size_t v = 0; v < nh; ++v) {
      const V tu = col(t, u), tv = col(t, v), eu = basis(nh, u), ev = basis(nh, v);
      V inner = plus(bil(rho, tu, ev, nh), bil(rho, tv, eu, nh), -1);
      inner = plus(inner, bil(br_h, eu, ev, nh), lambda);
      if (bil(br_g, tu, tv, ng) != mat_apply(t, inner)) return false;
    }
  return true;
}

/// Structures induced on B by T and the bimodule they give on A.
struct Induced {
  Table prod;   // B x B -> B
  Table left;   // B x A -> A
  Table right;  // A x B -> A
};

inline Induced induce(const wrb::BimoduleAction& m, const Q& lambda, const wrb::Matrix& t) {
  const Table mu_a = table_of(m.algebra.mu), mu_b = table_of(m.module.mu);
  const Table l = table_of(m.left), r = table_of(m.right);
  const std::size_t na = m.dim_a(), nb = m.dim_b();
  Induced ind{Table(nb, std::vector<V>(nb)), Table(nb, std::vector<V>(na)), Table(na, std::vector<V>(nb))};
  for (std::size_t u = 0; u < nb; ++u) {
    const V eu = basis(nb, u), tu = col(t, u);
    for (std::size_t v = 0; v < nb; ++v) {
      const V ev = basis(nb, v), tv = col(t, v);
      ind.prod[u][v] = plus(plus(bil(l, tu, ev, nb), bil(r, eu, tv, nb)), bil(mu_b, eu, ev, nb), lambda);
    }
    for (std::size_t a = 0; a < na; ++a) {
      const V ea = basis(na, a);
      // u > a = T(u)a - T(u.a),  a < u = aT(u) - T(a.u)
      ind.left[u][a] = plus(bil(mu_a, tu, ea, na), mat_apply(t, bil(r, eu, ea, nb)), -1);
      ind.right[a][u] = plus(bil(mu_a, ea, tu, na), mat_apply(t, bil(l, ea, eu, nb)), -1);
    }
  }
  return ind;
}

/// Tuples of length k over {0..n-1}, first index most significant.
inline std::vector<std::vector<std::size_t>> tuples(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> t(k, 0);
  std::size_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= n;
  for (std::size_t c = 0; c < total; ++c) {
    std::size_t x = c;
    for (std::size_t i = k; i-- > 0;) {
      t[i] = x % n;
      x /= n;
    }
    out.push_back(t);
  }
  return out;
}

/// Matrix (as rows) of the Hochschild coboundary C^k(B, A) -> C^{k+1}(B, A)
/// for the induced algebra B acting on A.
inline Rows hochschild_matrix(const Induced& ind, std::size_t nb, std::size_t na, std::size_t k) {
  const auto src = tuples(nb, k), dst = tuples(nb, k + 1);
  auto src_index = [&](const std::vector<std::size_t>& t) {
    std::size_t x = 0;
    for (auto i : t) x = x * nb + i;
    return x;
  };
  const std::size_t cols = src.size() * na, rows = dst.size() * na;
  Rows m(rows, V(cols));
  // column (s, a) is the cochain sending tuple s to e_a and everything else to 0
  for (std::size_t d = 0; d < dst.size(); ++d) {
    const auto& w = dst[d];
    auto emit = [&](const std::vector<std::size_t>& s, const Q& c, auto&& transform) {
      for (std::size_t a = 0; a < na; ++a) {
        const V out = transform(basis(na, a));
        for (std::size_t j = 0; j < na; ++j)
          if (out[j] != 0) m[d * na + j][src_index(s) * na + a] += c * out[j];
      }
    };
    // u_1 > f(u_2 .. u_{k+1})
    std::vector<std::size_t> tail(w.begin() + 1, w.end());
    emit(tail, 1, [&](const V& x) { return bil(ind.left, basis(nb, w[0]), x, na); });
    // sum (-1)^i f(.., u_i u_{i+1}, ..)
    for (std::size_t i = 0; i < k; ++i) {
      const V& p = ind.prod[w[i]][w[i + 1]];
      for (std::size_t q = 0; q < nb; ++q) {
        if (p[q] == 0) continue;
        std::vector<std::size_t> s(w.begin(), w.begin() + i);
        s.push_back(q);
        s.insert(s.end(), w.begin() + i + 2, w.end());
        const Q sign = (i % 2 == 0) ? Q(-1) : Q(1);
        emit(s, sign * p[q], [](const V& x) { return x; });
      }
    }
    // (-1)^{k+1} f(u_1 .. u_k) < u_{k+1}
    std::vector<std::size_t> head(w.begin(), w.end() - 1);
    const Q sign = (k % 2 == 0) ? Q(-1) : Q(1);
    emit(head, sign, [&](const V& x) { return bil(ind.right, x, basis(nb, w[k]), na); });
  }
  return m;
}

inline std::vector<std::size_t> h_dims_from(const std::vector<std::size_t>& dims,
                                            const std::vector<std::size_t>& ranks) {
  std::vector<std::size_t> h;
  for (std::size_t n = 0; n < dims.size(); ++n) h.push_back(dims[n] - ranks[n] - (n ? ranks[n - 1] : 0));
  return h;
}

inline std::vector<std::size_t> hochschild_h_dims(const wrb::BimoduleAction& m, const Q& lambda,
                                                  const wrb::Matrix& t, std::size_t max_degree) {
  const Induced ind = induce(m, lambda, t);
  const std::size_t na = m.dim_a(), nb = m.dim_b();
  std::vector<std::size_t> dims, ranks;
  std::size_t d = na;
  for (std::size_t n = 0; n <= max_degree; ++n) {
    dims.push_back(d);
    ranks.push_back(rank(hochschild_matrix(ind, nb, na, n)));
    d *= nb;
  }
  return h_dims_from(dims, ranks);
}

/// Increasing k-tuples over {0..n-1} in lexicographic order.
inline std::vector<std::vector<std::size_t>> increasing(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& t : tuples(n, k))
    if (std::is_sorted(t.begin(), t.end()) && std::adjacent_find(t.begin(), t.end()) == t.end()) out.push_back(t);
  return out;
}

/// Chevalley-Eilenberg complex of (h, [,]_T) with coefficients in g via
/// rho_T(u)x = [Tu, x] + T(rho(x)u); returns cohomology dims.
inline std::vector<std::size_t> ce_h_dims(const wrb::LieAction& m, const Q& lambda, const wrb::Matrix& t,
                                          std::size_t max_degree) {
  const Table br_g = table_of(m.lie.bracket), br_h = table_of(m.module.bracket), rho = table_of(m.rho);
  const std::size_t ng = m.dim_g(), nh = m.dim_h();
  Table bt(nh, std::vector<V>(nh));
  Table rep(nh, std::vector<V>(ng));
  for (std::size_t u = 0; u < nh; ++u) {
    const V eu = basis(nh, u), tu = col(t, u);
    for (std::size_t v = 0; v < nh; ++v) {
      const V ev = basis(nh, v), tv = col(t, v);
      bt[u][v] = plus(plus(bil(rho, tu, ev, nh), bil(rho, tv, eu, nh), -1), bil(br_h, eu, ev, nh), lambda);
    }
    for (std::size_t x = 0; x < ng; ++x)
      rep[u][x] = plus(bil(br_g, tu, basis(ng, x), ng), mat_apply(t, bil(rho, basis(ng, x), eu, nh)));
  }
  std::vector<std::size_t> dims, ranks;
  for (std::size_t k = 0; k <= max_degree; ++k) {
    const auto src = increasing(nh, k), dst = increasing(nh, k + 1);
    dims.push_back(src.size() * ng);
    auto src_index = [&](std::vector<std::size_t> s, Q& sign) -> long {
      // sort with sign; repeated index gives zero
      sign = 1;
      for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j + 1 < s.size() - i; ++j)
          if (s[j] > s[j + 1]) {
            std::swap(s[j], s[j + 1]);
            sign = -sign;
          }
      if (std::adjacent_find(s.begin(), s.end()) != s.end()) return -1;
      return std::find(src.begin(), src.end(), s) - src.begin();
    };
    Rows mat(dst.size() * ng, V(src.size() * ng));
    for (std::size_t d = 0; d < dst.size(); ++d) {
      const auto& w = dst[d];
      for (std::size_t i = 0; i <= k; ++i) {
        std::vector<std::size_t> s;
        for (std::size_t j = 0; j <= k; ++j)
          if (j != i) s.push_back(w[j]);
        Q sg;
        const long si = src_index(s, sg);
        if (si < 0) continue;
        const Q sign = (i % 2 == 0) ? Q(1) : Q(-1);
        for (std::size_t a = 0; a < ng; ++a) {
          const V out = bil(rep, basis(nh, w[i]), basis(ng, a), ng);
          for (std::size_t b = 0; b < ng; ++b) mat[d * ng + b][si * ng + a] += sign * sg * out[b];
        }
      }
      for (std::size_t i = 0; i <= k; ++i)
        for (std::size_t j = i + 1; j <= k; ++j) {
          const V& p = bt[w[i]][w[j]];
          for (std::size_t q = 0; q < nh; ++q) {
            if (p[q] == 0) continue;
            std::vector<std::size_t> s{q};
            for (std::size_t l = 0; l <= k; ++l)
              if (l != i && l != j) s.push_back(w[l]);
            Q sg;
            const long si = src_index(s, sg);
            if (si < 0) continue;
            const Q sign = ((i + j) % 2 == 0) ? Q(1) : Q(-1);
            for (std::size_t a = 0; a < ng; ++a) mat[d * ng + a][si * ng + a] += sign * sg * p[q];
          }
        }
    }
    ranks.push_back(rank(mat));
  }
  return h_dims_from(dims, ranks);
}

/// One-dimensional algebra e e = e, adjoint action, T = t: the induced
/// product is (2t + lambda) and both induced actions vanish, so d^n is
/// multiplication by c * sum_{i=1}^{n} (-1)^i, nonzero exactly for odd n.
inline std::vector<std::size_t> one_dim_h_dims(const Q& t, const Q& lambda, std::size_t max_degree) {
  const Q c = 2 * t + lambda;
  std::vector<std::size_t> dims(max_degree + 1, 1), ranks;
  for (std::size_t n = 0; n <= max_degree; ++n) ranks.push_back((n % 2 == 1 && c != 0) ? 1 : 0);
  return h_dims_from(dims, ranks);
}

/// r13 r12 - r12 r23 + r23 r13 - lambda r13 in A (x) A (x) A, flattened.
inline V waybe_defect(const wrb::Algebra& a, const wrb::Matrix& r, const Q& lambda) {
  const std::size_t n = a.dim();
  const Table mu = table_of(a.mu);
  V one(n);
  for (std::size_t i = 0; i < n; ++i) one[i] = (*a.unit)[i];
  auto mul = [&](const V& x, const V& y) { return bil(mu, x, y, n); };
  V out(n * n * n);
  auto add3 = [&](const V& x, const V& y, const V& z, const Q& c) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) out[(i * n + j) * n + k] += c * x[i] * y[j] * z[k];
  };
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t) {
          const Q c = r(p, q) * r(s, t);
          if (c == 0) continue;
          const V ep = basis(n, p), eq = basis(n, q), es = basis(n, s), et = basis(n, t);
          // r13 r12 = (e_p e_s) (x) e_t (x) e_q with r13 = p(x)1(x)q, r12 = s(x)t(x)1
          add3(mul(ep, es), et, eq, c);
          // r12 r23 = e_p (x) e_q e_s (x) e_t
          add3(ep, mul(eq, es), et, -c);
          // r23 r13 = e_s (x) e_p (x) e_q e_t  with r23 = 1(x)p(x)q, r13 = s(x)1(x)t
          add3(es, ep, mul(eq, et), c);
        }
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      if (r(p, q) != 0) add3(basis(n, p), one, basis(n, q), -lambda * r(p, q));
  return out;
}

}  // namespace oracle
