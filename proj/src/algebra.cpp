#include "wrb/algebra.hpp"

#include "wrb/error.hpp"

namespace wrb {

Tensor3::Tensor3(std::size_t n0, std::size_t n1, std::size_t n2)
    : n0_(n0), n1_(n1), n2_(n2), c_(n0 * n1 * n2) {}

Vec Tensor3::contract(std::span<const Scalar> x, std::span<const Scalar> y) const {
  if (x.size() != n0_ || y.size() != n1_) throw DimensionError("Tensor3::contract: length mismatch");
  Vec out(n2_);
  for (std::size_t i = 0; i < n0_; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < n1_; ++j) {
      if (sgn(y[j]) == 0) continue;
      const Scalar w = x[i] * y[j];
      axpy(out, w, fiber(i, j));
    }
  }
  return out;
}

void CheckResult::record(std::vector<std::size_t> where, std::string label) {
  ok = false;
  if (violations.size() < kMaxViolations) {
    violations.push_back(std::move(where));
    labels.push_back(std::move(label));
  }
}

namespace {

std::vector<std::string> default_names(const std::string& prefix, std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i + 1));
  return names;
}

}  // namespace

Algebra::Algebra(std::size_t dim) : basis_names(default_names("e", dim)), mu(dim, dim, dim) {}

LieAlgebra::LieAlgebra(std::size_t dim)
    : basis_names(default_names("x", dim)), bracket(dim, dim, dim) {}

BimoduleAction::BimoduleAction(Algebra a, Algebra b)
    : algebra(std::move(a)),
      module(std::move(b)),
      left(algebra.dim(), module.dim(), module.dim()),
      right(module.dim(), algebra.dim(), module.dim()) {}

LieAction::LieAction(LieAlgebra g, LieAlgebra h)
    : lie(std::move(g)), module(std::move(h)), rho(lie.dim(), module.dim(), module.dim()) {}

CheckResult check_associativity(const Algebra& a) {
  CheckResult res;
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vec ek = unit_vec(n, k);
        const Vec ei = unit_vec(n, i);
        const Vec lhs = a.mul(a.mu.fiber(i, j), ek);
        const Vec rhs = a.mul(ei, a.mu.fiber(j, k));
        if (lhs != rhs) res.record({i, j, k}, "associativity");
      }
  return res;
}

CheckResult check_jacobi(const LieAlgebra& g) {
  CheckResult res;
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (g.bracket(i, j, k) != -g.bracket(j, i, k)) res.record({i, j, k}, "skew");
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        // [x_i,[x_j,x_k]] + [x_j,[x_k,x_i]] + [x_k,[x_i,x_j]]
        Vec sum = g.br(unit_vec(n, i), g.bracket.fiber(j, k));
        axpy(sum, 1, g.br(unit_vec(n, j), g.bracket.fiber(k, i)));
        axpy(sum, 1, g.br(unit_vec(n, k), g.bracket.fiber(i, j)));
        if (!is_zero(sum)) res.record({i, j, k}, "jacobi");
      }
  return res;
}

CheckResult check_assoc_bimodule(const BimoduleAction& m) {
  CheckResult res;
  const std::size_t na = m.dim_a(), nb = m.dim_b();
  const auto& A = m.algebra;
  const auto& B = m.module;
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t b = 0; b < na; ++b)
      for (std::size_t u = 0; u < nb; ++u) {
        const Vec ea = unit_vec(na, a), eb = unit_vec(na, b), fu = unit_vec(nb, u);
        // (ab).u = a.(b.u)
        if (m.act_left(A.mu.fiber(a, b), fu) != m.act_left(ea, m.left.fiber(b, u)))
          res.record({a, b, u}, "(ab).u = a.(b.u)");
        // (a.u).b = a.(u.b)
        if (m.act_right(m.left.fiber(a, u), eb) != m.act_left(ea, m.right.fiber(u, b)))
          res.record({a, u, b}, "(a.u).b = a.(u.b)");
        // (u.a).b = u.(ab)
        if (m.act_right(m.right.fiber(u, a), eb) != m.act_right(fu, A.mu.fiber(a, b)))
          res.record({u, a, b}, "(u.a).b = u.(ab)");
      }
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t u = 0; u < nb; ++u)
      for (std::size_t v = 0; v < nb; ++v) {
        const Vec ea = unit_vec(na, a), fu = unit_vec(nb, u), fv = unit_vec(nb, v);
        // (a.u) v = a.(u v)
        if (B.mul(m.left.fiber(a, u), fv) != m.act_left(ea, B.mu.fiber(u, v)))
          res.record({a, u, v}, "(a.u)v = a.(uv)");
        // (u.a) v = u (a.v)
        if (B.mul(m.right.fiber(u, a), fv) != B.mul(fu, m.left.fiber(a, v)))
          res.record({u, a, v}, "(u.a)v = u(a.v)");
        // (u v).a = u (v.a)
        if (m.act_right(B.mu.fiber(u, v), ea) != B.mul(fu, m.right.fiber(v, a)))
          res.record({u, v, a}, "(uv).a = u(v.a)");
      }
  return res;
}

CheckResult check_representation(const LieAction& m) {
  CheckResult res;
  const std::size_t ng = m.dim_g(), nh = m.dim_h();
  for (std::size_t x = 0; x < ng; ++x)
    for (std::size_t y = 0; y < ng; ++y)
      for (std::size_t u = 0; u < nh; ++u) {
        const Vec ex = unit_vec(ng, x), ey = unit_vec(ng, y);
        // rho([x,y])u = rho(x)rho(y)u - rho(y)rho(x)u
        const Vec lhs = m.act(m.lie.bracket.fiber(x, y), unit_vec(nh, u));
        const Vec rhs = sub(m.act(ex, m.rho.fiber(y, u)), m.act(ey, m.rho.fiber(x, u)));
        if (lhs != rhs) res.record({x, y, u}, "homomorphism");
      }
  return res;
}

CheckResult check_lie_action(const LieAction& m) {
  CheckResult res = check_representation(m);
  const std::size_t ng = m.dim_g(), nh = m.dim_h();
  for (std::size_t x = 0; x < ng; ++x)
    for (std::size_t u = 0; u < nh; ++u)
      for (std::size_t v = 0; v < nh; ++v) {
        const Vec fu = unit_vec(nh, u), fv = unit_vec(nh, v), ex = unit_vec(ng, x);
        // rho(x)[u,v] = [rho(x)u, v] + [u, rho(x)v]
        const Vec lhs = m.act(ex, m.module.bracket.fiber(u, v));
        const Vec rhs = add(m.module.br(m.rho.fiber(x, u), fv), m.module.br(fu, m.rho.fiber(x, v)));
        if (lhs != rhs) res.record({x, u, v}, "derivation");
      }
  return res;
}

CheckResult check_unit(const Algebra& a) {
  CheckResult res;
  if (!a.unit) return res;
  if (a.unit->size() != a.dim()) throw DimensionError("unit vector has wrong length");
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const Vec ei = unit_vec(a.dim(), i);
    if (a.mul(*a.unit, ei) != ei || a.mul(ei, *a.unit) != ei) res.record({i}, "unit");
  }
  return res;
}

BimoduleAction adjoint_bimodule(const Algebra& a) {
  BimoduleAction m(a, a);
  m.left = a.mu;
  m.right = a.mu;
  return m;
}

LieAction adjoint_lie_action(const LieAlgebra& g) {
  LieAction m(g, g);
  m.rho = g.bracket;
  return m;
}

Algebra semidirect_assoc(const BimoduleAction& m, const Scalar& lambda) {
  const std::size_t na = m.dim_a(), nb = m.dim_b();
  Algebra s(na + nb);
  s.basis_names = m.algebra.basis_names;
  s.basis_names.insert(s.basis_names.end(), m.module.basis_names.begin(), m.module.basis_names.end());
  // indices: A-basis occupies [0, na), B-basis [na, na + nb)
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t k = 0; k < na; ++k) s.mu(i, j, k) = m.algebra.mu(i, j, k);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t p = 0; p < nb; ++p)
      for (std::size_t q = 0; q < nb; ++q) {
        s.mu(i, na + p, na + q) = m.left(i, p, q);
        s.mu(na + p, i, na + q) = m.right(p, i, q);
      }
  for (std::size_t p = 0; p < nb; ++p)
    for (std::size_t q = 0; q < nb; ++q)
      for (std::size_t r = 0; r < nb; ++r) s.mu(na + p, na + q, na + r) = lambda * m.module.mu(p, q, r);
  return s;
}

LieAlgebra semidirect_lie(const LieAction& m, const Scalar& lambda) {
  const std::size_t ng = m.dim_g(), nh = m.dim_h();
  LieAlgebra s(ng + nh);
  s.basis_names = m.lie.basis_names;
  s.basis_names.insert(s.basis_names.end(), m.module.basis_names.begin(), m.module.basis_names.end());
  for (std::size_t i = 0; i < ng; ++i)
    for (std::size_t j = 0; j < ng; ++j)
      for (std::size_t k = 0; k < ng; ++k) s.bracket(i, j, k) = m.lie.bracket(i, j, k);
  for (std::size_t i = 0; i < ng; ++i)
    for (std::size_t p = 0; p < nh; ++p)
      for (std::size_t q = 0; q < nh; ++q) {
        s.bracket(i, ng + p, ng + q) = m.rho(i, p, q);
        s.bracket(ng + p, i, ng + q) = -m.rho(i, p, q);
      }
  for (std::size_t p = 0; p < nh; ++p)
    for (std::size_t q = 0; q < nh; ++q)
      for (std::size_t r = 0; r < nh; ++r)
        s.bracket(ng + p, ng + q, ng + r) = lambda * m.module.bracket(p, q, r);
  return s;
}

namespace {

template <class Product>
bool closed_under(const std::vector<Vec>& span, std::size_t dim, Product&& product) {
  for (const auto& v : span)
    if (v.size() != dim) throw DimensionError("check_subalgebra: vector length mismatch");
  if (span.empty()) return true;
  const Matrix base = Matrix::from_columns(dim, span);
  const std::size_t r = rank(base, Exec::serial);
  std::vector<Vec> extended = span;
  for (const auto& x : span)
    for (const auto& y : span) extended.push_back(product(x, y));
  return rank(Matrix::from_columns(dim, extended), Exec::serial) == r;
}

}  // namespace

bool check_subalgebra(const std::vector<Vec>& span, const Algebra& a) {
  return closed_under(span, a.dim(), [&](const Vec& x, const Vec& y) { return a.mul(x, y); });
}

bool check_subalgebra(const std::vector<Vec>& span, const LieAlgebra& g) {
  return closed_under(span, g.dim(), [&](const Vec& x, const Vec& y) { return g.br(x, y); });
}

LieAlgebra commutatorize(const Algebra& a) {
  LieAlgebra g(a.dim());
  g.basis_names = a.basis_names;
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) g.bracket(i, j, k) = a.mu(i, j, k) - a.mu(j, i, k);
  return g;
}

LieAction commutatorize_action(const BimoduleAction& m) {
  LieAction c(commutatorize(m.algebra), commutatorize(m.module));
  for (std::size_t i = 0; i < m.dim_a(); ++i)
    for (std::size_t p = 0; p < m.dim_b(); ++p)
      for (std::size_t q = 0; q < m.dim_b(); ++q) c.rho(i, p, q) = m.left(i, p, q) - m.right(p, i, q);
  return c;
}

bool is_algebra_morphism(const Matrix& phi, const Algebra& from, const Algebra& to) {
  if (phi.rows() != to.dim() || phi.cols() != from.dim())
    throw DimensionError("algebra morphism: shape mismatch");
  for (std::size_t i = 0; i < from.dim(); ++i)
    for (std::size_t j = 0; j < from.dim(); ++j) {
      if (phi.apply(from.mu.fiber(i, j)) != to.mul(phi.column(i), phi.column(j))) return false;
    }
  return true;
}

bool is_algebra_morphism(const Matrix& phi, const Algebra& a) { return is_algebra_morphism(phi, a, a); }

bool is_lie_morphism(const Matrix& phi, const LieAlgebra& from, const LieAlgebra& to) {
  if (phi.rows() != to.dim() || phi.cols() != from.dim())
    throw DimensionError("Lie morphism: shape mismatch");
  for (std::size_t i = 0; i < from.dim(); ++i)
    for (std::size_t j = 0; j < from.dim(); ++j) {
      if (phi.apply(from.bracket.fiber(i, j)) != to.br(phi.column(i), phi.column(j))) return false;
    }
  return true;
}

bool is_lie_morphism(const Matrix& phi, const LieAlgebra& g) { return is_lie_morphism(phi, g, g); }

}  // namespace wrb
