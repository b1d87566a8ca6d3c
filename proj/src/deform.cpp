#include "wrb/deform.hpp"

#include <string>

#include "wrb/detail/action_ops.hpp"

namespace wrb {

namespace {

std::string at_order(std::size_t n, const char* what) { return "order " + std::to_string(n) + ": " + what; }

void check_shape(const RBOperator& T, const Matrix& m, const char* what) {
  if (m.rows() != T.t.rows() || m.cols() != T.t.cols())
    throw DimensionError(std::string(what) + ": matrix must be dim A x dim B");
}

// Commutators with a0 on A and on B.
struct A0Commutators {
  std::vector<Vec> on_a;  // a0 e_a - e_a a0
  std::vector<Vec> on_b;  // a0.f_p - f_p.a0

  A0Commutators(const BimoduleAction& ctx, const Vec& a0) {
    const std::size_t na = ctx.dim_a(), nb = ctx.dim_b();
    if (a0.size() != na) throw DimensionError("a0 must be an element of A");
    for (std::size_t a = 0; a < na; ++a) {
      const Vec ea = unit_vec(na, a);
      on_a.push_back(sub(ctx.algebra.mul(a0, ea), ctx.algebra.mul(ea, a0)));
    }
    for (std::size_t p = 0; p < nb; ++p)
      on_b.push_back(sub(detail::left_on(ctx, a0, p), detail::right_on(ctx, p, a0)));
  }
};

void check_equiv1(CheckResult& res, const BimoduleAction& ctx, const A0Commutators& c) {
  const std::size_t na = ctx.dim_a(), nb = ctx.dim_b();
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t b = 0; b < na; ++b)
      if (!is_zero(ctx.algebra.mul(c.on_a[a], c.on_a[b]))) res.record({a, b}, "equiv1: [a0,a][a0,b] = 0");
  for (std::size_t p = 0; p < nb; ++p)
    for (std::size_t q = 0; q < nb; ++q)
      if (!is_zero(ctx.module.mul(c.on_b[p], c.on_b[q]))) res.record({p, q}, "equiv1: [a0,u][a0,v] = 0");
}

void check_equiv3(CheckResult& res, const BimoduleAction& ctx, const Vec& a0, const A0Commutators& c) {
  const std::size_t na = ctx.dim_a(), nb = ctx.dim_b();
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t p = 0; p < nb; ++p) {
      const Vec lu = detail::left_on(ctx, a0, p);   // a0.u
      const Vec ru = detail::right_on(ctx, p, a0);  // u.a0
      if (ctx.act_left(c.on_a[a], lu) != ctx.act_left(c.on_a[a], ru))
        res.record({a, p}, "equiv3: l_[a0,a] l_a0 = l_[a0,a] r_a0");
      if (ctx.act_right(lu, c.on_a[a]) != ctx.act_right(ru, c.on_a[a]))
        res.record({a, p}, "equiv3: r_[a0,a] l_a0 = r_[a0,a] r_a0");
    }
}

TensorMap term_map(const DeformationData& d, std::size_t i) {
  if (i <= d.order()) return TensorMap::from_matrix(d.term(i));
  return TensorMap(d.base.action.dim_b(), d.base.action.dim_a(), 1);
}

Matrix zero_like(const Matrix& m) { return Matrix(m.rows(), m.cols()); }

}  // namespace

LinearDefReport check_linear_def(const RBOperator& T, const Matrix& t1) {
  require_wrbo(T, "check_linear_def");
  check_shape(T, t1, "check_linear_def");
  const auto& ctx = T.action;
  const std::size_t nb = ctx.dim_b();
  LinearDefReport rep;
  for (std::size_t u = 0; u < nb; ++u)
    for (std::size_t v = 0; v < nb; ++v) {
      const Vec tu = T.t.column(u), tv = T.t.column(v), su = t1.column(u), sv = t1.column(v);
      // T(u)T1(v) + T1(u)T(v) - T(T1(u).v + u.T1(v)) - T1(T(u).v + u.T(v) + lambda uv)
      Vec l1 = add(ctx.algebra.mul(tu, sv), ctx.algebra.mul(su, tv));
      detail::add_image(l1, -1, T.t, add(detail::left_on(ctx, su, v), detail::right_on(ctx, u, sv)));
      Vec inner = add(detail::left_on(ctx, tu, v), detail::right_on(ctx, u, tv));
      axpy(inner, T.weight, ctx.module.mu.fiber(u, v));
      detail::add_image(l1, -1, t1, inner);
      if (!is_zero(l1)) {
        rep.lin1 = false;
        rep.where.record({u, v}, "lin1");
      }
      Vec l2 = ctx.algebra.mul(su, sv);
      detail::add_image(l2, -1, t1, add(detail::left_on(ctx, su, v), detail::right_on(ctx, u, sv)));
      if (!is_zero(l2)) {
        rep.lin2 = false;
        rep.where.record({u, v}, "lin2");
      }
    }
  rep.ok = rep.lin1 && rep.lin2;
  rep.cocycle = d_T(TensorMap::from_matrix(t1), T).is_zero();
  rep.weight_zero_rb = is_wrbo(RBOperator(ctx, 0, t1)).ok;
  return rep;
}

const std::array<Scalar, 5>& deformation_samples() {
  static const std::array<Scalar, 5> samples{Scalar(-2), Scalar(-1), Scalar(1, 2), Scalar(1), Scalar(3)};
  return samples;
}

bool linear_def_holds_at_samples(const RBOperator& T, const Matrix& t1) {
  check_shape(T, t1, "linear_def_holds_at_samples");
  for (const auto& c : deformation_samples())
    if (!is_wrbo(RBOperator(T.action, T.weight, T.t + c * t1)).ok) return false;
  return true;
}

Matrix d_T_element(const RBOperator& T, const Vec& a0) {
  if (a0.size() != T.action.dim_a()) throw DimensionError("a0 must be an element of A");
  return d_T(TensorMap::element(a0, T.action.dim_b()), T).to_matrix();
}

EquivReport check_equiv_data(const RBOperator& T, const Matrix& t1, const Matrix& t1p, const Vec& a0) {
  require_wrbo(T, "check_equiv_data");
  check_shape(T, t1, "check_equiv_data");
  check_shape(T, t1p, "check_equiv_data");
  const auto& ctx = T.action;
  const A0Commutators c(ctx, a0);
  EquivReport rep;

  CheckResult e1;
  check_equiv1(e1, ctx, c);
  rep.equiv1 = e1.ok;

  CheckResult e2;
  for (std::size_t p = 0; p < ctx.dim_b(); ++p) {
    const Vec tu = T.t.column(p), su = t1.column(p);
    // T1(u) - T1'(u) = T(a0.u - u.a0) - (a0 T(u) - T(u) a0)
    Vec lhs = sub(su, t1p.column(p));
    Vec rhs = T.t.apply(c.on_b[p]);
    axpy(rhs, -1, sub(ctx.algebra.mul(a0, tu), ctx.algebra.mul(tu, a0)));
    if (lhs != rhs) e2.record({p}, "equiv2: T1 - T1' = d_T(a0)");
    // a0 T1(u) - T1(u) a0 = T1'(a0.u - u.a0)
    if (sub(ctx.algebra.mul(a0, su), ctx.algebra.mul(su, a0)) != t1p.apply(c.on_b[p]))
      e2.record({p}, "equiv2: [a0, T1(u)] = T1'([a0, u])");
  }
  rep.equiv2 = e2.ok;

  CheckResult e3;
  check_equiv3(e3, ctx, a0, c);
  rep.equiv3 = e3.ok;

  for (auto* part : {&e1, &e2, &e3})
    for (std::size_t k = 0; k < part->violations.size(); ++k) rep.where.record(part->violations[k], part->labels[k]);
  rep.ok = rep.equiv1 && rep.equiv2 && rep.equiv3;

  const Matrix diff = t1 - t1p;
  rep.difference_is_dT_a0 = diff == d_T_element(T, a0);
  const CochainComplexReport cx = cohomology_dims(T, 0);
  rep.cohomologous = solve(cx.differentials[0], TensorMap::from_matrix(diff).coeffs()).has_value();
  return rep;
}

CheckResult check_formal_equivalence(const DeformationData& d, const DeformationData& dp,
                                     const EquivalenceData& eq, std::size_t order) {
  const auto& ctx = d.base.action;
  if (!(dp.base.action == ctx) || dp.base.weight != d.base.weight)
    throw PreconditionError("check_formal_equivalence: deformations must share weight and action");
  const std::size_t na = ctx.dim_a(), nb = ctx.dim_b();
  const A0Commutators c(ctx, eq.a0);
  auto phi = [&](std::size_t k) -> Matrix {
    if (k == 0) return Matrix::identity(na);
    if (k == 1) return Matrix::from_columns(na, c.on_a);
    if (k - 2 < eq.phi.size()) return eq.phi[k - 2];
    return Matrix(na, na);
  };
  auto psi = [&](std::size_t k) -> Matrix {
    if (k == 0) return Matrix::identity(nb);
    if (k == 1) return Matrix::from_columns(nb, c.on_b);
    if (k - 2 < eq.psi.size()) return eq.psi[k - 2];
    return Matrix(nb, nb);
  };
  auto term = [](const DeformationData& x, std::size_t k) {
    return k <= x.order() ? x.term(k) : zero_like(x.base.t);
  };
  for (const auto& m : eq.phi)
    if (m.rows() != na || m.cols() != na) throw DimensionError("phi_i must be dim A x dim A");
  for (const auto& m : eq.psi)
    if (m.rows() != nb || m.cols() != nb) throw DimensionError("psi_i must be dim B x dim B");

  CheckResult res;
  for (std::size_t n = 0; n <= order; ++n) {
    Matrix lhs(na, nb), rhs(na, nb);
    for (std::size_t i = 0; i <= n; ++i) {
      lhs = lhs + phi(i) * term(d, n - i);
      rhs = rhs + term(dp, i) * psi(n - i);
    }
    for (std::size_t p = 0; p < nb; ++p)
      if (lhs.column(p) != rhs.column(p)) res.record({n, p}, at_order(n, "phi T = T' psi"));
    const Matrix pn = phi(n), qn = psi(n);
    for (std::size_t a = 0; a < na; ++a)
      for (std::size_t b = 0; b < na; ++b) {
        Vec s(na);
        for (std::size_t i = 0; i <= n; ++i) axpy(s, 1, ctx.algebra.mul(phi(i).column(a), phi(n - i).column(b)));
        if (s != pn.apply(ctx.algebra.mu.fiber(a, b))) res.record({n, a, b}, at_order(n, "phi multiplicative"));
      }
    for (std::size_t p = 0; p < nb; ++p)
      for (std::size_t q = 0; q < nb; ++q) {
        Vec s(nb);
        for (std::size_t i = 0; i <= n; ++i) axpy(s, 1, ctx.module.mul(psi(i).column(p), psi(n - i).column(q)));
        if (s != qn.apply(ctx.module.mu.fiber(p, q))) res.record({n, p, q}, at_order(n, "psi multiplicative"));
      }
    for (std::size_t a = 0; a < na; ++a)
      for (std::size_t p = 0; p < nb; ++p) {
        Vec l(nb), r(nb);
        for (std::size_t i = 0; i <= n; ++i) {
          axpy(l, 1, ctx.act_left(phi(i).column(a), psi(n - i).column(p)));
          axpy(r, 1, ctx.act_right(psi(i).column(p), phi(n - i).column(a)));
        }
        if (l != qn.apply(ctx.left.fiber(a, p))) res.record({n, a, p}, at_order(n, "psi(a.u) = phi(a).psi(u)"));
        if (r != qn.apply(ctx.right.fiber(p, a))) res.record({n, p, a}, at_order(n, "psi(u.a) = psi(u).phi(a)"));
      }
  }
  return res;
}

CheckResult check_nijenhuis(const RBOperator& T, const Vec& a0) {
  require_wrbo(T, "check_nijenhuis");
  const auto& ctx = T.action;
  const A0Commutators c(ctx, a0);
  CheckResult res;
  check_equiv1(res, ctx, c);
  check_equiv3(res, ctx, a0, c);
  const Matrix dt = d_T_element(T, a0);
  for (std::size_t p = 0; p < ctx.dim_b(); ++p) {
    // l^T_u(a0) - r^T_u(a0) = d_T(a0)(u)
    const Vec x = dt.column(p);
    if (ctx.algebra.mul(a0, x) != ctx.algebra.mul(x, a0)) res.record({p}, "[a0, l^T_u(a0) - r^T_u(a0)] = 0");
  }
  return res;
}

bool is_nijenhuis(const RBOperator& T, const Vec& a0) { return check_nijenhuis(T, a0).ok; }

Matrix trivial_def_from_nijenhuis(const RBOperator& T, const Vec& a0) {
  if (!is_nijenhuis(T, a0)) throw PreconditionError("trivial_def_from_nijenhuis: a0 is not a Nijenhuis element");
  return d_T_element(T, a0);
}

TensorMap order_residual(const DeformationData& d, std::size_t n) {
  const auto& ctx = d.base.action;
  TensorMap out = d_T(term_map(d, n), d.base);
  for (std::size_t i = 1; i < n; ++i)
    out += Scalar(1, 2) * derived_bracket(term_map(d, i), term_map(d, n - i), ctx);
  return out;
}

TensorMap deformation_equation_defect(const DeformationData& d, std::size_t n) {
  const auto& ctx = d.base.action;
  const std::size_t na = ctx.dim_a(), nb = ctx.dim_b();
  std::vector<Matrix> t;
  for (std::size_t i = 0; i <= n; ++i) t.push_back(i <= d.order() ? d.term(i) : Matrix(na, nb));
  return TensorMap::tabulate(nb, na, 2, [&](std::span<const std::size_t> idx, std::span<Scalar> out) {
    const std::size_t u = idx[0], v = idx[1];
    for (std::size_t i = 0; i <= n; ++i) {
      const Matrix& ti = t[i];
      const Matrix& tj = t[n - i];
      axpy(out, 1, ctx.algebra.mul(ti.column(u), tj.column(v)));
      detail::add_image(out, -1, ti, add(detail::left_on(ctx, tj.column(u), v), detail::right_on(ctx, u, tj.column(v))));
    }
    detail::add_image(out, -d.base.weight, t[n], ctx.module.mu.fiber(u, v));
  });
}

OrderReport check_order_N(const DeformationData& d) {
  require_wrbo(d.base, "check_order_N");
  OrderReport rep;
  for (std::size_t n = 1; n <= d.order(); ++n) {
    check_shape(d.base, d.term(n), "check_order_N");
    if (!order_residual(d, n).is_zero()) {
      rep.ok = false;
      rep.first_failing = n;
      break;
    }
  }
  return rep;
}

OrderReport check_order_N_expanded(const DeformationData& d) {
  require_wrbo(d.base, "check_order_N_expanded");
  OrderReport rep;
  for (std::size_t n = 1; n <= d.order(); ++n) {
    check_shape(d.base, d.term(n), "check_order_N_expanded");
    if (!deformation_equation_defect(d, n).is_zero()) {
      rep.ok = false;
      rep.first_failing = n;
      break;
    }
  }
  return rep;
}

ObstructionReport obstruction(const DeformationData& d) {
  const OrderReport ord = check_order_N(d);
  if (!ord.ok)
    throw PreconditionError("obstruction: not an order-" + std::to_string(d.order()) +
                            " deformation (fails at order " + std::to_string(*ord.first_failing) + ")");
  const std::size_t n = d.order() + 1;
  ObstructionReport rep;
  rep.ob = TensorMap(d.base.action.dim_b(), d.base.action.dim_a(), 2);
  for (std::size_t i = 1; i < n; ++i)
    rep.ob += Scalar(-1, 2) * derived_bracket(term_map(d, i), term_map(d, n - i), d.base.action);
  rep.cocycle = d_T(rep.ob, d.base).is_zero();
  return rep;
}

ExtensionResult try_extend(const DeformationData& d, Exec exec) {
  ExtensionResult res;
  res.obstruction = obstruction(d);
  const CochainComplexReport cx = cohomology_dims(d.base, 1, AssocRoute::twisted, exec);
  const Matrix& d1 = cx.differentials[1];
  res.rank_d1 = cx.ranks[1];
  res.rank_augmented = rank(hstack(d1, Matrix::from_columns(d1.rows(), {res.obstruction.ob.coeffs()})), exec);
  if (auto x = solve(d1, res.obstruction.ob.coeffs(), exec)) {
    TensorMap next(d.base.action.dim_b(), d.base.action.dim_a(), 1);
    next.coeffs() = std::move(*x);
    res.next = next.to_matrix();
  }
  return res;
}

RigidityReport rigidity_report(const RBOperator& T, const std::vector<Vec>& candidates) {
  const CochainComplexReport cx = cohomology_dims(T, 1);
  RigidityReport rep;
  rep.dim_z1 = cx.cochain_dims[1] - cx.ranks[1];
  rep.dim_b1 = cx.ranks[0];
  std::vector<Vec> images;
  for (const auto& a0 : candidates) {
    if (!is_nijenhuis(T, a0)) continue;
    ++rep.nijenhuis_count;
    images.push_back(TensorMap::from_matrix(d_T_element(T, a0)).coeffs());
  }
  rep.nijenhuis_span = images.empty() ? 0 : rank(Matrix::from_columns(cx.cochain_dims[1], images));
  rep.spans_z1 = rep.nijenhuis_span == rep.dim_z1;
  return rep;
}

std::vector<Vec> small_elements(std::size_t dim) {
  std::size_t count = 1;
  for (std::size_t k = 0; k < dim; ++k) {
    count *= 3;
    if (count > coefficient_cap()) throw CapExceeded("small_elements: too many candidates");
  }
  std::vector<Vec> out;
  out.reserve(count);
  for (std::size_t code = 0; code < count; ++code) {
    Vec v(dim);
    std::size_t c = code;
    for (std::size_t k = 0; k < dim; ++k) {
      v[k] = static_cast<long>(c % 3) - 1;
      c /= 3;
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace wrb
