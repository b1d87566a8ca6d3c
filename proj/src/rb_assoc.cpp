#include "wrb/rb_assoc.hpp"

#include <string>

#include "wrb/detail/action_ops.hpp"

namespace wrb {

using detail::add_image;
using detail::left_on;
using detail::right_on;

RBOperator::RBOperator(BimoduleAction a, Scalar w, Matrix m)
    : action(std::move(a)), weight(std::move(w)), t(std::move(m)) {
  if (t.rows() != action.dim_a() || t.cols() != action.dim_b())
    throw DimensionError("operator matrix must be dim A x dim B");
}

namespace {

void check_cochain(const TensorMap& f, const BimoduleAction& ctx, const char* what) {
  if (f.source_dim() != ctx.dim_b() || f.target_dim() != ctx.dim_a())
    throw DimensionError(std::string(what) + ": cochain is not in Hom(B^n, A)");
}

// idx with the block [j, j+len) collapsed to a single slot at position j
std::vector<std::size_t> collapse(std::span<const std::size_t> idx, std::size_t j, std::size_t len) {
  std::vector<std::size_t> o;
  o.reserve(idx.size() + 1 - len);
  for (std::size_t k = 0; k < j; ++k) o.push_back(idx[k]);
  o.push_back(0);
  for (std::size_t k = j + len; k < idx.size(); ++k) o.push_back(idx[k]);
  return o;
}

// sum_i (-1)^{(i-1)n} F(.., G(u_i..)u_{i+n}, ..) - sum_i (-1)^{in} F(.., u_i G(u_{i+1}..), ..)
void half_bracket(std::span<Scalar> out, const Scalar& coeff, const TensorMap& F, const TensorMap& G,
                  const BimoduleAction& ctx, std::span<const std::size_t> idx) {
  const std::size_t m = F.degree(), n = G.degree();
  for (std::size_t j = 0; j < m; ++j) {
    const auto o = collapse(idx, j, n + 1);
    const Vec w1 = left_on(ctx, G.value_at(idx.subspan(j, n)), idx[j + n]);
    F.accumulate_slot(out, coeff * sign_pow(static_cast<long long>(j * n)), o, j, w1);
    const Vec w2 = right_on(ctx, idx[j], G.value_at(idx.subspan(j + 1, n)));
    F.accumulate_slot(out, -coeff * sign_pow(static_cast<long long>((j + 1) * n)), o, j, w2);
  }
}

// [[P, a]] for a of degree 0: sum_i P(.., a.u_i - u_i.a, ..) + P(..)a - aP(..)
TensorMap bracket_with_element(const TensorMap& P, std::span<const Scalar> a, const BimoduleAction& ctx,
                               Exec exec) {
  const std::size_t m = P.degree();
  return TensorMap::tabulate(
      ctx.dim_b(), ctx.dim_a(), m,
      [&](std::span<const std::size_t> idx, std::span<Scalar> out) {
        for (std::size_t j = 0; j < m; ++j) {
          const Vec w = sub(left_on(ctx, a, idx[j]), right_on(ctx, idx[j], a));
          P.accumulate_slot(out, 1, idx, j, w);
        }
        const auto p = P.value_at(idx);
        axpy(out, 1, ctx.algebra.mul(p, a));
        axpy(out, -1, ctx.algebra.mul(a, p));
      },
      exec);
}

}  // namespace

RBCheck is_wrbo(const RBOperator& T) {
  const auto& ctx = T.action;
  RBCheck res;
  res.defect = TensorMap::tabulate(ctx.dim_b(), ctx.dim_a(), 2,
                                   [&](std::span<const std::size_t> idx, std::span<Scalar> out) {
                                     const Vec tu = T.t.column(idx[0]), tv = T.t.column(idx[1]);
                                     axpy(out, 1, ctx.algebra.mul(tu, tv));
                                     Vec w = left_on(ctx, tu, idx[1]);
                                     axpy(w, 1, right_on(ctx, idx[0], tv));
                                     axpy(w, T.weight, ctx.module.mu.fiber(idx[0], idx[1]));
                                     add_image(out, -1, T.t, w);
                                   });
  std::vector<std::size_t> idx(2);
  for (std::size_t t = 0; t < res.defect.num_tuples(); ++t) {
    if (is_zero(res.defect.value(t))) continue;
    res.defect.decode(t, idx);
    res.where.record(idx, "rota-baxter");
  }
  res.ok = res.where.ok;
  return res;
}

void require_wrbo(const RBOperator& T, const char* operation) {
  RBCheck c = is_wrbo(T);
  if (!c.ok)
    throw NotRotaBaxter(std::string(operation) + ": operator is not a weighted Rota-Baxter operator",
                        std::move(c.defect));
}

Algebra induced_product(const RBOperator& T) {
  require_wrbo(T, "induced_product");
  const auto& ctx = T.action;
  const std::size_t nb = ctx.dim_b();
  Algebra b(nb);
  b.basis_names = ctx.module.basis_names;
  for (std::size_t p = 0; p < nb; ++p)
    for (std::size_t q = 0; q < nb; ++q) {
      Vec w = left_on(ctx, T.t.column(p), q);
      axpy(w, 1, right_on(ctx, p, T.t.column(q)));
      axpy(w, T.weight, ctx.module.mu.fiber(p, q));
      for (std::size_t r = 0; r < nb; ++r) b.mu(p, q, r) = w[r];
    }
  return b;
}

TensorMap derived_bracket(const TensorMap& P, const TensorMap& Q, const BimoduleAction& ctx, Exec exec) {
  check_cochain(P, ctx, "derived_bracket");
  check_cochain(Q, ctx, "derived_bracket");
  const std::size_t m = P.degree(), n = Q.degree();
  if (n == 0) return bracket_with_element(P, Q.value(0), ctx, exec);
  if (m == 0) return Scalar(-1) * bracket_with_element(Q, P.value(0), ctx, exec);
  const int smn = sign_pow(static_cast<long long>(m * n));
  return TensorMap::tabulate(
      ctx.dim_b(), ctx.dim_a(), m + n,
      [&](std::span<const std::size_t> idx, std::span<Scalar> out) {
        half_bracket(out, 1, P, Q, ctx, idx);
        half_bracket(out, -smn, Q, P, ctx, idx);
        axpy(out, smn, ctx.algebra.mul(P.value_at(idx.first(m)), Q.value_at(idx.subspan(m))));
        axpy(out, -1, ctx.algebra.mul(Q.value_at(idx.first(n)), P.value_at(idx.subspan(n))));
      },
      exec);
}

TensorMap structure_element(const BimoduleAction& ctx) {
  const std::size_t na = ctx.dim_a(), nb = ctx.dim_b();
  return TensorMap::tabulate(
      na + nb, na + nb, 2,
      [&](std::span<const std::size_t> idx, std::span<Scalar> out) {
        const std::size_t x = idx[0], y = idx[1];
        if (x < na && y < na) {
          for (std::size_t k = 0; k < na; ++k) out[k] = ctx.algebra.mu(x, y, k);
        } else if (x < na) {
          for (std::size_t q = 0; q < nb; ++q) out[na + q] = ctx.left(x, y - na, q);
        } else if (y < na) {
          for (std::size_t q = 0; q < nb; ++q) out[na + q] = ctx.right(x - na, y, q);
        }
      },
      Exec::serial);
}

TensorMap module_product_element(const BimoduleAction& ctx, const Scalar& lambda) {
  const std::size_t na = ctx.dim_a(), nb = ctx.dim_b();
  return TensorMap::tabulate(
      na + nb, na + nb, 2,
      [&](std::span<const std::size_t> idx, std::span<Scalar> out) {
        if (idx[0] < na || idx[1] < na) return;
        for (std::size_t r = 0; r < nb; ++r) out[na + r] = lambda * ctx.module.mu(idx[0] - na, idx[1] - na, r);
      },
      Exec::serial);
}

TensorMap derived_bracket_via_g(const TensorMap& P, const TensorMap& Q, const BimoduleAction& ctx, Exec exec) {
  check_cochain(P, ctx, "derived_bracket_via_g");
  check_cochain(Q, ctx, "derived_bracket_via_g");
  if (P.degree() == 0 || Q.degree() == 0)
    throw PreconditionError("derived_bracket_via_g: degrees must be at least 1");
  const VSplit split{ctx.dim_a(), ctx.dim_b()};
  const TensorMap inner = g_bracket(structure_element(ctx), embed_hom(P, split), exec);
  TensorMap out = project_hom(g_bracket(inner, embed_hom(Q, split), exec), split);
  if (P.degree() % 2 == 1) out *= -1;
  return out;
}

TensorMap d_lambda(const TensorMap& f, const BimoduleAction& ctx, const Scalar& lambda, Exec exec) {
  check_cochain(f, ctx, "d_lambda");
  const std::size_t n = f.degree();
  TensorMap out(ctx.dim_b(), ctx.dim_a(), n + 1);
  if (n == 0) return out;
  return TensorMap::tabulate(
      ctx.dim_b(), ctx.dim_a(), n + 1,
      [&](std::span<const std::size_t> idx, std::span<Scalar> o) {
        for (std::size_t j = 0; j < n; ++j) {
          const Scalar c = lambda * sign_pow(static_cast<long long>(n - 1 + j));
          f.accumulate_slot(o, c, collapse(idx, j, 2), j, ctx.module.mu.fiber(idx[j], idx[j + 1]));
        }
      },
      exec);
}

TensorMap d_lambda_via_g(const TensorMap& f, const BimoduleAction& ctx, const Scalar& lambda, Exec exec) {
  check_cochain(f, ctx, "d_lambda_via_g");
  if (f.degree() == 0) return TensorMap(ctx.dim_b(), ctx.dim_a(), 1);
  const VSplit split{ctx.dim_a(), ctx.dim_b()};
  TensorMap out = project_hom(g_bracket(module_product_element(ctx, lambda), embed_hom(f, split), exec), split);
  out *= -1;
  return out;
}

namespace {

// Precomputed data shared by every evaluation of d_T for a fixed T.
class TwistedDifferential {
 public:
  explicit TwistedDifferential(const RBOperator& T) : T_(T), ctx_(T.action) {
    const std::size_t nb = ctx_.dim_b();
    for (std::size_t p = 0; p < nb; ++p) tcol_.push_back(T.t.column(p));
    induced_.resize(nb * nb);
    for (std::size_t p = 0; p < nb; ++p)
      for (std::size_t q = 0; q < nb; ++q) {
        Vec w = left_on(ctx_, tcol_[p], q);
        axpy(w, 1, right_on(ctx_, p, tcol_[q]));
        axpy(w, T.weight, ctx_.module.mu.fiber(p, q));
        induced_[p * nb + q] = std::move(w);
      }
  }

  TensorMap operator()(const TensorMap& f, Exec exec) const {
    check_cochain(f, ctx_, "d_T");
    const std::size_t n = f.degree(), nb = ctx_.dim_b();
    const int sn = sign_pow(static_cast<long long>(n));
    return TensorMap::tabulate(
        nb, ctx_.dim_a(), n + 1,
        [&](std::span<const std::size_t> idx, std::span<Scalar> out) {
          const auto head = f.value_at(idx.first(n));  // f(u_1..u_n)
          const auto tail = f.value_at(idx.subspan(1));  // f(u_2..u_{n+1})
          add_image(out, 1, T_.t, left_on(ctx_, head, idx[n]));
          add_image(out, -sn, T_.t, right_on(ctx_, idx[0], tail));
          for (std::size_t j = 0; j < n; ++j) {
            f.accumulate_slot(out, -sn * sign_pow(static_cast<long long>(j)), collapse(idx, j, 2), j,
                              induced_[idx[j] * nb + idx[j + 1]]);
          }
          axpy(out, sn, ctx_.algebra.mul(tcol_[idx[0]], tail));
          axpy(out, -1, ctx_.algebra.mul(head, tcol_[idx[n]]));
        },
        exec);
  }

 private:
  const RBOperator& T_;
  const BimoduleAction& ctx_;
  std::vector<Vec> tcol_;
  std::vector<Vec> induced_;
};

}  // namespace

TensorMap d_T(const TensorMap& f, const RBOperator& T, Exec exec) { return TwistedDifferential(T)(f, exec); }

TensorMap mc_defect(const RBOperator& T) {
  const TensorMap tm = T.as_map();
  TensorMap out = d_lambda(tm, T.action, T.weight);
  out += Scalar(1, 2) * derived_bracket(tm, tm, T.action);
  return out;
}

TensorMap twisted_mc_defect(const RBOperator& T, const Matrix& t_prime) {
  require_wrbo(T, "twisted_mc_defect");
  if (t_prime.rows() != T.t.rows() || t_prime.cols() != T.t.cols())
    throw DimensionError("twisted_mc_defect: perturbation has the wrong shape");
  const TensorMap tp = TensorMap::from_matrix(t_prime);
  TensorMap out = d_T(tp, T);
  out += Scalar(1, 2) * derived_bracket(tp, tp, T.action);
  return out;
}

BimoduleAction induced_bimodule_T(const RBOperator& T) {
  const auto& ctx = T.action;
  const std::size_t na = ctx.dim_a(), nb = ctx.dim_b();
  Algebra coeff(na);
  coeff.basis_names = ctx.algebra.basis_names;
  BimoduleAction m(induced_product(T), std::move(coeff));
  for (std::size_t p = 0; p < nb; ++p) {
    const Vec tu = T.t.column(p);
    for (std::size_t a = 0; a < na; ++a) {
      const Vec ea = unit_vec(na, a);
      // l^T_u(a) = T(u)a - T(u.a)
      Vec l = ctx.algebra.mul(tu, ea);
      add_image(l, -1, T.t, ctx.right.fiber(p, a));
      // r^T_u(a) = aT(u) - T(a.u)
      Vec r = ctx.algebra.mul(ea, tu);
      add_image(r, -1, T.t, ctx.left.fiber(a, p));
      for (std::size_t k = 0; k < na; ++k) {
        m.left(p, a, k) = l[k];
        m.right(a, p, k) = r[k];
      }
    }
  }
  return m;
}

TensorMap hochschild_coboundary(const TensorMap& f, const BimoduleAction& rm, Exec exec) {
  const std::size_t nr = rm.dim_a(), nm = rm.dim_b();
  if (f.source_dim() != nr || f.target_dim() != nm)
    throw DimensionError("hochschild_coboundary: cochain is not in Hom(R^n, M)");
  const std::size_t n = f.degree();
  const int last = sign_pow(static_cast<long long>(n + 1));
  return TensorMap::tabulate(
      nr, nm, n + 1,
      [&](std::span<const std::size_t> idx, std::span<Scalar> out) {
        axpy(out, 1, detail::act_left_basis(rm, idx[0], f.value_at(idx.subspan(1))));
        for (std::size_t j = 0; j < n; ++j) {
          f.accumulate_slot(out, sign_pow(static_cast<long long>(j + 1)), collapse(idx, j, 2), j,
                            rm.algebra.mu.fiber(idx[j], idx[j + 1]));
        }
        axpy(out, last, detail::act_right_basis(rm, f.value_at(idx.first(n)), idx[n]));
      },
      exec);
}

TensorMap hochschild_d(const TensorMap& f, const RBOperator& T, Exec exec) {
  return hochschild_coboundary(f, induced_bimodule_T(T), exec);
}

namespace {

std::size_t checked_cochain_dim(std::size_t target, std::size_t source, std::size_t n) {
  std::size_t d = target;
  for (std::size_t k = 0; k < n; ++k) {
    if (source != 0 && d > coefficient_cap() / source)
      throw CapExceeded("cochain space exceeds the coefficient cap");
    d *= source;
  }
  if (d > coefficient_cap()) throw CapExceeded("cochain space exceeds the coefficient cap");
  return d;
}

}  // namespace

CochainComplexReport cohomology_dims(const RBOperator& T, std::size_t max_degree, AssocRoute route,
                                     Exec exec) {
  require_wrbo(T, "cohomology_dims");
  const std::size_t na = T.action.dim_a(), nb = T.action.dim_b();
  std::vector<std::size_t> dims;
  for (std::size_t n = 0; n <= max_degree + 1; ++n) dims.push_back(checked_cochain_dim(na, nb, n));
  for (std::size_t n = 0; n <= max_degree; ++n) {
    if (dims[n] != 0 && dims[n + 1] > coefficient_cap() / dims[n])
      throw CapExceeded("differential matrix exceeds the coefficient cap");
  }
  const TwistedDifferential dt(T);
  const BimoduleAction rm = route == AssocRoute::hochschild ? induced_bimodule_T(T) : BimoduleAction();
  return build_complex(
      max_degree, [&](std::size_t n) { return dims[n]; },
      [&](std::size_t n, std::size_t c) {
        TensorMap e(nb, na, n);
        e.coeffs()[c] = 1;
        return route == AssocRoute::twisted ? dt(e, Exec::serial).coeffs()
                                            : hochschild_coboundary(e, rm, Exec::serial).coeffs();
      },
      exec);
}

std::vector<Vec> graph_basis(const RBOperator& T) {
  const std::size_t na = T.action.dim_a(), nb = T.action.dim_b();
  std::vector<Vec> basis;
  for (std::size_t p = 0; p < nb; ++p) {
    Vec v = T.t.column(p);
    v.resize(na + nb);
    v[na + p] = 1;
    basis.push_back(std::move(v));
  }
  return basis;
}

bool graph_is_subalgebra(const RBOperator& T) {
  return check_subalgebra(graph_basis(T), semidirect_assoc(T.action, T.weight));
}

CheckResult check_rb_morphism(const MorphismPair& pair, const RBOperator& T, const RBOperator& Tp) {
  const auto& ctx = T.action;
  const std::size_t na = ctx.dim_a(), nb = ctx.dim_b();
  if (Tp.action.dim_a() != na || Tp.action.dim_b() != nb || pair.phi.rows() != na || pair.phi.cols() != na ||
      pair.psi.rows() != nb || pair.psi.cols() != nb)
    throw DimensionError("check_rb_morphism: shape mismatch");
  if (!(Tp.action == ctx) || Tp.weight != T.weight)
    throw PreconditionError("check_rb_morphism: operators must share weight and action");
  CheckResult res;
  const Matrix& phi = pair.phi;
  const Matrix& psi = pair.psi;
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      if (phi.apply(ctx.algebra.mu.fiber(i, j)) != ctx.algebra.mul(phi.column(i), phi.column(j)))
        res.record({i, j}, "phi is an algebra morphism");
  for (std::size_t p = 0; p < nb; ++p)
    for (std::size_t q = 0; q < nb; ++q)
      if (psi.apply(ctx.module.mu.fiber(p, q)) != ctx.module.mul(psi.column(p), psi.column(q)))
        res.record({p, q}, "psi is an algebra morphism");
  const Matrix lhs = phi * T.t, rhs = Tp.t * psi;
  for (std::size_t p = 0; p < nb; ++p)
    if (lhs.column(p) != rhs.column(p)) res.record({p}, "phi T = T' psi");
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t p = 0; p < nb; ++p) {
      if (psi.apply(ctx.left.fiber(i, p)) != ctx.act_left(phi.column(i), psi.column(p)))
        res.record({i, p}, "psi(a.u) = phi(a).psi(u)");
      if (psi.apply(ctx.right.fiber(p, i)) != ctx.act_right(psi.column(p), phi.column(i)))
        res.record({p, i}, "psi(u.a) = psi(u).phi(a)");
    }
  return res;
}

}  // namespace wrb
