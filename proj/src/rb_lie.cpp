#include "wrb/rb_lie.hpp"

#include <string>

namespace wrb {

LieRBOperator::LieRBOperator(LieAction a, Scalar w, Matrix m)
    : action(std::move(a)), weight(std::move(w)), t(std::move(m)) {
  if (t.rows() != action.dim_g() || t.cols() != action.dim_h())
    throw DimensionError("operator matrix must be dim g x dim h");
}

namespace {

void check_cochain(const AltMap& f, const LieAction& ctx, const char* what) {
  if (f.source_dim() != ctx.dim_h() || f.target_dim() != ctx.dim_g())
    throw DimensionError(std::string(what) + ": cochain is not in Hom(wedge^n h, g)");
}

/// rho(x) f_p for x in g
Vec rho_on(const LieAction& m, std::span<const Scalar> x, std::size_t p) {
  Vec out(m.dim_h());
  for (std::size_t i = 0; i < x.size(); ++i)
    if (sgn(x[i]) != 0) axpy(out, x[i], m.rho.fiber(i, p));
  return out;
}

/// [u_p, u_q]_T
Vec induced_pair(const LieRBOperator& T, std::size_t p, std::size_t q) {
  Vec w = rho_on(T.action, T.t.column(p), q);
  axpy(w, -1, rho_on(T.action, T.t.column(q), p));
  axpy(w, T.weight, T.action.module.bracket.fiber(p, q));
  return w;
}

std::size_t checked_alt_dim(std::size_t target, std::size_t source, std::size_t n) {
  const std::size_t c = binomial(source, n);
  if (c != 0 && target > coefficient_cap() / c) throw CapExceeded("cochain space exceeds the coefficient cap");
  return target * c;
}

}  // namespace

LieRBCheck is_wrbo_lie(const LieRBOperator& T) {
  const auto& ctx = T.action;
  LieRBCheck res;
  res.defect = AltMap::tabulate(ctx.dim_h(), ctx.dim_g(), 2,
                                [&](std::span<const std::size_t> idx, std::span<Scalar> out) {
                                  axpy(out, 1, ctx.lie.br(T.t.column(idx[0]), T.t.column(idx[1])));
                                  axpy(out, -1, T.t.apply(induced_pair(T, idx[0], idx[1])));
                                });
  const auto& tup = res.defect.tuples();
  for (std::size_t r = 0; r < res.defect.num_tuples(); ++r)
    if (!is_zero(res.defect.value(r))) res.where.record(tup[r], "rota-baxter");
  res.ok = res.where.ok;
  return res;
}

void require_wrbo_lie(const LieRBOperator& T, const char* operation) {
  LieRBCheck c = is_wrbo_lie(T);
  if (!c.ok)
    throw NotLieRotaBaxter(std::string(operation) + ": operator is not a weighted Rota-Baxter operator",
                           std::move(c.defect));
}

LieAlgebra induced_lie_bracket(const LieRBOperator& T) {
  require_wrbo_lie(T, "induced_lie_bracket");
  const std::size_t nh = T.action.dim_h();
  LieAlgebra h(nh);
  h.basis_names = T.action.module.basis_names;
  for (std::size_t p = 0; p < nh; ++p)
    for (std::size_t q = 0; q < nh; ++q) {
      const Vec w = induced_pair(T, p, q);
      for (std::size_t r = 0; r < nh; ++r) h.bracket(p, q, r) = w[r];
    }
  return h;
}

AltMap lie_structure_element(const LieAction& ctx) {
  const std::size_t ng = ctx.dim_g(), nh = ctx.dim_h();
  return AltMap::tabulate(
      ng + nh, ng + nh, 2,
      [&](std::span<const std::size_t> idx, std::span<Scalar> out) {
        // idx[0] < idx[1], so a mixed pair is always (g, h)
        const std::size_t x = idx[0], y = idx[1];
        if (y < ng) {
          for (std::size_t k = 0; k < ng; ++k) out[k] = ctx.lie.bracket(x, y, k);
        } else if (x < ng) {
          for (std::size_t q = 0; q < nh; ++q) out[ng + q] = ctx.rho(x, y - ng, q);
        }
      },
      Exec::serial);
}

AltMap lie_module_element(const LieAction& ctx, const Scalar& lambda) {
  const std::size_t ng = ctx.dim_g(), nh = ctx.dim_h();
  return AltMap::tabulate(
      ng + nh, ng + nh, 2,
      [&](std::span<const std::size_t> idx, std::span<Scalar> out) {
        if (idx[0] < ng) return;
        for (std::size_t r = 0; r < nh; ++r) out[ng + r] = lambda * ctx.module.bracket(idx[0] - ng, idx[1] - ng, r);
      },
      Exec::serial);
}

AltMap lie_derived_bracket(const AltMap& P, const AltMap& Q, const LieAction& ctx, Exec exec) {
  check_cochain(P, ctx, "lie_derived_bracket");
  check_cochain(Q, ctx, "lie_derived_bracket");
  const VSplit split{ctx.dim_g(), ctx.dim_h()};
  const AltMap inner = nr_bracket(lie_structure_element(ctx), embed_alt(P, split), exec);
  AltMap out = project_alt(nr_bracket(inner, embed_alt(Q, split), exec), split);
  if (P.degree() % 2 == 1) out *= -1;
  return out;
}

AltMap delta_lambda(const AltMap& f, const LieAction& ctx, const Scalar& lambda, Exec exec) {
  check_cochain(f, ctx, "delta_lambda");
  const VSplit split{ctx.dim_g(), ctx.dim_h()};
  AltMap out = project_alt(nr_bracket(lie_module_element(ctx, lambda), embed_alt(f, split), exec), split);
  out *= -1;
  return out;
}

AltMap delta_T(const AltMap& f, const LieRBOperator& T, Exec exec) {
  AltMap out = delta_lambda(f, T.action, T.weight, exec);
  out += lie_derived_bracket(T.as_map(), f, T.action, exec);
  return out;
}

AltMap lie_mc_defect(const LieRBOperator& T) {
  const AltMap tm = T.as_map();
  AltMap out = delta_lambda(tm, T.action, T.weight);
  out += Scalar(1, 2) * lie_derived_bracket(tm, tm, T.action);
  return out;
}

AltMap lie_twisted_mc_defect(const LieRBOperator& T, const Matrix& t_prime) {
  require_wrbo_lie(T, "lie_twisted_mc_defect");
  if (t_prime.rows() != T.t.rows() || t_prime.cols() != T.t.cols())
    throw DimensionError("lie_twisted_mc_defect: perturbation has the wrong shape");
  const AltMap tp = AltMap::from_matrix(t_prime);
  AltMap out = delta_T(tp, T);
  out += Scalar(1, 2) * lie_derived_bracket(tp, tp, T.action);
  return out;
}

LieAction rho_T(const LieRBOperator& T) {
  const auto& ctx = T.action;
  const std::size_t ng = ctx.dim_g(), nh = ctx.dim_h();
  LieAlgebra coeff(ng);
  coeff.basis_names = ctx.lie.basis_names;
  LieAction rep(induced_lie_bracket(T), std::move(coeff));
  for (std::size_t p = 0; p < nh; ++p) {
    const Vec tu = T.t.column(p);
    for (std::size_t i = 0; i < ng; ++i) {
      Vec v = T.t.apply(ctx.rho.fiber(i, p));
      axpy(v, 1, ctx.lie.br(tu, unit_vec(ng, i)));
      for (std::size_t k = 0; k < ng; ++k) rep.rho(p, i, k) = v[k];
    }
  }
  return rep;
}

AltMap ce_coboundary(const AltMap& f, const LieAction& rep, Exec exec) {
  const std::size_t nl = rep.dim_g(), nm = rep.dim_h();
  if (f.source_dim() != nl || f.target_dim() != nm)
    throw DimensionError("ce_coboundary: cochain is not in Hom(wedge^n L, M)");
  const std::size_t n = f.degree();
  return AltMap::tabulate(
      nl, nm, n + 1,
      [&](std::span<const std::size_t> idx, std::span<Scalar> out) {
        std::vector<std::size_t> rest;
        rest.reserve(n);
        for (std::size_t i = 0; i <= n; ++i) {
          rest.clear();
          for (std::size_t k = 0; k <= n; ++k)
            if (k != i) rest.push_back(idx[k]);
          // (-1)^{i+1} with 1-based i
          const Vec y = f.evaluate_basis(rest);
          Vec acted(nm);
          for (std::size_t k = 0; k < nm; ++k)
            if (sgn(y[k]) != 0) axpy(acted, y[k], rep.rho.fiber(idx[i], k));
          axpy(out, sign_pow(static_cast<long long>(i)), acted);
        }
        std::vector<std::size_t> args(n);
        for (std::size_t i = 0; i <= n; ++i)
          for (std::size_t j = i + 1; j <= n; ++j) {
            std::size_t pos = 1;
            for (std::size_t k = 0; k <= n; ++k)
              if (k != i && k != j) args[pos++] = idx[k];
            f.accumulate_slot(out, sign_pow(static_cast<long long>(i + j)), args, 0,
                              rep.lie.bracket.fiber(idx[i], idx[j]));
          }
      },
      exec);
}

AltMap ce_d(const AltMap& f, const LieRBOperator& T, Exec exec) { return ce_coboundary(f, rho_T(T), exec); }

CochainComplexReport cohomology_dims_lie(const LieRBOperator& T, std::size_t max_degree, LieRoute route,
                                         Exec exec) {
  require_wrbo_lie(T, "cohomology_dims_lie");
  const std::size_t ng = T.action.dim_g(), nh = T.action.dim_h();
  std::vector<std::size_t> dims;
  for (std::size_t n = 0; n <= max_degree + 1; ++n) dims.push_back(checked_alt_dim(ng, nh, n));
  for (std::size_t n = 0; n <= max_degree; ++n) {
    if (dims[n] != 0 && dims[n + 1] > coefficient_cap() / dims[n])
      throw CapExceeded("differential matrix exceeds the coefficient cap");
  }
  const LieAction rep = rho_T(T);
  return build_complex(
      max_degree, [&](std::size_t n) { return dims[n]; },
      [&](std::size_t n, std::size_t c) {
        AltMap e(nh, ng, n);
        e.coeffs()[c] = 1;
        return route == LieRoute::twisted ? delta_T(e, T, Exec::serial).coeffs()
                                          : ce_coboundary(e, rep, Exec::serial).coeffs();
      },
      exec);
}

std::vector<Vec> graph_basis(const LieRBOperator& T) {
  const std::size_t ng = T.action.dim_g(), nh = T.action.dim_h();
  std::vector<Vec> basis;
  for (std::size_t p = 0; p < nh; ++p) {
    Vec v = T.t.column(p);
    v.resize(ng + nh);
    v[ng + p] = 1;
    basis.push_back(std::move(v));
  }
  return basis;
}

bool graph_is_subalgebra(const LieRBOperator& T) {
  return check_subalgebra(graph_basis(T), semidirect_lie(T.action, T.weight));
}

LieRBOperator commutatorize_operator(const RBOperator& T) {
  return LieRBOperator(commutatorize_action(T.action), T.weight, T.t);
}

bool bridge_check(const TensorMap& f, const RBOperator& T, Exec exec) {
  const BimoduleAction induced = induced_bimodule_T(T);
  const AltMap lhs = skew_symmetrize(hochschild_coboundary(f, induced, exec), exec);
  const AltMap rhs = ce_coboundary(skew_symmetrize(f, exec), commutatorize_action(induced), exec);
  return lhs == rhs;
}

CheckResult check_rb_morphism(const MorphismPair& pair, const LieRBOperator& T, const LieRBOperator& Tp) {
  const auto& ctx = T.action;
  const std::size_t ng = ctx.dim_g(), nh = ctx.dim_h();
  if (Tp.action.dim_g() != ng || Tp.action.dim_h() != nh || pair.phi.rows() != ng || pair.phi.cols() != ng ||
      pair.psi.rows() != nh || pair.psi.cols() != nh)
    throw DimensionError("check_rb_morphism: shape mismatch");
  if (!(Tp.action == ctx) || Tp.weight != T.weight)
    throw PreconditionError("check_rb_morphism: operators must share weight and action");
  CheckResult res;
  const Matrix& phi = pair.phi;
  const Matrix& psi = pair.psi;
  for (std::size_t i = 0; i < ng; ++i)
    for (std::size_t j = 0; j < ng; ++j)
      if (phi.apply(ctx.lie.bracket.fiber(i, j)) != ctx.lie.br(phi.column(i), phi.column(j)))
        res.record({i, j}, "phi is a Lie morphism");
  for (std::size_t p = 0; p < nh; ++p)
    for (std::size_t q = 0; q < nh; ++q)
      if (psi.apply(ctx.module.bracket.fiber(p, q)) != ctx.module.br(psi.column(p), psi.column(q)))
        res.record({p, q}, "psi is a Lie morphism");
  const Matrix lhs = phi * T.t, rhs = Tp.t * psi;
  for (std::size_t p = 0; p < nh; ++p)
    if (lhs.column(p) != rhs.column(p)) res.record({p}, "phi T = T' psi");
  for (std::size_t i = 0; i < ng; ++i)
    for (std::size_t p = 0; p < nh; ++p)
      if (psi.apply(ctx.rho.fiber(i, p)) != ctx.act(phi.column(i), psi.column(p)))
        res.record({i, p}, "psi(rho(x)u) = rho(phi x)psi(u)");
  return res;
}

}  // namespace wrb
