#include "wrb/ybe.hpp"

namespace wrb {

TensorElement::TensorElement(Algebra a, Matrix c) : algebra(std::move(a)), coeffs(std::move(c)) {
  if (coeffs.rows() != algebra.dim() || coeffs.cols() != algebra.dim())
    throw DimensionError("tensor element coefficients must be dim A x dim A");
}

namespace {

void check_square(const Matrix& R, std::size_t n, const char* what) {
  if (R.rows() != n || R.cols() != n) throw DimensionError(std::string(what) + ": map must be square of dim A");
}

// Elements of A (x) A (x) A as dense cubes.
class Cube {
 public:
  explicit Cube(std::size_t n) : n_(n), c_(n * n * n) {}
  Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * n_ + j) * n_ + k]; }
  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * n_ + j) * n_ + k]; }
  Vec& data() { return c_; }
  const Vec& data() const { return c_; }

  /// componentwise product (x1 (x) x2 (x) x3)(y1 (x) y2 (x) y3) = x1y1 (x) x2y2 (x) x3y3
  Cube times(const Cube& o, const Algebra& a) const {
    Cube out(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t k = 0; k < n_; ++k) {
          const Scalar& x = (*this)(i, j, k);
          if (sgn(x) == 0) continue;
          for (std::size_t p = 0; p < n_; ++p)
            for (std::size_t q = 0; q < n_; ++q)
              for (std::size_t s = 0; s < n_; ++s) {
                const Scalar& y = o(p, q, s);
                if (sgn(y) == 0) continue;
                const Scalar w = x * y;
                const auto f1 = a.mu.fiber(i, p), f2 = a.mu.fiber(j, q), f3 = a.mu.fiber(k, s);
                for (std::size_t u = 0; u < n_; ++u) {
                  if (sgn(f1[u]) == 0) continue;
                  for (std::size_t v = 0; v < n_; ++v) {
                    if (sgn(f2[v]) == 0) continue;
                    const Scalar w2 = w * f1[u] * f2[v];
                    for (std::size_t z = 0; z < n_; ++z)
                      if (sgn(f3[z]) != 0) out(u, v, z) += w2 * f3[z];
                  }
                }
              }
        }
    return out;
  }

 private:
  std::size_t n_;
  Vec c_;
};

// r placed in two of the three factors with the unit in the remaining one.
Cube place(const TensorElement& r, int slot_of_unit) {
  const std::size_t n = r.algebra.dim();
  const Vec& one = *r.algebra.unit;
  Cube c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar& x = r.coeffs(i, j);
      if (sgn(x) == 0) continue;
      for (std::size_t e = 0; e < n; ++e) {
        if (sgn(one[e]) == 0) continue;
        const Scalar w = x * one[e];
        if (slot_of_unit == 2) c(i, j, e) += w;       // r12
        else if (slot_of_unit == 1) c(i, e, j) += w;  // r13
        else c(e, i, j) += w;                         // r23
      }
    }
  return c;
}

}  // namespace

TensorMap maybe_defect(const Algebra& a, const Matrix& R, const Scalar& lambda) {
  const std::size_t n = a.dim();
  check_square(R, n, "maybe_defect");
  const Scalar l2 = lambda * lambda;
  return TensorMap::tabulate(n, n, 2, [&](std::span<const std::size_t> idx, std::span<Scalar> out) {
    const Vec ra = R.column(idx[0]), rb = R.column(idx[1]);
    const Vec ea = unit_vec(n, idx[0]), eb = unit_vec(n, idx[1]);
    axpy(out, 1, a.mul(ra, rb));
    axpy(out, -1, R.apply(add(a.mul(ra, eb), a.mul(ea, rb))));
    axpy(out, l2, a.mu.fiber(idx[0], idx[1]));
  });
}

Matrix rb_to_modified(const RBOperator& T) {
  if (!(T.action == adjoint_bimodule(T.action.algebra)))
    throw PreconditionError("rb_to_modified: operator must act on the adjoint bimodule");
  return Matrix::scalar(T.action.dim_a(), T.weight) + Scalar(2) * T.t;
}

RBOperator modified_to_rb(const Algebra& a, const Matrix& R, const Scalar& lambda) {
  check_square(R, a.dim(), "modified_to_rb");
  if (!maybe_defect(a, R, lambda).is_zero())
    throw PreconditionError("modified_to_rb: R does not solve the modified associative Yang-Baxter equation");
  return RBOperator(adjoint_bimodule(a), lambda, Scalar(1, 2) * (R - Matrix::scalar(a.dim(), lambda)));
}

WaybeCheck waybe_check(const TensorElement& r, const Scalar& lambda) {
  if (!r.algebra.unit) throw PreconditionError("waybe_check: the algebra has no unit");
  const Cube r12 = place(r, 2), r13 = place(r, 1), r23 = place(r, 0);
  Cube d = r13.times(r12, r.algebra);
  axpy(d.data(), -1, r12.times(r23, r.algebra).data());
  axpy(d.data(), 1, r23.times(r13, r.algebra).data());
  axpy(d.data(), -lambda, r13.data());
  WaybeCheck res;
  res.defect = std::move(d.data());
  res.ok = is_zero(res.defect);
  return res;
}

RBOperator aybe_to_rb(const TensorElement& r, const Scalar& lambda) {
  if (!waybe_check(r, lambda).ok)
    throw PreconditionError("aybe_to_rb: r is not a weighted associative Yang-Baxter solution");
  const Algebra& a = r.algebra;
  const std::size_t n = a.dim();
  Matrix t(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    Vec col(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (sgn(r.coeffs(i, j)) == 0) continue;
        axpy(col, r.coeffs(i, j), a.mul(a.mu.fiber(i, c), unit_vec(n, j)));
      }
    t.set_column(c, col);
  }
  return RBOperator(adjoint_bimodule(a), -lambda, std::move(t));
}

AltMap mybe_defect(const LieAlgebra& g, const Matrix& R, const Scalar& lambda) {
  const std::size_t n = g.dim();
  check_square(R, n, "mybe_defect");
  const Scalar l2 = lambda * lambda;
  return AltMap::tabulate(n, n, 2, [&](std::span<const std::size_t> idx, std::span<Scalar> out) {
    const Vec rx = R.column(idx[0]), ry = R.column(idx[1]);
    const Vec ex = unit_vec(n, idx[0]), ey = unit_vec(n, idx[1]);
    axpy(out, 1, g.br(rx, ry));
    axpy(out, -1, R.apply(add(g.br(rx, ey), g.br(ex, ry))));
    axpy(out, l2, g.bracket.fiber(idx[0], idx[1]));
  });
}

Matrix rb_to_modified(const LieRBOperator& T) {
  if (!(T.action == adjoint_lie_action(T.action.lie)))
    throw PreconditionError("rb_to_modified: operator must act on the adjoint representation");
  return Matrix::scalar(T.action.dim_g(), T.weight) + Scalar(2) * T.t;
}

}  // namespace wrb
