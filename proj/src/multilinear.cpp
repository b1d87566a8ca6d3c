#include "wrb/multilinear.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>

#include "wrb/error.hpp"

namespace wrb {

namespace {

std::atomic<std::size_t> g_cap{1'000'000};

std::size_t checked_size(std::size_t tuples, std::size_t target_dim) {
  if (target_dim != 0 && tuples > std::numeric_limits<std::size_t>::max() / target_dim)
    throw CapExceeded("coefficient count overflows");
  const std::size_t total = tuples * target_dim;
  if (total > g_cap.load()) {
    throw CapExceeded("map would hold " + std::to_string(total) + " coefficients, cap is " +
                      std::to_string(g_cap.load()));
  }
  return total;
}

std::size_t power(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::size_t>::max() / base)
      throw CapExceeded("tuple count overflows");
    r *= base;
  }
  return r;
}

// Calls visit(idx, weight) for every tuple in the product of the supports of
// args, weight being the product of the corresponding components.
template <class Visit>
void for_each_support_tuple(std::span<const Vec> args, Visit&& visit) {
  const std::size_t n = args.size();
  std::vector<std::vector<std::size_t>> support(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < args[k].size(); ++i)
      if (sgn(args[k][i]) != 0) support[k].push_back(i);
    if (support[k].empty()) return;
  }
  std::vector<std::size_t> pos(n, 0), idx(n);
  while (true) {
    Scalar w = 1;
    for (std::size_t k = 0; k < n; ++k) {
      idx[k] = support[k][pos[k]];
      w *= args[k][idx[k]];
    }
    visit(std::span<const std::size_t>(idx), w);
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (++pos[k] < support[k].size()) break;
      pos[k] = 0;
      if (k == 0) return;
    }
    if (n == 0) return;
  }
}

}  // namespace

void set_coefficient_cap(std::size_t cap) { g_cap.store(cap); }
std::size_t coefficient_cap() { return g_cap.load(); }

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

int perm_sign(std::span<const std::size_t> sigma) {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < sigma.size(); ++i)
    for (std::size_t j = i + 1; j < sigma.size(); ++j)
      if (sigma[i] > sigma[j]) ++inversions;
  return sign_pow(static_cast<long long>(inversions));
}

std::vector<Permutation> shuffles(std::size_t p, std::size_t q) {
  const std::size_t n = p + q;
  std::vector<Permutation> out;
  // choose which positions receive the first p slots, lexicographically
  std::vector<bool> mask(n, false);
  std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(p), true);
  do {
    Permutation s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask[i]) s.images.push_back(i);
    for (std::size_t i = 0; i < n; ++i)
      if (!mask[i]) s.images.push_back(i);
    s.sign = perm_sign(s.images);
    out.push_back(std::move(s));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

std::vector<Permutation> permutations(std::size_t n) {
  std::vector<Permutation> out;
  std::vector<std::size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    out.push_back({sigma, perm_sign(sigma)});
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

// ---------------------------------------------------------------- TensorMap

TensorMap::TensorMap(std::size_t source_dim, std::size_t target_dim, std::size_t degree)
    : source_dim_(source_dim),
      target_dim_(target_dim),
      degree_(degree),
      num_tuples_(power(source_dim, degree)),
      coeffs_(checked_size(num_tuples_, target_dim)) {}

TensorMap TensorMap::element(std::span<const Scalar> value, std::size_t source_dim) {
  TensorMap f(source_dim, value.size(), 0);
  std::copy(value.begin(), value.end(), f.coeffs_.begin());
  return f;
}

TensorMap TensorMap::identity(std::size_t dim) { return from_matrix(Matrix::identity(dim)); }

TensorMap TensorMap::from_matrix(const Matrix& m) {
  TensorMap f(m.cols(), m.rows(), 1);
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r) f.value(c)[r] = m(r, c);
  return f;
}

Matrix TensorMap::to_matrix() const {
  if (degree_ != 1) throw DimensionError("to_matrix: map is not of degree 1");
  Matrix m(target_dim_, source_dim_);
  for (std::size_t c = 0; c < source_dim_; ++c) m.set_column(c, value(c));
  return m;
}

std::size_t TensorMap::tuple_index(std::span<const std::size_t> idx) const {
  std::size_t t = 0;
  for (auto i : idx) t = t * source_dim_ + i;
  return t;
}

void TensorMap::decode(std::size_t tuple, std::span<std::size_t> idx) const {
  for (std::size_t k = degree_; k > 0; --k) {
    idx[k - 1] = tuple % source_dim_;
    tuple /= source_dim_;
  }
}

void TensorMap::accumulate_slot(std::span<Scalar> out, const Scalar& coeff,
                                std::span<const std::size_t> idx, std::size_t slot,
                                std::span<const Scalar> v) const {
  if (sgn(coeff) == 0) return;
  std::size_t prefix = 0, suffix = 0, stride = 1;
  for (std::size_t k = 0; k < slot; ++k) prefix = prefix * source_dim_ + idx[k];
  for (std::size_t k = degree_; k > slot + 1; --k) {
    suffix += idx[k - 1] * stride;
    stride *= source_dim_;
  }
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (sgn(v[j]) == 0) continue;
    const std::size_t t = (prefix * source_dim_ + j) * stride + suffix;
    axpy(out, coeff * v[j], value(t));
  }
}

Vec TensorMap::evaluate(std::span<const Vec> args) const {
  if (args.size() != degree_) throw DimensionError("TensorMap::evaluate: wrong number of arguments");
  for (const auto& a : args)
    if (a.size() != source_dim_) throw DimensionError("TensorMap::evaluate: argument length mismatch");
  Vec out(target_dim_);
  if (degree_ == 0) {
    std::copy(coeffs_.begin(), coeffs_.end(), out.begin());
    return out;
  }
  for_each_support_tuple(args, [&](std::span<const std::size_t> idx, const Scalar& w) {
    axpy(out, w, value_at(idx));
  });
  return out;
}

void TensorMap::check_same_shape(const TensorMap& o) const {
  if (source_dim_ != o.source_dim_ || target_dim_ != o.target_dim_ || degree_ != o.degree_)
    throw DimensionError("TensorMap: shape mismatch");
}

TensorMap& TensorMap::operator+=(const TensorMap& o) {
  check_same_shape(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

TensorMap& TensorMap::operator-=(const TensorMap& o) {
  check_same_shape(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

TensorMap& TensorMap::operator*=(const Scalar& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

// ------------------------------------------------------------------- AltMap

AltMap::AltMap(std::size_t source_dim, std::size_t target_dim, std::size_t degree)
    : source_dim_(source_dim),
      target_dim_(target_dim),
      degree_(degree),
      num_tuples_(binomial(source_dim, degree)),
      coeffs_(checked_size(num_tuples_, target_dim)) {}

AltMap AltMap::element(std::span<const Scalar> value, std::size_t source_dim) {
  AltMap f(source_dim, value.size(), 0);
  std::copy(value.begin(), value.end(), f.coeffs_.begin());
  return f;
}

AltMap AltMap::from_matrix(const Matrix& m) {
  AltMap f(m.cols(), m.rows(), 1);
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r) f.value(c)[r] = m(r, c);
  return f;
}

Matrix AltMap::to_matrix() const {
  if (degree_ != 1) throw DimensionError("to_matrix: map is not of degree 1");
  Matrix m(target_dim_, source_dim_);
  for (std::size_t c = 0; c < source_dim_; ++c) m.set_column(c, value(c));
  return m;
}

std::size_t AltMap::rank_of(std::span<const std::size_t> increasing) {
  std::size_t r = 0;
  for (std::size_t k = 0; k < increasing.size(); ++k) r += binomial(increasing[k], k + 1);
  return r;
}

const std::vector<std::vector<std::size_t>>& AltMap::tuples() const {
  static std::mutex mutex;
  static std::map<std::pair<std::size_t, std::size_t>,
                  std::unique_ptr<std::vector<std::vector<std::size_t>>>>
      cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[{source_dim_, degree_}];
  if (!slot) {
    slot = std::make_unique<std::vector<std::vector<std::size_t>>>(num_tuples_);
    if (degree_ <= source_dim_) {
      std::vector<bool> mask(source_dim_, false);
      std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(degree_), true);
      do {
        std::vector<std::size_t> t;
        for (std::size_t i = 0; i < source_dim_; ++i)
          if (mask[i]) t.push_back(i);
        (*slot)[rank_of(t)] = std::move(t);
      } while (std::prev_permutation(mask.begin(), mask.end()));
    }
  }
  return *slot;
}

int AltMap::canonical(std::span<const std::size_t> idx, std::size_t& rank) const {
  std::size_t sorted[16];
  std::vector<std::size_t> heap;
  std::size_t* s = sorted;
  if (idx.size() > 16) {
    heap.resize(idx.size());
    s = heap.data();
  }
  std::copy(idx.begin(), idx.end(), s);
  // insertion sort, counting transpositions
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i) {
    for (std::size_t j = i; j > 0 && s[j - 1] > s[j]; --j) {
      std::swap(s[j - 1], s[j]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (s[i] == s[i - 1]) return 0;
  rank = rank_of({s, idx.size()});
  return sign;
}

Vec AltMap::evaluate_basis(std::span<const std::size_t> idx) const {
  Vec out(target_dim_);
  accumulate_basis(out, 1, idx);
  return out;
}

void AltMap::accumulate_basis(std::span<Scalar> out, const Scalar& coeff,
                              std::span<const std::size_t> idx) const {
  if (idx.size() != degree_) throw DimensionError("AltMap: wrong number of arguments");
  std::size_t r = 0;
  const int sign = canonical(idx, r);
  if (sign == 0 || sgn(coeff) == 0) return;
  axpy(out, sign > 0 ? coeff : Scalar(-coeff), value(r));
}

void AltMap::accumulate_slot(std::span<Scalar> out, const Scalar& coeff,
                             std::span<const std::size_t> idx, std::size_t slot,
                             std::span<const Scalar> v) const {
  if (sgn(coeff) == 0) return;
  std::vector<std::size_t> work(idx.begin(), idx.end());
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (sgn(v[j]) == 0) continue;
    work[slot] = j;
    accumulate_basis(out, coeff * v[j], work);
  }
}

Vec AltMap::evaluate(std::span<const Vec> args) const {
  if (args.size() != degree_) throw DimensionError("AltMap::evaluate: wrong number of arguments");
  for (const auto& a : args)
    if (a.size() != source_dim_) throw DimensionError("AltMap::evaluate: argument length mismatch");
  Vec out(target_dim_);
  if (degree_ == 0) {
    std::copy(coeffs_.begin(), coeffs_.end(), out.begin());
    return out;
  }
  for_each_support_tuple(args, [&](std::span<const std::size_t> idx, const Scalar& w) {
    accumulate_basis(out, w, idx);
  });
  return out;
}

void AltMap::check_same_shape(const AltMap& o) const {
  if (source_dim_ != o.source_dim_ || target_dim_ != o.target_dim_ || degree_ != o.degree_)
    throw DimensionError("AltMap: shape mismatch");
}

AltMap& AltMap::operator+=(const AltMap& o) {
  check_same_shape(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

AltMap& AltMap::operator-=(const AltMap& o) {
  check_same_shape(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

AltMap& AltMap::operator*=(const Scalar& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

TensorMap to_tensor(const AltMap& f) {
  return TensorMap::tabulate(
      f.source_dim(), f.target_dim(), f.degree(),
      [&](std::span<const std::size_t> idx, std::span<Scalar> out) { f.accumulate_basis(out, 1, idx); },
      Exec::serial);
}

// --------------------------------------------------------------- Brackets

namespace {

void check_composable(const TensorMap& f, const TensorMap& g) {
  if (f.source_dim() != g.source_dim() || g.target_dim() != f.source_dim())
    throw DimensionError("composition: maps do not act on a common space");
}

// out += coeff * (f o_i g)(idx), with i 1-based.
void accumulate_insert(std::span<Scalar> out, const Scalar& coeff, const TensorMap& f,
                       const TensorMap& g, std::size_t i, std::span<const std::size_t> idx) {
  const std::size_t n = g.degree();
  const auto inner = g.value_at(idx.subspan(i - 1, n));
  if (is_zero(inner)) return;
  // outer argument list: idx[0..i-1), slot, idx[i-1+n..)
  std::size_t outer[32];
  std::vector<std::size_t> heap;
  std::size_t* o = outer;
  if (f.degree() > 32) {
    heap.resize(f.degree());
    o = heap.data();
  }
  for (std::size_t k = 0; k + 1 < i; ++k) o[k] = idx[k];
  o[i - 1] = 0;
  for (std::size_t k = i; k < f.degree(); ++k) o[k] = idx[k + n - 1];
  f.accumulate_slot(out, coeff, {o, f.degree()}, i - 1, inner);
}

}  // namespace

TensorMap g_insert(const TensorMap& f, const TensorMap& g, std::size_t i, Exec exec) {
  check_composable(f, g);
  const std::size_t m = f.degree(), n = g.degree();
  if (m == 0 || i < 1 || i > m) throw DimensionError("g_insert: position out of range");
  return TensorMap::tabulate(
      f.source_dim(), f.target_dim(), m + n - 1,
      [&](std::span<const std::size_t> idx, std::span<Scalar> out) {
        accumulate_insert(out, 1, f, g, i, idx);
      },
      exec);
}

TensorMap g_bracket(const TensorMap& f, const TensorMap& g, Exec exec) {
  check_composable(f, g);
  check_composable(g, f);
  const long long m = static_cast<long long>(f.degree());
  const long long n = static_cast<long long>(g.degree());
  if (m < 1 || n < 1) throw DimensionError("g_bracket: degree-0 operands are not supported");
  const Scalar outer_sign = -sign_pow((m - 1) * (n - 1));
  return TensorMap::tabulate(
      f.source_dim(), f.target_dim(), static_cast<std::size_t>(m + n - 1),
      [&](std::span<const std::size_t> idx, std::span<Scalar> out) {
        for (long long i = 1; i <= m; ++i)
          accumulate_insert(out, sign_pow((i - 1) * (n - 1)), f, g, static_cast<std::size_t>(i), idx);
        for (long long i = 1; i <= n; ++i)
          accumulate_insert(out, outer_sign * sign_pow((i - 1) * (m - 1)), g, f,
                            static_cast<std::size_t>(i), idx);
      },
      exec);
}

namespace {

void check_composable(const AltMap& f, const AltMap& g) {
  if (f.source_dim() != g.source_dim() || g.target_dim() != f.source_dim())
    throw DimensionError("composition: maps do not act on a common space");
}

// out += coeff * (f <> g)(idx) for an increasing idx.
void accumulate_diamond(std::span<Scalar> out, const Scalar& coeff, const AltMap& f, const AltMap& g,
                        const std::vector<Permutation>& shuffle_set, std::span<const std::size_t> idx) {
  const std::size_t n = g.degree();
  const std::size_t m = f.degree();
  std::vector<std::size_t> sub(n), args(m);
  for (const auto& s : shuffle_set) {
    for (std::size_t k = 0; k < n; ++k) sub[k] = idx[s.images[k]];
    const auto inner = g.value(AltMap::rank_of(sub));
    if (is_zero(inner)) continue;
    for (std::size_t k = 1; k < m; ++k) args[k] = idx[s.images[n + k - 1]];
    f.accumulate_slot(out, s.sign > 0 ? coeff : Scalar(-coeff), args, 0, inner);
  }
}

}  // namespace

AltMap nr_diamond(const AltMap& f, const AltMap& g, Exec exec) {
  check_composable(f, g);
  const std::size_t m = f.degree(), n = g.degree();
  if (m == 0) return AltMap(f.source_dim(), f.target_dim(), n == 0 ? 0 : n - 1);
  const auto shuffle_set = shuffles(n, m - 1);
  return AltMap::tabulate(
      f.source_dim(), f.target_dim(), m + n - 1,
      [&](std::span<const std::size_t> idx, std::span<Scalar> out) {
        accumulate_diamond(out, 1, f, g, shuffle_set, idx);
      },
      exec);
}

AltMap nr_bracket(const AltMap& f, const AltMap& g, Exec exec) {
  check_composable(f, g);
  check_composable(g, f);
  const std::size_t m = f.degree(), n = g.degree();
  if (m == 0 && n == 0) throw DimensionError("nr_bracket: both operands have degree 0");
  const std::size_t out_degree = m + n - 1;
  const Scalar second = -sign_pow((static_cast<long long>(m) - 1) * (static_cast<long long>(n) - 1));
  const auto fg = m > 0 ? shuffles(n, m - 1) : std::vector<Permutation>{};
  const auto gf = n > 0 ? shuffles(m, n - 1) : std::vector<Permutation>{};
  return AltMap::tabulate(
      f.source_dim(), f.target_dim(), out_degree,
      [&](std::span<const std::size_t> idx, std::span<Scalar> out) {
        if (m > 0) accumulate_diamond(out, 1, f, g, fg, idx);
        if (n > 0) accumulate_diamond(out, second, g, f, gf, idx);
      },
      exec);
}

AltMap skew_symmetrize(const TensorMap& f, Exec exec) {
  const std::size_t n = f.degree();
  const auto perms = permutations(n);
  return AltMap::tabulate(
      f.source_dim(), f.target_dim(), n,
      [&](std::span<const std::size_t> idx, std::span<Scalar> out) {
        std::vector<std::size_t> permuted(n);
        for (const auto& p : perms) {
          for (std::size_t k = 0; k < n; ++k) permuted[k] = idx[p.images[k]];
          axpy(out, p.sign, f.value_at(permuted));
        }
      },
      exec);
}

TensorMap embed_hom(const TensorMap& f, const VSplit& split) {
  if (f.source_dim() != split.dim_b || f.target_dim() != split.dim_a)
    throw DimensionError("embed_hom: map is not in Hom(B^n, A)");
  TensorMap big(split.dim(), split.dim(), f.degree());
  std::vector<std::size_t> idx(f.degree()), shifted(f.degree());
  for (std::size_t t = 0; t < f.num_tuples(); ++t) {
    f.decode(t, idx);
    for (std::size_t k = 0; k < idx.size(); ++k) shifted[k] = idx[k] + split.dim_a;
    const auto src = f.value(t);
    std::copy(src.begin(), src.end(), big.value(big.tuple_index(shifted)).begin());
  }
  return big;
}

TensorMap project_hom(const TensorMap& f, const VSplit& split) {
  if (f.source_dim() != split.dim() || f.target_dim() != split.dim())
    throw DimensionError("project_hom: map is not in Hom(V^n, V)");
  TensorMap small(split.dim_b, split.dim_a, f.degree());
  std::vector<std::size_t> idx(f.degree()), shifted(f.degree());
  for (std::size_t t = 0; t < small.num_tuples(); ++t) {
    small.decode(t, idx);
    for (std::size_t k = 0; k < idx.size(); ++k) shifted[k] = idx[k] + split.dim_a;
    const auto src = f.value_at(shifted);
    std::copy(src.begin(), src.begin() + static_cast<std::ptrdiff_t>(split.dim_a), small.value(t).begin());
  }
  return small;
}

AltMap embed_alt(const AltMap& f, const VSplit& split) {
  if (f.source_dim() != split.dim_b || f.target_dim() != split.dim_a)
    throw DimensionError("embed_alt: map is not in Hom(wedge^n h, g)");
  AltMap big(split.dim(), split.dim(), f.degree());
  const auto& tup = f.tuples();
  std::vector<std::size_t> shifted(f.degree());
  for (std::size_t r = 0; r < f.num_tuples(); ++r) {
    for (std::size_t k = 0; k < shifted.size(); ++k) shifted[k] = tup[r][k] + split.dim_a;
    const auto src = f.value(r);
    std::copy(src.begin(), src.end(), big.value(AltMap::rank_of(shifted)).begin());
  }
  return big;
}

AltMap project_alt(const AltMap& f, const VSplit& split) {
  if (f.source_dim() != split.dim() || f.target_dim() != split.dim())
    throw DimensionError("project_alt: map is not in Hom(wedge^n W, W)");
  AltMap small(split.dim_b, split.dim_a, f.degree());
  const auto& tup = small.tuples();
  std::vector<std::size_t> shifted(f.degree());
  for (std::size_t r = 0; r < small.num_tuples(); ++r) {
    for (std::size_t k = 0; k < shifted.size(); ++k) shifted[k] = tup[r][k] + split.dim_a;
    const auto src = f.value(AltMap::rank_of(shifted));
    std::copy(src.begin(), src.begin() + static_cast<std::ptrdiff_t>(split.dim_a), small.value(r).begin());
  }
  return small;
}

}  // namespace wrb
