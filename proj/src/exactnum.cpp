#include "wrb/exactnum.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "wrb/error.hpp"

namespace wrb {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"}
                                                               : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw std::invalid_argument("malformed rational \"" + std::string(text) + "\"");
  }
  const mpz_class d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in \"" + std::string(text) + "\"");
  Scalar q(mpz_class(std::string(num), 10), d);
  q.canonicalize();
  if (text.front() == '-') q = -q;
  return q;
}

std::string format_scalar(const Scalar& x) {
  Scalar c = x;
  c.canonicalize();
  return c.get_str();
}

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(std::span<const Scalar> v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return sgn(x) == 0; });
}

void axpy(std::span<Scalar> y, const Scalar& a, std::span<const Scalar> x) {
  if (y.size() != x.size()) throw DimensionError("axpy: length mismatch");
  if (sgn(a) == 0) return;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (sgn(x[i]) != 0) y[i] += a * x[i];
  }
}

Vec add(std::span<const Scalar> x, std::span<const Scalar> y) {
  if (x.size() != y.size()) throw DimensionError("vector add: length mismatch");
  Vec out(x.begin(), x.end());
  for (std::size_t i = 0; i < y.size(); ++i) out[i] += y[i];
  return out;
}

Vec sub(std::span<const Scalar> x, std::span<const Scalar> y) {
  if (x.size() != y.size()) throw DimensionError("vector sub: length mismatch");
  Vec out(x.begin(), x.end());
  for (std::size_t i = 0; i < y.size(); ++i) out[i] -= y[i];
  return out;
}

Vec scaled(const Scalar& a, std::span<const Scalar> x) {
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = a * x[i];
  return out;
}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) { return scalar(n, 1); }

Matrix Matrix::scalar(std::size_t n, const Scalar& s) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("Matrix::from_rows: ragged rows");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vec>& cols) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
  return m;
}

Vec Matrix::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::set_column(std::size_t c, std::span<const Scalar> values) {
  if (values.size() != rows_) throw DimensionError("Matrix::set_column: length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = values[r];
}

Vec Matrix::apply(std::span<const Scalar> x) const {
  if (x.size() != cols_) throw DimensionError("Matrix::apply: length mismatch");
  Vec y(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (sgn(x[c]) == 0) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Scalar& e = (*this)(r, c);
      if (sgn(e) != 0) y[r] += e * x[c];
    }
  }
  return y;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const { return wrb::is_zero(entries_); }

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product: inner dimension mismatch");
  Matrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& e = a(i, k);
      if (sgn(e) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (sgn(b(k, j)) != 0) p(i, j) += e * b(k, j);
      }
    }
  return p;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix sum: shape mismatch");
  Matrix s = a;
  for (std::size_t i = 0; i < s.entries_.size(); ++i) s.entries_[i] += b.entries_[i];
  return s;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix difference: shape mismatch");
  Matrix s = a;
  for (std::size_t i = 0; i < s.entries_.size(); ++i) s.entries_[i] -= b.entries_[i];
  return s;
}

Matrix operator*(const Scalar& s, const Matrix& a) {
  Matrix p = a;
  for (auto& e : p.entries_) e *= s;
  return p;
}

Matrix hstack(const Matrix& left, const Matrix& right) {
  if (left.rows() != right.rows()) throw DimensionError("hstack: row count mismatch");
  Matrix m(left.rows(), left.cols() + right.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::copy(left.row(r).begin(), left.row(r).end(), m.row(r).begin());
    std::copy(right.row(r).begin(), right.row(r).end(), m.row(r).begin() + left.cols());
  }
  return m;
}

std::vector<std::size_t> row_reduce(Matrix& m, Exec exec) {
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    std::size_t r = pivot_row;
    while (r < m.rows() && sgn(m(r, col)) == 0) ++r;
    if (r == m.rows()) continue;
    if (r != pivot_row) {
      auto a = m.row(r);
      auto b = m.row(pivot_row);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    const Scalar inv = 1 / m(pivot_row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(pivot_row, c) *= inv;

    const auto pivot = m.row(pivot_row);
    for_each_index(m.rows(), exec, [&](std::size_t i) {
      if (i == pivot_row) return;
      const Scalar factor = m(i, col);
      if (sgn(factor) == 0) return;
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (sgn(pivot[c]) != 0) m(i, c) -= factor * pivot[c];
      }
    });
    pivots.push_back(col);
    ++pivot_row;
  }
  return pivots;
}

std::size_t rank(const Matrix& m, Exec exec) {
  Matrix work = m;
  return row_reduce(work, exec).size();
}

std::vector<Vec> kernel_basis(const Matrix& m, Exec exec) {
  Matrix work = m;
  const auto pivots = row_reduce(work, exec);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec x(m.cols());
    x[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = -work(k, free);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<Vec> solve(const Matrix& m, std::span<const Scalar> b, Exec exec) {
  if (b.size() != m.rows()) throw DimensionError("solve: right-hand side length mismatch");
  Matrix rhs(m.rows(), 1);
  rhs.set_column(0, b);
  Matrix work = hstack(m, rhs);
  const auto pivots = row_reduce(work, exec);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vec x(m.cols());
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = work(k, m.cols());
  return x;
}

}  // namespace wrb
