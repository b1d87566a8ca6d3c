#pragma once

// Exact rational scalars and dense matrices over Q.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wrb/parallel.hpp"

namespace wrb {

/// GMP rationals are kept in canonical form (reduced, positive denominator),
/// so equality is structural.
using Scalar = mpq_class;
using Vec = std::vector<Scalar>;

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed text
/// or a zero denominator.
Scalar parse_scalar(std::string_view text);
std::string format_scalar(const Scalar& x);

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero(std::span<const Scalar> v);
/// y += a * x
void axpy(std::span<Scalar> y, const Scalar& a, std::span<const Scalar> x);
Vec add(std::span<const Scalar> x, std::span<const Scalar> y);
Vec sub(std::span<const Scalar> x, std::span<const Scalar> y);
Vec scaled(const Scalar& a, std::span<const Scalar> x);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix scalar(std::size_t n, const Scalar& s);
  /// All rows must have equal length.
  static Matrix from_rows(const std::vector<Vec>& rows);
  static Matrix from_columns(std::size_t rows, const std::vector<Vec>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Scalar> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  std::span<Scalar> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
  Vec column(std::size_t c) const;
  void set_column(std::size_t c, std::span<const Scalar> values);

  Vec apply(std::span<const Scalar> x) const;
  Matrix transpose() const;
  bool is_zero() const;

  const std::vector<Scalar>& entries() const { return entries_; }

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

/// Columns of `right` appended to `left`; row counts must agree.
Matrix hstack(const Matrix& left, const Matrix& right);

/// Reduced row echelon form in place; returns the pivot column of each
/// nonzero row. Pivots are chosen as the first nonzero entry in the column.
std::vector<std::size_t> row_reduce(Matrix& m, Exec exec = Exec::parallel);

std::size_t rank(const Matrix& m, Exec exec = Exec::parallel);

/// Basis of {x : m x = 0}, one vector per free column.
std::vector<Vec> kernel_basis(const Matrix& m, Exec exec = Exec::parallel);

/// Some x with m x = b, or nullopt when the system is inconsistent.
/// Throws DimensionError when b.size() != m.rows().
std::optional<Vec> solve(const Matrix& m, std::span<const Scalar> b,
                         Exec exec = Exec::parallel);

}  // namespace wrb
