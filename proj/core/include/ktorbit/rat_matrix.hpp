#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ktorbit/rational.hpp"

namespace ktorbit {

/// Raised when matrix shapes do not fit the requested operation.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Small dense row-major matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RatMatrix identity(std::size_t n);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  [[nodiscard]] std::span<const Rational> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  [[nodiscard]] std::span<Rational> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }

  /// Submatrix built from the listed rows and columns, in the given order.
  [[nodiscard]] RatMatrix select(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
/// Rows are first scaled to integers, so all intermediate work is in Z.
/// Throws DimensionError for non-square input.
Rational rat_det(const RatMatrix& m);

/// Exact rank over Q, via fraction-free row echelon form.
std::size_t rat_rank(const RatMatrix& m);

/// A solution x of m x = rhs when the system is consistent, nullopt otherwise.
/// When the solution is not unique the free variables are set to zero.
std::optional<std::vector<Rational>> solve_exact(const RatMatrix& m, std::span<const Rational> rhs);

std::string to_string(const RatMatrix& m);

}  // namespace ktorbit
