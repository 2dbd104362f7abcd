#include "ktorbit/rat_matrix.hpp"

#include <sstream>
#include <utility>

namespace ktorbit {

namespace {

using IntRow = std::vector<mpz_class>;

// Multiplies each row by the lcm of its denominators. `scale` receives the
// product of the row multipliers so that det(m) = det(result) / scale.
std::vector<IntRow> to_integer_rows(const RatMatrix& m, mpz_class* scale) {
  std::vector<IntRow> out(m.rows(), IntRow(m.cols()));
  mpz_class total = 1;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class lcm = 1;
    for (const Rational& x : m.row(r)) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.value().get_den_mpz_t());
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const mpq_class& x = m(r, c).value();
      out[r][c] = x.get_num() * (lcm / x.get_den());
    }
    total *= lcm;
  }
  if (scale != nullptr) *scale = total;
  return out;
}

// In-place fraction-free echelon reduction. Returns the rank; `sign` tracks row
// swaps and `last_pivot` the final Bareiss pivot (the determinant, up to sign,
// when the matrix is square and of full rank).
std::size_t bareiss_echelon(std::vector<IntRow>& a, std::size_t cols, int* sign, mpz_class* last_pivot) {
  const std::size_t rows = a.size();
  std::size_t rank = 0;
  int swaps = 1;
  mpz_class previous = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      std::swap(a[pivot], a[rank]);
      swaps = -swaps;
    }
    const mpz_class& p = a[rank][col];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        mpz_class v = a[i][j] * p - a[i][col] * a[rank][j];
        mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
      }
      a[i][col] = 0;
    }
    previous = p;
    ++rank;
  }
  if (sign != nullptr) *sign = swaps;
  if (last_pivot != nullptr) *last_pivot = previous;
  return rank;
}

}  // namespace

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix initializer");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::select(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
  RatMatrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = (*this)(rows[i], cols[j]);
  }
  return out;
}

Rational rat_det(const RatMatrix& m) {
  if (!m.is_square()) {
    throw DimensionError("determinant of a " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                         " matrix");
  }
  if (m.rows() == 0) return Rational(1);
  mpz_class scale;
  auto a = to_integer_rows(m, &scale);
  int sign = 1;
  mpz_class pivot;
  if (bareiss_echelon(a, m.cols(), &sign, &pivot) < m.rows()) return Rational(0);
  return Rational(sign * pivot, scale);
}

std::size_t rat_rank(const RatMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  auto a = to_integer_rows(m, nullptr);
  return bareiss_echelon(a, m.cols(), nullptr, nullptr);
}

std::optional<std::vector<Rational>> solve_exact(const RatMatrix& m, std::span<const Rational> rhs) {
  if (rhs.size() != m.rows()) throw DimensionError("right-hand side length does not match row count");
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  RatMatrix aug(rows, cols + 1);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) aug(r, c) = m(r, c);
    aug(r, cols) = rhs[r];
  }

  // Gauss-Jordan to reduced row echelon form.
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && aug(pivot, col).is_zero()) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t j = 0; j <= cols; ++j) std::swap(aug(pivot, j), aug(rank, j));
    }
    const Rational inv = Rational(1) / aug(rank, col);
    for (std::size_t j = col; j <= cols; ++j) aug(rank, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || aug(i, col).is_zero()) continue;
      const Rational f = aug(i, col);
      for (std::size_t j = col; j <= cols; ++j) aug(i, j) -= f * aug(rank, j);
    }
    pivot_cols.push_back(col);
    ++rank;
  }
  for (std::size_t r = rank; r < rows; ++r) {
    if (!aug(r, cols).is_zero()) return std::nullopt;
  }
  std::vector<Rational> x(cols);
  for (std::size_t r = 0; r < rank; ++r) x[pivot_cols[r]] = aug(r, cols);
  return x;
}

std::string to_string(const RatMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r == 0 ? "[" : ", [");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c == 0 ? "" : ", ") << m(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace ktorbit
