#pragma once

#include <algorithm>
#include <array>
#include <concepts>
#include <cstddef>
#include <map>
#include <span>
#include <sstream>
#include <string>
#include <string_view>

#include "ktorbit/rational.hpp"

namespace ktorbit {

/// Multivariate polynomial in N variables with exact rational coefficients.
///
/// Sparse: only nonzero terms are stored, keyed by exponent vector, so the
/// zero polynomial is the empty map and equality is structural.
template <std::size_t N>
class Polynomial {
 public:
  using Exponents = std::array<unsigned, N>;
  using TermMap = std::map<Exponents, Rational>;

  Polynomial() = default;
  Polynomial(const Rational& constant) {  // NOLINT(google-explicit-constructor)
    if (!constant.is_zero()) terms_[Exponents{}] = constant;
  }
  template <std::integral I>
  Polynomial(I constant) : Polynomial(Rational(constant)) {}  // NOLINT

  static Polynomial variable(std::size_t index) {
    Exponents e{};
    e.at(index) = 1;
    return monomial(e, Rational(1));
  }

  static Polynomial monomial(const Exponents& exponents, const Rational& coefficient) {
    Polynomial p;
    if (!coefficient.is_zero()) p.terms_[exponents] = coefficient;
    return p;
  }

  [[nodiscard]] const TermMap& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t term_count() const { return terms_.size(); }

  [[nodiscard]] Rational coefficient(const Exponents& exponents) const {
    const auto it = terms_.find(exponents);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  [[nodiscard]] Rational constant_term() const { return coefficient(Exponents{}); }

  /// Total degree; -1 for the zero polynomial.
  [[nodiscard]] int total_degree() const {
    int best = -1;
    for (const auto& [e, c] : terms_) {
      int d = 0;
      for (unsigned k : e) d += static_cast<int>(k);
      if (d > best) best = d;
    }
    return best;
  }

  [[nodiscard]] int degree_in(std::size_t index) const {
    int best = -1;
    for (const auto& [e, c] : terms_) best = std::max(best, static_cast<int>(e[index]));
    return best;
  }

  Polynomial& operator+=(const Polynomial& rhs) {
    for (const auto& [e, c] : rhs.terms_) accumulate(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& rhs) {
    for (const auto& [e, c] : rhs.terms_) accumulate(e, -c);
    return *this;
  }
  Polynomial& operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator-(const Polynomial& p) {
    Polynomial out;
    for (const auto& [e, c] : p.terms_) out.terms_.emplace(e, -c);
    return out;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e;
        for (std::size_t k = 0; k < N; ++k) e[k] = ea[k] + eb[k];
        out.accumulate(e, ca * cb);
      }
    }
    return out;
  }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  [[nodiscard]] Polynomial pow(unsigned exponent) const {
    Polynomial result(Rational(1));
    Polynomial base = *this;
    while (exponent > 0) {
      if ((exponent & 1U) != 0) result *= base;
      exponent >>= 1U;
      if (exponent > 0) base *= base;
    }
    return result;
  }

  [[nodiscard]] Polynomial derivative(std::size_t index) const {
    Polynomial out;
    for (const auto& [e, c] : terms_) {
      if (e[index] == 0) continue;
      Exponents d = e;
      d[index] -= 1;
      out.accumulate(d, c * Rational(static_cast<long>(e[index])));
    }
    return out;
  }

  [[nodiscard]] Rational evaluate(std::span<const Rational, N> point) const {
    Rational sum;
    for (const auto& [e, c] : terms_) {
      Rational term = c;
      for (std::size_t k = 0; k < N; ++k) {
        if (e[k] != 0) term *= point[k].pow(static_cast<int>(e[k]));
      }
      sum += term;
    }
    return sum;
  }

  [[nodiscard]] double evaluate(std::span<const double, N> point) const {
    double sum = 0.0;
    for (const auto& [e, c] : terms_) {
      double term = c.to_double();
      for (std::size_t k = 0; k < N; ++k) {
        for (unsigned i = 0; i < e[k]; ++i) term *= point[k];
      }
      sum += term;
    }
    return sum;
  }

  /// Replaces variable k by replacement[k] (a polynomial in M variables).
  template <std::size_t M>
  [[nodiscard]] Polynomial<M> substitute(const std::array<Polynomial<M>, N>& replacement) const {
    Polynomial<M> out;
    for (const auto& [e, c] : terms_) {
      Polynomial<M> term(c);
      for (std::size_t k = 0; k < N; ++k) {
        if (e[k] != 0) term *= replacement[k].pow(e[k]);
      }
      out += term;
    }
    return out;
  }

  [[nodiscard]] std::string to_string(std::span<const std::string_view, N> names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest total degree first reads more naturally.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      const bool is_constant = e == Exponents{};
      Rational magnitude = c.abs();
      if (first) {
        if (c.sign() < 0) os << '-';
      } else {
        os << (c.sign() < 0 ? " - " : " + ");
      }
      first = false;
      bool wrote = false;
      if (is_constant || magnitude != Rational(1)) {
        os << magnitude;
        wrote = true;
      }
      for (std::size_t k = 0; k < N; ++k) {
        if (e[k] == 0) continue;
        if (wrote) os << '*';
        os << names[k];
        if (e[k] > 1) os << '^' << e[k];
        wrote = true;
      }
    }
    return os.str();
  }

 private:
  void accumulate(const Exponents& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  TermMap terms_;
};

}  // namespace ktorbit
