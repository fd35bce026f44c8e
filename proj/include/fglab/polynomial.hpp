#pragma once

#include "fglab/bigint.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fglab {

/// Dense univariate polynomial with rational coefficients; coefficient i
/// multiplies var^i. Trailing zeros are trimmed, so the zero polynomial has
/// no coefficients.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(long long c); // NOLINT(google-explicit-constructor)

  static Polynomial variable();
  /// (a + b*var)^n by the binomial theorem.
  static Polynomial binomial_power(const Rational &a, const Rational &b, unsigned n);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational> &coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t i) const;
  Rational evaluate(const Rational &at) const;

  Polynomial &operator+=(const Polynomial &o);
  Polynomial &operator-=(const Polynomial &o);
  friend Polynomial operator+(Polynomial a, const Polynomial &b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial &b) { return a -= b; }
  friend Polynomial operator*(const Polynomial &a, const Polynomial &b);

  /// Quotient and remainder; throws std::domain_error for a zero divisor.
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial &a, const Polynomial &b);

  friend bool operator==(const Polynomial &, const Polynomial &) = default;

  std::string to_string(std::string_view var = "t") const;

private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// det(M) for a square matrix of polynomials, by fraction-free (Bareiss)
/// elimination with row pivoting. Every division is exact.
Polynomial determinant(std::vector<std::vector<Polynomial>> m);

} // namespace fglab
