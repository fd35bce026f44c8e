#pragma once

#include "fglab/bigint.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace fglab {

/// Element of the group ring Q[t]/(t^d - 1), with t standing for a primitive
/// d-th root of unity. Stored as the d coefficients of t^0 .. t^(d-1).
class CyclotomicElement {
public:
  explicit CyclotomicElement(std::size_t d);

  static CyclotomicElement constant(std::size_t d, const Rational &c);
  /// t^k, with k reduced mod d (negative k allowed).
  static CyclotomicElement t_power(std::size_t d, long long k);

  std::size_t modulus() const { return coeffs_.size(); }
  const Rational &operator[](std::size_t i) const { return coeffs_[i]; }
  bool is_zero() const;

  CyclotomicElement &operator+=(const CyclotomicElement &o);
  CyclotomicElement &operator-=(const CyclotomicElement &o);
  friend CyclotomicElement operator+(CyclotomicElement a, const CyclotomicElement &b) {
    return a += b;
  }
  friend CyclotomicElement operator-(CyclotomicElement a, const CyclotomicElement &b) {
    return a -= b;
  }
  /// Cyclic convolution.
  friend CyclotomicElement operator*(const CyclotomicElement &a, const CyclotomicElement &b);
  friend CyclotomicElement operator*(const Rational &c, CyclotomicElement a);

  friend bool operator==(const CyclotomicElement &, const CyclotomicElement &) = default;

  std::string to_string() const;

private:
  void require_same(const CyclotomicElement &o) const;
  std::vector<Rational> coeffs_;
};

} // namespace fglab
