#include "fglab/cyclotomic.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fglab {

CyclotomicElement::CyclotomicElement(std::size_t d) : coeffs_(d) {
  if (d == 0)
    throw std::invalid_argument("cyclotomic modulus must be positive");
}

CyclotomicElement CyclotomicElement::constant(std::size_t d, const Rational &c) {
  CyclotomicElement e(d);
  e.coeffs_[0] = c;
  return e;
}

CyclotomicElement CyclotomicElement::t_power(std::size_t d, long long k) {
  CyclotomicElement e(d);
  auto md = static_cast<long long>(d);
  e.coeffs_[static_cast<std::size_t>(((k % md) + md) % md)] = 1;
  return e;
}

bool CyclotomicElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational &c) { return c == 0; });
}

void CyclotomicElement::require_same(const CyclotomicElement &o) const {
  if (o.modulus() != modulus())
    throw std::invalid_argument("cyclotomic moduli differ");
}

CyclotomicElement &CyclotomicElement::operator+=(const CyclotomicElement &o) {
  require_same(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    coeffs_[i] += o.coeffs_[i];
  return *this;
}

CyclotomicElement &CyclotomicElement::operator-=(const CyclotomicElement &o) {
  require_same(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CyclotomicElement operator*(const CyclotomicElement &a, const CyclotomicElement &b) {
  a.require_same(b);
  const std::size_t d = a.modulus();
  CyclotomicElement out(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (a.coeffs_[i] == 0)
      continue;
    for (std::size_t j = 0; j < d; ++j)
      if (b.coeffs_[j] != 0)
        out.coeffs_[(i + j) % d] += a.coeffs_[i] * b.coeffs_[j];
  }
  return out;
}

CyclotomicElement operator*(const Rational &c, CyclotomicElement a) {
  for (auto &x : a.coeffs_)
    x *= c;
  return a;
}

std::string CyclotomicElement::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational &c = coeffs_[i];
    if (c == 0)
      continue;
    Rational mag = c < 0 ? Rational(-c) : c;
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    if (i == 0 || mag != 1)
      os << mag << (i ? "*" : "");
    if (i == 1)
      os << 't';
    else if (i > 1)
      os << "t^" << i;
  }
  return first ? "0" : os.str();
}

} // namespace fglab
