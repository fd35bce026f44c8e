#include "fglab/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace fglab {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(long long c) {
  if (c != 0)
    coeffs_.emplace_back(c);
}

Polynomial Polynomial::variable() { return Polynomial({Rational(0), Rational(1)}); }

namespace {

Rational rational_pow(const Rational &base, unsigned e) {
  Rational r = 1;
  for (unsigned i = 0; i < e; ++i)
    r *= base;
  return r;
}

} // namespace

Polynomial Polynomial::binomial_power(const Rational &a, const Rational &b, unsigned n) {
  std::vector<Rational> c(n + 1);
  BigInt choose = 1;
  for (unsigned k = 0; k <= n; ++k) {
    c[k] = Rational(choose) * rational_pow(a, n - k) * rational_pow(b, k);
    choose = choose * (n - k) / (k + 1);
  }
  return Polynomial(std::move(c));
}

Rational Polynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational Polynomial::evaluate(const Rational &at) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * at + *it;
  return acc;
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0)
    coeffs_.pop_back();
}

Polynomial &Polynomial::operator+=(const Polynomial &o) {
  if (coeffs_.size() < o.coeffs_.size())
    coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
    coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &o) {
  if (coeffs_.size() < o.coeffs_.size())
    coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
    coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial &a, const Polynomial &b) {
  if (a.is_zero() || b.is_zero())
    return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(c));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial &a, const Polynomial &b) {
  if (b.is_zero())
    throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree())
    return {Polynomial(), a};
  std::vector<Rational> rem = a.coeffs_;
  std::vector<Rational> quot(a.coeffs_.size() - b.coeffs_.size() + 1);
  const Rational &lead = b.coeffs_.back();
  for (std::size_t i = quot.size(); i-- > 0;) {
    Rational q = rem[i + b.coeffs_.size() - 1] / lead;
    quot[i] = q;
    if (q == 0)
      continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      rem[i + j] -= q * b.coeffs_[j];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

std::string Polynomial::to_string(std::string_view var) const {
  if (is_zero())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational &c = coeffs_[i];
    if (c == 0)
      continue;
    Rational mag = c < 0 ? Rational(-c) : c;
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    if (i == 0 || mag != 1)
      os << mag;
    if (i > 0) {
      os << (mag != 1 ? "*" : "") << var;
      if (i > 1)
        os << '^' << i;
    }
  }
  return os.str();
}

Polynomial determinant(std::vector<std::vector<Polynomial>> m) {
  const std::size_t n = m.size();
  for (const auto &row : m)
    if (row.size() != n)
      throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0)
    return Polynomial(1);

  Polynomial prev_pivot(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero())
        ++r;
      if (r == n)
        return {};
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        auto [q, r] = divmod(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev_pivot);
        if (!r.is_zero())
          throw std::logic_error("inexact Bareiss division");
        m[i][j] = std::move(q);
      }
      m[i][k] = Polynomial();
    }
    prev_pivot = m[k][k];
  }
  return negate ? Polynomial() - m[n - 1][n - 1] : m[n - 1][n - 1];
}

} // namespace fglab
