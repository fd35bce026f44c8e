#pragma once

#include "fglab/bigint.hpp"
#include "fglab/word.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace fglab {

/// Sequence of variable indices X_{i1} X_{i2} ... ; the empty monomial is 1.
using Monomial = std::vector<std::uint16_t>;

/// Integer series in noncommuting variables, truncated above degree `cap`.
/// Zero coefficients are never stored.
class NoncommSeries {
public:
  explicit NoncommSeries(unsigned cap) : cap_(cap) {}

  static NoncommSeries one(unsigned cap);

  unsigned cap() const { return cap_; }
  const std::map<Monomial, BigInt> &terms() const { return terms_; }
  BigInt coefficient(const Monomial &m) const;

  /// Adds c to the coefficient of m; terms above the cap are dropped.
  void add(const Monomial &m, const BigInt &c);

  /// Lowest degree >= 1 carrying a nonzero term, or 0 if there is none.
  unsigned lowest_nonconstant_degree() const;

  friend bool operator==(const NoncommSeries &, const NoncommSeries &) = default;

private:
  unsigned cap_;
  std::map<Monomial, BigInt> terms_;
};

/// Noncommutative product, truncated. Throws std::invalid_argument on a cap
/// mismatch.
NoncommSeries series_mul(const NoncommSeries &s, const NoncommSeries &t);

/// Magnus image: g -> 1 + X_g, g^-1 -> 1 - X_g + X_g^2 - ... up to the cap.
/// Throws std::invalid_argument for cap 0.
NoncommSeries magnus_expand(const Word &w, unsigned cap);

/// Result of a lower-central-series weight query.
struct LcsWeight {
  enum class Kind { exact, at_least, identity };
  Kind kind = Kind::identity;
  unsigned value = 0; // the weight, or cap + 1 for at_least

  static LcsWeight exactly(unsigned v) { return {Kind::exact, v}; }
  static LcsWeight at_least(unsigned v) { return {Kind::at_least, v}; }
  static LcsWeight identity() { return {Kind::identity, 0}; }

  /// True when the element is known to lie in F_m.
  bool reaches(unsigned m) const {
    return kind == Kind::identity || value >= m;
  }
  /// "identity", ">=k" or the exact weight.
  std::string to_string() const;

  friend bool operator==(const LcsWeight &, const LcsWeight &) = default;
};

/// w lies in F_k exactly for k <= weight; AT_LEAST(cap+1) when the expansion
/// is trivial through the cap but w is not the identity.
LcsWeight lcs_weight(const Word &w, unsigned cap);

/// Membership in the m-th lower central term. Throws std::invalid_argument
/// when cap < m or m == 0.
bool in_lcs(const Word &w, unsigned m, unsigned cap);

std::string to_string(const NoncommSeries &s, const Alphabet &alphabet);

} // namespace fglab
