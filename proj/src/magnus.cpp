#include "fglab/magnus.hpp"

#include <sstream>
#include <stdexcept>

namespace fglab {

NoncommSeries NoncommSeries::one(unsigned cap) {
  NoncommSeries s(cap);
  s.add({}, 1);
  return s;
}

BigInt NoncommSeries::coefficient(const Monomial &m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void NoncommSeries::add(const Monomial &m, const BigInt &c) {
  if (m.size() > cap_ || c == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

unsigned NoncommSeries::lowest_nonconstant_degree() const {
  unsigned best = 0;
  for (const auto &[m, c] : terms_)
    if (!m.empty() && (best == 0 || m.size() < best))
      best = static_cast<unsigned>(m.size());
  return best;
}

NoncommSeries series_mul(const NoncommSeries &s, const NoncommSeries &t) {
  if (s.cap() != t.cap())
    throw std::invalid_argument("series caps differ");
  NoncommSeries out(s.cap());
  Monomial m;
  for (const auto &[ms, cs] : s.terms())
    for (const auto &[mt, ct] : t.terms()) {
      if (ms.size() + mt.size() > s.cap())
        continue;
      m = ms;
      m.insert(m.end(), mt.begin(), mt.end());
      out.add(m, cs * ct);
    }
  return out;
}

namespace {

NoncommSeries letter_series(Letter l, unsigned cap) {
  NoncommSeries s(cap);
  s.add({}, 1);
  if (l.sign > 0) {
    s.add({static_cast<std::uint16_t>(l.gen)}, 1);
    return s;
  }
  Monomial m;
  for (unsigned k = 1; k <= cap; ++k) {
    m.push_back(static_cast<std::uint16_t>(l.gen));
    s.add(m, k % 2 ? -1 : 1);
  }
  return s;
}

} // namespace

NoncommSeries magnus_expand(const Word &w, unsigned cap) {
  if (cap == 0)
    throw std::invalid_argument("magnus cap must be at least 1");
  if (w.alphabet().size() > 0xFFFF)
    throw std::invalid_argument("alphabet too large for magnus expansion");
  // Letter series, indexed by [sign][generator]; built on first use.
  std::vector<NoncommSeries> cache[2];
  for (auto &c : cache)
    c.resize(w.alphabet().size(), NoncommSeries(cap));
  NoncommSeries acc = NoncommSeries::one(cap);
  for (const auto &l : w.letters()) {
    auto &slot = cache[l.sign > 0 ? 0 : 1][l.gen];
    if (slot.terms().empty())
      slot = letter_series(l, cap);
    acc = series_mul(acc, slot);
  }
  return acc;
}

std::string LcsWeight::to_string() const {
  switch (kind) {
  case Kind::identity:
    return "identity";
  case Kind::at_least:
    return ">=" + std::to_string(value);
  case Kind::exact:
    break;
  }
  return std::to_string(value);
}

LcsWeight lcs_weight(const Word &w, unsigned cap) {
  if (w.is_identity())
    return LcsWeight::identity();
  auto deg = magnus_expand(w, cap).lowest_nonconstant_degree();
  return deg == 0 ? LcsWeight::at_least(cap + 1) : LcsWeight::exactly(deg);
}

bool in_lcs(const Word &w, unsigned m, unsigned cap) {
  if (m == 0)
    throw std::invalid_argument("lower central terms start at 1");
  if (cap < m)
    throw std::invalid_argument("magnus cap " + std::to_string(cap) +
                                " cannot certify F_" + std::to_string(m));
  return lcs_weight(w, cap).reaches(m);
}

std::string to_string(const NoncommSeries &s, const Alphabet &alphabet) {
  std::ostringstream os;
  bool first = true;
  for (const auto &[m, c] : s.terms()) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (m.empty()) {
      os << mag;
      continue;
    }
    if (mag != 1)
      os << mag << '*';
    for (std::size_t i = 0; i < m.size(); ++i)
      os << (i ? "*" : "") << 'X' << '_' << alphabet.name(m[i]);
  }
  if (first)
    os << '0';
  return os.str();
}

} // namespace fglab
