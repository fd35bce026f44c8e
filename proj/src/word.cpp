#include "fglab/word.hpp"

#include "fglab/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <set>
#include <sstream>

namespace fglab {

std::int64_t to_int64(const BigInt &v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("integer " + v.str() + " exceeds 64 bits");
  return v.convert_to<std::int64_t>();
}

bool is_valid_generator_name(std::string_view name) {
  if (name.empty())
    return false;
  auto head = static_cast<unsigned char>(name.front());
  if (!std::isalpha(head) && head != '_')
    return false;
  return std::all_of(name.begin() + 1, name.end(), [](char c) {
    auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || u == '_';
  });
}

Alphabet::Alphabet()
    : names_(std::make_shared<const std::vector<std::string>>()) {}

Alphabet::Alphabet(std::vector<std::string> names) {
  std::set<std::string> seen;
  for (const auto &n : names) {
    if (!is_valid_generator_name(n))
      throw ParseError("invalid generator name '" + n + "'");
    if (!seen.insert(n).second)
      throw ParseError("duplicate generator name '" + n + "'");
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

Alphabet::Alphabet(std::initializer_list<std::string> names)
    : Alphabet(std::vector<std::string>(names)) {}

std::optional<GenIndex> Alphabet::find(std::string_view name) const {
  const auto &v = *names_;
  auto it = std::find(v.begin(), v.end(), name);
  if (it == v.end())
    return std::nullopt;
  return static_cast<GenIndex>(it - v.begin());
}

bool operator==(const Alphabet &a, const Alphabet &b) {
  return a.names_ == b.names_ || *a.names_ == *b.names_;
}

Alphabet Alphabet::from_csv(std::string_view csv) {
  std::vector<std::string> names;
  std::size_t start = 0;
  while (start <= csv.size()) {
    auto comma = csv.find(',', start);
    if (comma == std::string_view::npos)
      comma = csv.size();
    std::string tok(csv.substr(start, comma - start));
    tok.erase(std::remove_if(tok.begin(), tok.end(),
                             [](unsigned char c) { return std::isspace(c); }),
              tok.end());
    names.push_back(std::move(tok));
    start = comma + 1;
  }
  return Alphabet(std::move(names));
}

namespace {

void push_reduced(std::vector<Letter> &out, Letter l) {
  if (!out.empty() && out.back() == l.inverse())
    out.pop_back();
  else
    out.push_back(l);
}

void require_same(const Alphabet &a, const Alphabet &b) {
  if (!(a == b))
    throw AlphabetMismatch("words are over different alphabets");
}

} // namespace

Word::Word(Alphabet alphabet, std::span<const Letter> letters)
    : alphabet_(std::move(alphabet)) {
  letters_.reserve(letters.size());
  for (const auto &l : letters) {
    if (l.gen >= alphabet_.size() || (l.sign != 1 && l.sign != -1))
      throw std::out_of_range("letter outside alphabet");
    push_reduced(letters_, l);
  }
}

Word Word::generator(const Alphabet &alphabet, GenIndex g, int sign) {
  Letter l{g, static_cast<std::int8_t>(sign < 0 ? -1 : 1)};
  return Word(alphabet, std::span<const Letter>(&l, 1));
}

Word parse_word(std::string_view text, const Alphabet &alphabet) {
  std::vector<Letter> letters;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    std::string_view name = tok;
    long long k = 1;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      name = std::string_view(tok).substr(0, caret);
      std::string_view exp = std::string_view(tok).substr(caret + 1);
      if (!exp.empty() && exp.front() == '+')
        exp.remove_prefix(1);
      auto [ptr, ec] = std::from_chars(exp.data(), exp.data() + exp.size(), k);
      if (exp.empty() || ec != std::errc() || ptr != exp.data() + exp.size())
        throw ParseError("malformed exponent in '" + tok + "'");
      if (k == 0)
        throw ParseError("zero exponent in '" + tok + "'");
      if (k > 1'000'000'000LL || k < -1'000'000'000LL)
        throw ParseError("exponent too large in '" + tok + "'");
    }
    auto g = alphabet.find(name);
    if (!g)
      throw ParseError("unknown generator '" + std::string(name) + "'");
    Letter l{*g, static_cast<std::int8_t>(k > 0 ? 1 : -1)};
    for (long long i = 0; i < (k > 0 ? k : -k); ++i)
      letters.push_back(l);
  }
  return Word(alphabet, letters);
}

std::string to_string(const Word &w) {
  std::string out;
  auto ls = w.letters();
  for (std::size_t i = 0; i < ls.size();) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i])
      ++j;
    long long k = static_cast<long long>(j - i) * ls[i].sign;
    if (!out.empty())
      out += ' ';
    out += w.alphabet().name(ls[i].gen);
    if (k != 1)
      out += '^' + std::to_string(k);
    i = j;
  }
  return out;
}

Word multiply(const Word &u, const Word &v) {
  require_same(u.alphabet(), v.alphabet());
  auto a = u.letters();
  auto b = v.letters();
  // Cancel the overlap at the seam; both sides are already reduced.
  std::size_t c = 0;
  while (c < a.size() && c < b.size() && a[a.size() - 1 - c] == b[c].inverse())
    ++c;
  std::vector<Letter> out(a.begin(), a.end() - static_cast<std::ptrdiff_t>(c));
  out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(c), b.end());
  return Word(u.alphabet(), out);
}

Word inverse(const Word &w) {
  std::vector<Letter> out;
  out.reserve(w.length());
  auto ls = w.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it)
    out.push_back(it->inverse());
  return Word(w.alphabet(), out);
}

Word power(const Word &w, long long k) {
  Word base = k < 0 ? inverse(w) : w;
  Word out(w.alphabet());
  for (long long i = 0; i < (k < 0 ? -k : k); ++i)
    out = multiply(out, base);
  return out;
}

Word commutator(const Word &u, const Word &v) {
  require_same(u.alphabet(), v.alphabet());
  return multiply(multiply(u, v), multiply(inverse(u), inverse(v)));
}

const Alphabet &xy_alphabet() {
  static const Alphabet xy{"x", "y"};
  return xy;
}

Word omega(unsigned n) {
  const auto &ab = xy_alphabet();
  Word x = Word::generator(ab, 0);
  Word w = commutator(x, Word::generator(ab, 1));
  for (unsigned i = 0; i < n; ++i)
    w = commutator(w, x);
  return w;
}

ExponentVector exponent_sums(const Word &w) {
  std::vector<long long> acc(w.alphabet().size(), 0);
  for (const auto &l : w.letters())
    acc[l.gen] += l.sign;
  return ExponentVector(acc.begin(), acc.end());
}

} // namespace fglab
