#pragma once

#include "fglab/bigint.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fglab {

using GenIndex = std::uint32_t;

/// Ordered list of distinct generator names. Copies share storage; two
/// alphabets are equal when their name lists are equal.
class Alphabet {
public:
  Alphabet();
  explicit Alphabet(std::vector<std::string> names);
  Alphabet(std::initializer_list<std::string> names);

  std::size_t size() const { return names_->size(); }
  const std::string &name(GenIndex g) const { return (*names_)[g]; }
  const std::vector<std::string> &names() const { return *names_; }
  std::optional<GenIndex> find(std::string_view name) const;

  friend bool operator==(const Alphabet &a, const Alphabet &b);

  /// Parses a comma-separated list such as "x,y".
  static Alphabet from_csv(std::string_view csv);

private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

bool is_valid_generator_name(std::string_view name);

struct Letter {
  GenIndex gen = 0;
  std::int8_t sign = 1; // +1 or -1

  Letter inverse() const { return {gen, static_cast<std::int8_t>(-sign)}; }
  friend bool operator==(const Letter &, const Letter &) = default;
};

/// Freely reduced word. Every constructor reduces, so a Word value is
/// always reduced; the empty word is the identity.
class Word {
public:
  explicit Word(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}
  Word(Alphabet alphabet, std::span<const Letter> letters);

  static Word generator(const Alphabet &alphabet, GenIndex g, int sign = 1);

  const Alphabet &alphabet() const { return alphabet_; }
  std::span<const Letter> letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }
  const Letter &operator[](std::size_t i) const { return letters_[i]; }

  friend bool operator==(const Word &a, const Word &b) {
    return a.alphabet_ == b.alphabet_ && a.letters_ == b.letters_;
  }

private:
  Alphabet alphabet_;
  std::vector<Letter> letters_;
};

using ExponentVector = std::vector<BigInt>;

Word parse_word(std::string_view text, const Alphabet &alphabet);

/// Canonical text: maximal runs collapsed to `g^k`; the identity is "".
std::string to_string(const Word &w);

Word multiply(const Word &u, const Word &v);
Word inverse(const Word &w);
Word power(const Word &w, long long k);
Word commutator(const Word &u, const Word &v);

inline Word operator*(const Word &u, const Word &v) { return multiply(u, v); }

/// The alphabet {x, y} used by the witness family.
const Alphabet &xy_alphabet();

/// Left-normed commutator [x, y, x, ..., x] with n trailing x's.
Word omega(unsigned n);

ExponentVector exponent_sums(const Word &w);

} // namespace fglab
