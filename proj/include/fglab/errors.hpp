#pragma once

#include <stdexcept>
#include <string>

namespace fglab {

/// Malformed word text, unknown generator, bad JSON description.
class ParseError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Two operands live over different alphabets.
class AlphabetMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A well-formed request outside the operation's domain, e.g. rewriting a
/// word that is not in the subgroup or asking normality of an infinite-index
/// subgroup.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// A cross-check between two independent computations disagreed.
class VerificationFailure : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace fglab
