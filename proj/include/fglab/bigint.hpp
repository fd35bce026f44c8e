#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace fglab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt &v) { return v.str(); }

/// Narrowing conversion; throws std::overflow_error when out of range.
std::int64_t to_int64(const BigInt &v);

} // namespace fglab
