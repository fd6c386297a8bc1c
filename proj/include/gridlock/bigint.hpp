#pragma once

// Exact arbitrary-precision integers and rationals. Coloring counts and
// recurrence coefficients are exact combinatorial quantities, so no floating
// point is used anywhere in the library.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace gridlock {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const BigInt& value) { return value.str(); }

} // namespace gridlock
