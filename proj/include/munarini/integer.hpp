#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace munarini {

// Every count and polynomial coefficient in the library is exact.
using Integer = boost::multiprecision::cpp_int;

inline std::string to_string(const Integer& value) { return value.str(); }

// C(a, b), zero outside 0 <= b <= a.
Integer binomial(long long a, long long b);

// Non-negative integer power; ipow(x, 0) == 1 including x == 0.
Integer ipow(const Integer& base, unsigned exponent);

}  // namespace munarini
