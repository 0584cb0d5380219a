#include "munarini/integer.hpp"

namespace munarini {

Integer binomial(long long a, long long b) {
  if (a < 0 || b < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  Integer result = 1;
  for (long long i = 1; i <= b; ++i) {
    result *= a - b + i;
    result /= i;
  }
  return result;
}

Integer ipow(const Integer& base, unsigned exponent) {
  Integer result = 1;
  Integer square = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= square;
    exponent >>= 1U;
    if (exponent != 0) square *= square;
  }
  return result;
}

}  // namespace munarini
