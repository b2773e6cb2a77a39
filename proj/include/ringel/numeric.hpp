#pragma once

#include <gmpxx.h>

#include "ringel/intpoly.hpp"

namespace ringel {

/// Binomial coefficient with the combinatorial convention: C(a,b) = 0 unless
/// 0 <= b <= a. The sums in the closed forms run over all j >= 0 and rely on
/// out-of-range binomials vanishing.
Int binomial(long a, long b);

Int factorial(unsigned long n);

/// 2^e as an exact rational, e may be negative.
Rat pow2(long e);

/// Exact rational power with nonnegative exponent.
Rat rat_pow(const Rat& base, unsigned long e);

inline Rat make_rat(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace ringel
