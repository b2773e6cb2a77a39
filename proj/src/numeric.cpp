#include "ringel/numeric.hpp"

#include <stdexcept>

namespace ringel {

Int binomial(long a, long b) {
  if (b < 0 || b > a) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return r;
}

Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Rat pow2(long e) {
  Int p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  if (e >= 0) return Rat(p);
  Rat r(1, p);
  r.canonicalize();
  return r;
}

Rat rat_pow(const Rat& base, unsigned long e) {
  Rat acc = 1;
  Rat b = base;
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

}  // namespace ringel
