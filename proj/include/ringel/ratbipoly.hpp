#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>

#include "ringel/intpoly.hpp"

namespace ringel {

enum class BiVar { first, second };

/// Sparse bivariate polynomial with arbitrary-precision rational
/// coefficients. The two variables are positional; callers fix the reading
/// ((n, x) for the s-polynomials, (n, k) after x -> k*n, (m, x) after
/// n -> m+2+2x). All arithmetic is exact; no zero coefficient is stored.
class RatBiPoly {
 public:
  using Key = std::pair<unsigned, unsigned>;  // (exponent of var1, of var2)

  RatBiPoly() = default;

  static RatBiPoly constant(Rat value);
  static RatBiPoly var1() { return term(1, 1, 0); }
  static RatBiPoly var2() { return term(1, 0, 1); }
  static RatBiPoly term(Rat coeff, unsigned e1, unsigned e2);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, Rat>& terms() const { return terms_; }
  Rat coeff(unsigned e1, unsigned e2) const;
  unsigned degree(BiVar v) const;  // 0 for the zero polynomial

  /// Exact formal partial derivative of the given order.
  RatBiPoly derivative(BiVar v, unsigned order = 1) const;

  /// Substitute var1 by a polynomial in the *output* variable pair; var2
  /// passes through as the output var2. Covers var1 -> constant and
  /// var1 -> m+2+2*var2 style substitutions.
  RatBiPoly substitute_var1(const RatBiPoly& replacement) const;
  /// Same for var2; covers var2 -> k*var1 (new second variable) and
  /// var2 -> constant.
  RatBiPoly substitute_var2(const RatBiPoly& replacement) const;

  /// Exact division by var1; throws std::logic_error if any term lacks it.
  RatBiPoly divide_by_var1() const;

  Rat eval(const Rat& v1, const Rat& v2) const;

  RatBiPoly pow(unsigned e) const;

  RatBiPoly& operator+=(const RatBiPoly& other);
  RatBiPoly& operator-=(const RatBiPoly& other);
  RatBiPoly& operator*=(const RatBiPoly& other) { return *this = *this * other; }
  RatBiPoly& operator*=(const Rat& scalar);
  friend RatBiPoly operator+(RatBiPoly a, const RatBiPoly& b) { return a += b; }
  friend RatBiPoly operator-(RatBiPoly a, const RatBiPoly& b) { return a -= b; }
  friend RatBiPoly operator*(const RatBiPoly& a, const RatBiPoly& b);
  friend RatBiPoly operator*(RatBiPoly a, const Rat& s) { return a *= s; }
  friend RatBiPoly operator*(const Rat& s, RatBiPoly a) { return a *= s; }
  RatBiPoly operator-() const;

  bool operator==(const RatBiPoly& other) const { return terms_ == other.terms_; }

  std::string to_string(const char* name1 = "n", const char* name2 = "x") const;

 private:
  void add_term(const Key& key, const Rat& coeff);
  std::map<Key, Rat> terms_;
};

}  // namespace ringel
