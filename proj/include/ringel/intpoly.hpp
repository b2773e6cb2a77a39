#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ringel {

using Int = mpz_class;
using Rat = mpq_class;

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
/// coeffs()[i] is the coefficient of x^i. Normal form: the highest stored
/// coefficient is nonzero; the zero polynomial stores an empty sequence, so
/// its degree is "none" rather than -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly monomial(Int coeff, std::size_t power);
  static IntPoly constant(Int value) { return monomial(std::move(value), 0); }

  bool is_zero() const { return coeffs_.empty(); }
  std::optional<std::size_t> degree() const;
  std::span<const Int> coeffs() const { return coeffs_; }
  /// Coefficient of x^i; zero beyond the stored range.
  const Int& coeff(std::size_t i) const;
  const Int& leading() const;  // requires a nonzero polynomial

  Int eval(const Int& x) const;
  Rat eval(const Rat& x) const;

  IntPoly& operator+=(const IntPoly& other);
  IntPoly& operator-=(const IntPoly& other);
  IntPoly& operator*=(const IntPoly& other);
  IntPoly& operator*=(const Int& scalar);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const Int& s) { return a *= s; }
  friend IntPoly operator*(const Int& s, IntPoly a) { return a *= s; }
  IntPoly operator-() const;

  /// Multiply by x^k.
  IntPoly shifted(std::size_t k) const;

  bool operator==(const IntPoly& other) const { return coeffs_ == other.coeffs_; }

  std::string to_string(const char* var = "x") const;

 private:
  void normalize();
  std::vector<Int> coeffs_;
};

// ---- sequence-shape predicates ----------------------------------------
// These operate on plain coefficient sequences; GenusDistribution overloads
// are provided below. Out-of-range terms count as zero, so only interior
// indices constrain log-concavity.

bool is_log_concave(std::span<const Int> seq);
bool is_unimodal(std::span<const Int> seq);
bool has_internal_zeros(std::span<const Int> seq);

/// Genus distribution of a graph: g_i = number of cellular orientable
/// embeddings into the genus-i surface. Validated on construction: entries
/// nonnegative, no zero between the first and last positive entries.
class GenusDistribution {
 public:
  explicit GenusDistribution(std::vector<Int> counts);
  explicit GenusDistribution(const IntPoly& poly);

  std::span<const Int> coeffs() const { return counts_; }
  const Int& count(std::size_t genus) const;
  std::size_t size() const { return counts_.size(); }
  Int total() const;  // number of embeddings = value at x = 1
  IntPoly to_poly() const { return IntPoly(counts_); }

  bool operator==(const GenusDistribution& other) const = default;
  std::string to_string() const { return to_poly().to_string(); }

 private:
  std::vector<Int> counts_;
};

inline bool is_log_concave(const GenusDistribution& d) { return is_log_concave(d.coeffs()); }
inline bool is_unimodal(const GenusDistribution& d) { return is_unimodal(d.coeffs()); }

}  // namespace ringel
