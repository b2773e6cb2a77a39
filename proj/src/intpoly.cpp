#include "ringel/intpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace ringel {

namespace {
const Int kZero = 0;
}

IntPoly::IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPoly IntPoly::monomial(Int coeff, std::size_t power) {
  IntPoly p;
  if (coeff != 0) {
    p.coeffs_.resize(power + 1);
    p.coeffs_[power] = std::move(coeff);
  }
  return p;
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<std::size_t> IntPoly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

const Int& IntPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : kZero;
}

const Int& IntPoly::leading() const {
  if (coeffs_.empty()) throw std::logic_error("IntPoly::leading on zero polynomial");
  return coeffs_.back();
}

Int IntPoly::eval(const Int& x) const {
  Int acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rat IntPoly::eval(const Rat& x) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  normalize();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<Int> prod(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPoly(std::move(prod));
}

IntPoly& IntPoly::operator*=(const IntPoly& other) { return *this = *this * other; }

IntPoly& IntPoly::operator*=(const Int& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPoly IntPoly::shifted(std::size_t k) const {
  if (is_zero() || k == 0) return k == 0 ? *this : IntPoly();
  std::vector<Int> shifted(coeffs_.size() + k);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) shifted[i + k] = coeffs_[i];
  return IntPoly(std::move(shifted));
}

std::string IntPoly::to_string(const char* var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Int& c = coeffs_[i];
    if (c == 0) continue;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    Int mag = abs(c);
    if (mag != 1 || i == 0) out << mag.get_str();
    if (i > 0) {
      out << var;
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

// ---- sequence-shape predicates ----------------------------------------

bool is_log_concave(std::span<const Int> seq) {
  for (std::size_t k = 1; k + 1 < seq.size(); ++k)
    if (seq[k - 1] * seq[k + 1] > seq[k] * seq[k]) return false;
  return true;
}

bool is_unimodal(std::span<const Int> seq) {
  std::size_t i = 0;
  while (i + 1 < seq.size() && seq[i] <= seq[i + 1]) ++i;
  while (i + 1 < seq.size() && seq[i] >= seq[i + 1]) ++i;
  return i + 1 >= seq.size();
}

bool has_internal_zeros(std::span<const Int> seq) {
  std::size_t first = seq.size(), last = seq.size();
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] != 0) {
      if (first == seq.size()) first = i;
      last = i;
    }
  }
  if (first == seq.size()) return false;
  for (std::size_t i = first; i <= last; ++i)
    if (seq[i] == 0) return true;
  return false;
}

// ---- GenusDistribution --------------------------------------------------

GenusDistribution::GenusDistribution(std::vector<Int> counts) : counts_(std::move(counts)) {
  while (!counts_.empty() && counts_.back() == 0) counts_.pop_back();
  for (const Int& c : counts_)
    if (c < 0)
      throw std::logic_error("GenusDistribution: negative entry " + c.get_str());
  if (has_internal_zeros(counts_))
    throw std::logic_error("GenusDistribution: internal zero in " + IntPoly(counts_).to_string());
}

GenusDistribution::GenusDistribution(const IntPoly& poly)
    : GenusDistribution(std::vector<Int>(poly.coeffs().begin(), poly.coeffs().end())) {}

const Int& GenusDistribution::count(std::size_t genus) const {
  return genus < counts_.size() ? counts_[genus] : kZero;
}

Int GenusDistribution::total() const {
  Int t = 0;
  for (const Int& c : counts_) t += c;
  return t;
}

}  // namespace ringel
