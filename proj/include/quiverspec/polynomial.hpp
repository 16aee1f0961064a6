#pragma once

#include "quiverspec/numeric.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace quiverspec {

/// Univariate polynomial with arbitrary-precision integer coefficients.
/// Coefficients are stored in ascending degree order with no trailing zeros;
/// the zero polynomial has an empty coefficient vector and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;

  explicit IntPolynomial(std::vector<Int> ascending) : c_(std::move(ascending)) { trim(); }

  static IntPolynomial constant(Int v) { return IntPolynomial(std::vector<Int>{std::move(v)}); }

  static IntPolynomial monomial(int degree, Int coeff) {
    if (degree < 0) throw ValidationError("monomial degree must be nonnegative");
    std::vector<Int> c(static_cast<std::size_t>(degree) + 1);
    c.back() = std::move(coeff);
    return IntPolynomial(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  /// Coefficient of x^k (zero outside the stored range).
  const Int& coeff(int k) const {
    static const Int kZero = 0;
    if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<std::size_t>(k)];
  }

  const Int& leading() const {
    if (c_.empty()) throw ValidationError("zero polynomial has no leading coefficient");
    return c_.back();
  }

  const std::vector<Int>& coeffs() const { return c_; }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Int> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return IntPolynomial(std::move(c));
  }

  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Int> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
    return IntPolynomial(std::move(c));
  }

  IntPolynomial operator-() const {
    std::vector<Int> c(c_);
    for (auto& v : c) v = -v;
    return IntPolynomial(std::move(c));
  }

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPolynomial(std::move(c));
  }

  friend IntPolynomial operator*(const Int& s, const IntPolynomial& p) {
    std::vector<Int> c(p.c_);
    for (auto& v : c) v *= s;
    return IntPolynomial(std::move(c));
  }

  IntPolynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Int> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = Int(i) * c_[i];
    return IntPolynomial(std::move(c));
  }

  Int eval(const Int& x) const {
    Int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// Exact sign of p(x) at a rational point, via the homogenized integer
  /// value den^deg * p(num/den); no rounding is involved.
  int sign_at(const Rat& x) const {
    if (is_zero()) return 0;
    const Int num = numerator(x);
    const Int den = denominator(x);  // > 0 after normalization
    Int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * num + *it * pow_den(den, it);
    return acc.sign();
  }

  /// Gcd of the absolute coefficient values (0 for the zero polynomial).
  Int content() const {
    Int g = 0;
    for (const auto& v : c_) g = boost::multiprecision::gcd(g, v);
    return boost::multiprecision::abs(g);
  }

  /// Divides out the content; sign pattern of the coefficients is preserved.
  IntPolynomial primitive() const {
    Int g = content();
    if (g <= 1) return *this;
    std::vector<Int> c(c_);
    for (auto& v : c) v /= g;
    return IntPolynomial(std::move(c));
  }

  std::string to_string(std::string_view var = "x") const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      const Int& c = coeff(k);
      if (c == 0) continue;
      if (out.empty()) {
        if (c < 0) out += "-";
      } else {
        out += (c < 0) ? " - " : " + ";
      }
      Int mag = boost::multiprecision::abs(c);
      if (mag != 1 || k == 0) out += mag.str();
      if (k >= 1) {
        out += var;
        if (k >= 2) out += "^" + std::to_string(k);
      }
    }
    return out;
  }

 private:
  // den^(position from the top of the Horner recursion); helper keeps the
  // homogenized evaluation allocation-free for the common den == 1 case
  Int pow_den(const Int& den, std::vector<Int>::const_reverse_iterator it) const {
    if (den == 1) return 1;
    auto steps = static_cast<unsigned>(it - c_.rbegin());
    return boost::multiprecision::pow(den, steps);
  }

  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Int> c_;
};

/// Total order used for grouping and deterministic listing: by degree, then
/// by coefficients from the highest degree down.
inline int compare(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (int k = a.degree(); k >= 0; --k) {
    if (a.coeff(k) != b.coeff(k)) return a.coeff(k) < b.coeff(k) ? -1 : 1;
  }
  return 0;
}

inline bool poly_less(const IntPolynomial& a, const IntPolynomial& b) { return compare(a, b) < 0; }

}  // namespace quiverspec
