#pragma once

// Dense univariate polynomials, low-to-high coefficients, trailing zeros pruned.
// The variable is contextual: x for the sequence polynomials, q for q-analogues.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rscheck/exactnum.hpp"

namespace rscheck {

template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }
  explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial constant(T v) { return Polynomial(std::vector<T>{std::move(v)}); }

  static Polynomial monomial(T v, std::size_t deg) {
    std::vector<T> c(deg + 1);
    c[deg] = std::move(v);
    return Polynomial(std::move(c));
  }

  const std::vector<T>& coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  std::size_t size() const { return c_.size(); }

  T coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
  const T& leading() const { return c_.back(); }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }

  Polynomial& operator*=(const T& s) {
    for (auto& v : c_) v *= s;
    trim();
    return *this;
  }

  Polynomial& operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& v : a.c_) v = -v;
    return a;
  }
  friend Polynomial operator*(Polynomial a, const T& s) { return a *= s; }
  friend Polynomial operator*(const T& s, Polynomial a) { return a *= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(out));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Multiplies by var^k.
  Polynomial shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<T> out(c_.size() + k);
    std::copy(c_.begin(), c_.end(), out.begin() + static_cast<std::ptrdiff_t>(k));
    return Polynomial(std::move(out));
  }

  template <class U>
  U evaluate(const U& x) const {
    U acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc *= x;
      acc += U(*it);
    }
    return acc;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> out(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * T(static_cast<unsigned long>(i));
    return Polynomial(std::move(out));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<T> c_;
};

using IntPolynomial = Polynomial<Integer>;
using RationalPolynomial = Polynomial<Rational>;

RationalPolynomial to_rational(const IntPolynomial& p);
/// Exact value at a rational point via homogeneous Horner in Z.
Rational evaluate(const IntPolynomial& p, const Rational& x);
/// nullopt when some coefficient is not an integer.
std::optional<IntPolynomial> to_integer(const RationalPolynomial& p);

/// gcd of the coefficients, nonnegative; 0 for the zero polynomial.
Integer content(const IntPolynomial& p);
/// True iff every coefficient is divisible by m.
bool all_coefficients_divisible(const IntPolynomial& p, const Integer& m);

/// Exact division over Q: a = b*quotient + remainder, deg remainder < deg b.
/// Throws std::domain_error when b is zero.
std::pair<RationalPolynomial, RationalPolynomial> divrem(const RationalPolynomial& a, const RationalPolynomial& b);

/// Remainder of a modulo a monic integer polynomial; stays in Z[var].
IntPolynomial remainder_monic(IntPolynomial a, const IntPolynomial& monic);
/// Quotient and remainder by a monic integer polynomial.
std::pair<IntPolynomial, IntPolynomial> divrem_monic(const IntPolynomial& a, const IntPolynomial& monic);

/// Primitive gcd in Z[var], positive leading coefficient.
IntPolynomial gcd(IntPolynomial a, IntPolynomial b);

/// Coefficient list rendering, e.g. "28x^5 + 90x^4 - 1".
std::string to_string(const IntPolynomial& p, char var = 'x');
std::string to_string(const RationalPolynomial& p, char var = 'x');
/// Decimal strings low-to-high.
std::vector<std::string> coefficient_strings(const IntPolynomial& p);

}  // namespace rscheck
