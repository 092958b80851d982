#pragma once

// Polynomial algebra in q: q-integers, Gaussian binomials, cyclotomic
// polynomials, exact division, and the q-congruence checkers.
//
// Congruences modulo a monic polynomial M (every Phi_d(q) and [n]_q is monic)
// are decided by exact remainder in Z[q]: M | A in Z[q] iff A mod M == 0.

#include <map>
#include <mutex>
#include <utility>

#include "rscheck/check_result.hpp"
#include "rscheck/polynomial.hpp"

namespace rscheck::q {

/// numerator/denominator in Z[q], gcd 1, content-normalized, denominator with
/// positive leading coefficient.
class QRationalFunction {
 public:
  QRationalFunction() : den_(IntPolynomial::constant(1)) {}
  QRationalFunction(IntPolynomial poly) : num_(std::move(poly)), den_(IntPolynomial::constant(1)) {}
  /// Throws std::domain_error on a zero denominator.
  QRationalFunction(IntPolynomial num, IntPolynomial den);

  const IntPolynomial& numerator() const { return num_; }
  const IntPolynomial& denominator() const { return den_; }

  bool is_polynomial() const { return den_.degree() == 0 && den_.leading() == 1; }
  /// Throws std::logic_error unless is_polynomial().
  const IntPolynomial& as_polynomial() const;

  /// Value at q = 1 (requires a nonzero denominator there).
  Rational at_one() const;

  friend QRationalFunction operator+(const QRationalFunction& a, const QRationalFunction& b);
  friend QRationalFunction operator-(const QRationalFunction& a, const QRationalFunction& b);
  friend QRationalFunction operator*(const QRationalFunction& a, const QRationalFunction& b);
  friend QRationalFunction operator/(const QRationalFunction& a, const QRationalFunction& b);
  friend bool operator==(const QRationalFunction&, const QRationalFunction&) = default;

 private:
  void normalize();

  IntPolynomial num_;
  IntPolynomial den_;
};

/// [n]_q; a polynomial for n >= 0.
QRationalFunction q_integer(long n);
/// 1 + q + ... + q^{n-1} for n >= 0.
IntPolynomial q_integer_poly(unsigned long n);

/// Gaussian binomial; polynomial for n >= 0.
QRationalFunction q_binomial(long n, unsigned long k);
IntPolynomial q_binomial_poly(unsigned long n, unsigned long k);

/// P * [m]_q, O(deg P).
IntPolynomial times_q_integer(const IntPolynomial& p, unsigned long m);
/// P / [m]_q, O(deg P); throws std::domain_error when the division is not exact.
IntPolynomial over_q_integer(const IntPolynomial& p, unsigned long m);

/// Phi_d(q) by exact division of q^d - 1, memoized per table.
class CyclotomicTable {
 public:
  const IntPolynomial& get(unsigned long d);

 private:
  std::mutex mutex_;
  std::map<unsigned long, IntPolynomial> cache_;
};

/// Process-wide table; construction is serialized, results are immutable.
IntPolynomial cyclotomic(unsigned long d);

/// a = b*quotient + remainder over Q.
std::pair<RationalPolynomial, RationalPolynomial> poly_divrem(const IntPolynomial& a, const IntPolynomial& b);
/// Remainder zero and integral quotient.
bool divides_in_Zq(const IntPolynomial& b, const IntPolynomial& a);

/// Arithmetic in Z[q]/(M) for monic M.
class QuotientRing {
 public:
  explicit QuotientRing(IntPolynomial monic_modulus);

  const IntPolynomial& modulus() const { return m_; }
  IntPolynomial reduce(const IntPolynomial& a) const;
  IntPolynomial mul(const IntPolynomial& a, const IntPolynomial& b) const;
  IntPolynomial pow(IntPolynomial a, unsigned long e) const;
  /// q^e for any integer e, using q^n = 1 when M divides q^n - 1 (period n > 0).
  IntPolynomial q_power(long e) const;
  void set_period(unsigned long n) { period_ = n; }

 private:
  IntPolynomial m_;
  unsigned long period_ = 0;
};

CheckResult check_q_lucas(unsigned long a, unsigned long b, unsigned long s, unsigned long t, unsigned long d);
/// Throws std::invalid_argument unless 2k < n - 1.
CheckResult check_lemma32(unsigned long n, unsigned long k);
CheckResult check_theorem31_q(unsigned long n, unsigned long k);
CheckResult check_theorem32_q(unsigned long n, unsigned long a, unsigned long b, unsigned long a_prime);

QRationalFunction s_q(unsigned long n);
CheckResult check_conj57(unsigned long n);
/// One result per n covering every k in [0, n-1].
CheckResult check_conj58_q(unsigned long m, unsigned long n);

/// The q-sum of the q-Lucas-sum theorem at q = 1, beside the integer statement:
/// the classical sums must match and be divisible by n.
CheckResult check_q_degeneration(unsigned long n);

}  // namespace rscheck::q
