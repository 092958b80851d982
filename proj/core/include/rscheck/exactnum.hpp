#pragma once

// Exact scalars and the elementary number theory every checker is built on.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace rscheck {

using Integer = mpz_class;
using Rational = mpq_class;

/// Thrown when a modular statement asks for the inverse of a denominator
/// that shares the modulus prime. The caller reports it; nothing skips it.
class DenominatorNotInvertible : public std::domain_error {
 public:
  DenominatorNotInvertible(const Rational& value, const Integer& p);
  const Integer& prime() const { return p_; }

 private:
  Integer p_;
};

struct ResidueClass {
  Integer value;    // in [0, modulus)
  Integer modulus;  // p^e

  friend bool operator==(const ResidueClass&, const ResidueClass&) = default;
};

/// p = x^2 + y^2 with x = 1 (mod 4), y even and positive.
struct TwoSquareDecomposition {
  Integer p;
  Integer x;
  Integer y;
};

/// Canonical num/den; throws std::domain_error on a zero denominator.
Rational make_rational(const Integer& num, const Integer& den);

std::string to_string(const Integer& v);
std::string to_string(const Rational& v);
/// Decimal rendering, elided in the middle beyond 120 characters.
std::string short_string(const Integer& v);
std::string short_string(const Rational& v);

/// Least nonnegative residue of a modulo m (m > 0).
Integer mod_floor(const Integer& a, const Integer& m);

Integer ipow(const Integer& base, unsigned long e);

/// Generalized binomial coefficient, any integer upper argument.
Integer binomial(const Integer& n, unsigned long k);
Integer binomial(long n, unsigned long k);

Integer catalan(unsigned long k);

/// binom(2k,k)/(2k-1): -1 at k = 0, 2*C_{k-1} otherwise.
Integer central_binomial_over_2k_minus_1(unsigned long k);

/// Deterministic trial division.
bool is_prime(const Integer& n);
bool is_prime(unsigned long n);

/// Euler's criterion; p must be an odd prime (std::invalid_argument otherwise).
int legendre_symbol(const Integer& a, const Integer& p);

/// B_m with B_1 = -1/2. Values are memoized behind a mutex.
Rational bernoulli_number(unsigned m);
Rational bernoulli_poly_eval(unsigned m, const Rational& x);

/// Throws std::invalid_argument unless p is a prime = 1 (mod 4).
TwoSquareDecomposition two_square_decompose(const Integer& p);

/// num * den^{-1} mod p^e. Throws DenominatorNotInvertible when p | den.
ResidueClass residue_of_rational(const Rational& r, const Integer& p, unsigned e);

/// True iff the rational r is an integer divisible by m.
bool divisible(const Rational& r, const Integer& m);

}  // namespace rscheck
