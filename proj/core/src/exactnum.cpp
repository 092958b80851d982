#include "rscheck/exactnum.hpp"

#include <mutex>
#include <vector>

namespace rscheck {

DenominatorNotInvertible::DenominatorNotInvertible(const Rational& value, const Integer& p)
    : std::domain_error("denominator of " + to_string(value) + " is divisible by " + to_string(p)),
      p_(p) {}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Integer& v) { return v.get_str(); }

std::string to_string(const Rational& v) { return v.get_str(); }

namespace {

std::string elide(std::string s) {
  constexpr std::size_t limit = 120;
  if (s.size() <= limit) return s;
  const std::size_t n = s.size();
  return s.substr(0, 40) + "..." + s.substr(n - 40) + " [" + std::to_string(n) + " chars]";
}

}  // namespace

std::string short_string(const Integer& v) { return elide(v.get_str()); }

std::string short_string(const Rational& v) { return elide(v.get_str()); }

Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer ipow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Integer binomial(const Integer& n, unsigned long k) {
  Integer r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

Integer binomial(long n, unsigned long k) { return binomial(Integer(n), k); }

Integer catalan(unsigned long k) {
  Integer c = binomial(Integer(2 * k), k);
  mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), k + 1);
  return c;
}

Integer central_binomial_over_2k_minus_1(unsigned long k) {
  if (k == 0) return Integer(-1);
  return 2 * catalan(k - 1);
}

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (unsigned long d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  if (n.fits_ulong_p()) return is_prime(n.get_ui());
  if (mpz_even_p(n.get_mpz_t())) return false;
  for (Integer d = 3; d * d <= n; d += 2)
    if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) return false;
  return true;
}

int legendre_symbol(const Integer& a, const Integer& p) {
  if (p <= 2 || !is_prime(p)) throw std::invalid_argument("legendre_symbol: " + to_string(p) + " is not an odd prime");
  Integer r = mod_floor(a, p);
  if (r == 0) return 0;
  Integer e = (p - 1) / 2;
  Integer t;
  mpz_powm(t.get_mpz_t(), r.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
  return t == 1 ? 1 : -1;
}

namespace {

std::mutex bernoulli_mutex;
std::vector<Rational> bernoulli_cache{Rational(1)};

}  // namespace

Rational bernoulli_number(unsigned m) {
  std::lock_guard lock(bernoulli_mutex);
  // sum_{j=0}^{n} binom(n+1, j) B_j = 0
  while (bernoulli_cache.size() <= m) {
    const unsigned long n = bernoulli_cache.size();
    Rational acc = 0;
    Integer c = 1;  // binom(n+1, j)
    for (unsigned long j = 0; j < n; ++j) {
      if (mpz_sgn(bernoulli_cache[j].get_num_mpz_t()) != 0) acc += c * bernoulli_cache[j];
      c = c * (n + 1 - j) / (j + 1);
    }
    // c is now binom(n+1, n) = n+1
    Rational b = -acc / Rational(c);
    b.canonicalize();
    bernoulli_cache.push_back(std::move(b));
  }
  return bernoulli_cache[m];
}

Rational bernoulli_poly_eval(unsigned m, const Rational& x) {
  Rational acc = 0;
  Rational xp = 1;  // x^{m-k}, running from k = m downwards
  for (unsigned k = m + 1; k-- > 0;) {
    acc += Rational(binomial(Integer(m), k)) * bernoulli_number(k) * xp;
    xp *= x;
  }
  acc.canonicalize();
  return acc;
}

TwoSquareDecomposition two_square_decompose(const Integer& p) {
  if (!is_prime(p)) throw std::invalid_argument("two_square_decompose: " + to_string(p) + " is not prime");
  if (mod_floor(p, 4) != 1) throw std::invalid_argument("two_square_decompose: " + to_string(p) + " is not 1 mod 4");
  for (Integer t = 1; t * t < p; ++t) {
    Integer rest = p - t * t;
    if (!mpz_perfect_square_p(rest.get_mpz_t())) continue;
    Integer s = sqrt(rest);
    // one of (t, s) is odd, the other even
    Integer odd = mpz_odd_p(t.get_mpz_t()) ? t : s;
    Integer even = mpz_odd_p(t.get_mpz_t()) ? s : t;
    Integer x = mod_floor(odd, 4) == 1 ? odd : Integer(-odd);
    return {p, x, even};
  }
  throw std::logic_error("two_square_decompose: no decomposition found for " + to_string(p));
}

ResidueClass residue_of_rational(const Rational& r, const Integer& p, unsigned e) {
  if (e == 0) throw std::invalid_argument("residue_of_rational: exponent must be positive");
  const Integer modulus = ipow(p, e);
  if (mpz_divisible_p(r.get_den_mpz_t(), p.get_mpz_t())) throw DenominatorNotInvertible(r, p);
  Integer inv;
  Integer den(r.get_den());
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t());
  return {mod_floor(Integer(r.get_num()) * inv, modulus), modulus};
}

bool divisible(const Rational& r, const Integer& m) {
  if (r.get_den() != 1) return false;
  if (m == 0) return r == 0;
  return mpz_divisible_p(r.get_num_mpz_t(), m.get_mpz_t()) != 0;
}

}  // namespace rscheck
