#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "rscheck/exactnum.hpp"

using namespace rscheck;

namespace {

Rational q(long a, long b) { return make_rational(a, b); }

}  // namespace

TEST(Binomial, Examples) {
  EXPECT_EQ(binomial(5L, 2), 10);
  EXPECT_EQ(binomial(-3L, 2), 6);
  EXPECT_EQ(binomial(6L, 3), 20);
  EXPECT_EQ(binomial(6L, 3) / 5, 2 * catalan(2));
  EXPECT_EQ(binomial(3L, 5), 0);
  EXPECT_EQ(binomial(0L, 0), 1);
  EXPECT_EQ(binomial(-1L, 0), 1);
}

TEST(Binomial, MatchesFactorialOracle) {
  for (long n = -40; n <= 40; ++n)
    for (unsigned long k = 0; k <= 25; ++k) EXPECT_EQ(binomial(n, k), oracle::binom(n, k)) << n << " " << k;
}

TEST(Binomial, PascalRule) {
  for (long n = -50; n <= 50; ++n)
    for (unsigned long k = 1; k <= 30; ++k)
      ASSERT_EQ(binomial(n, k), binomial(n - 1, k) + binomial(n - 1, k - 1)) << n << " " << k;
}

TEST(Binomial, NegationRule) {
  for (long n = 0; n <= 30; ++n)
    for (unsigned long k = 0; k <= 30; ++k) {
      const Integer sign = k % 2 ? -1 : 1;
      ASSERT_EQ(binomial(-n - 1, k), sign * binomial(n + static_cast<long>(k), k));
    }
}

TEST(Binomial, CentralDivisibility) {
  for (unsigned long k = 0; k <= 200; ++k) {
    const Integer c = binomial(static_cast<long>(2 * k), k);
    EXPECT_TRUE(mpz_divisible_ui_p(c.get_mpz_t(), k + 1)) << k;
    const Integer m = Integer(2 * k) - 1;
    EXPECT_EQ(oracle::mod(c, abs(m)), 0) << k;
  }
}

TEST(Catalan, Examples) {
  EXPECT_EQ(catalan(0), 1);
  EXPECT_EQ(catalan(3), 5);
  EXPECT_EQ(catalan(5), 42);
  for (unsigned long k = 0; k <= 60; ++k) EXPECT_EQ(catalan(k), oracle::catalan(k));
}

TEST(CentralOver2kMinus1, Examples) {
  EXPECT_EQ(central_binomial_over_2k_minus_1(0), -1);
  EXPECT_EQ(central_binomial_over_2k_minus_1(1), 2);
  EXPECT_EQ(central_binomial_over_2k_minus_1(4), 10);
  for (unsigned long k = 1; k <= 80; ++k)
    EXPECT_EQ(central_binomial_over_2k_minus_1(k) * (2 * k - 1), oracle::binom(Integer(2 * k), k));
}

TEST(Legendre, Examples) {
  EXPECT_EQ(legendre_symbol(2, 7), 1);
  EXPECT_EQ(legendre_symbol(-1, 3), -1);
  EXPECT_EQ(legendre_symbol(5, 5), 0);
  EXPECT_THROW(legendre_symbol(3, 2), std::invalid_argument);
  EXPECT_THROW(legendre_symbol(3, 9), std::invalid_argument);
}

TEST(Legendre, MatchesSquareSearch) {
  for (unsigned long p = 3; p < 120; ++p) {
    if (!oracle::is_prime(p)) continue;
    std::vector<bool> square(p, false);
    for (unsigned long x = 1; x < p; ++x) square[x * x % p] = true;
    for (unsigned long a = 0; a < p; ++a) {
      const int expected = a == 0 ? 0 : (square[a] ? 1 : -1);
      ASSERT_EQ(legendre_symbol(Integer(a), Integer(p)), expected) << a << " " << p;
    }
  }
}

TEST(Legendre, Multiplicative) {
  std::mt19937_64 rng(7);
  for (unsigned long p = 3; p < 500; ++p) {
    if (!oracle::is_prime(p)) continue;
    for (int i = 0; i < 10; ++i) {
      const long a = static_cast<long>(rng() % 2000) - 1000;
      const long b = static_cast<long>(rng() % 2000) - 1000;
      ASSERT_EQ(legendre_symbol(Integer(a) * b, Integer(p)),
                legendre_symbol(Integer(a), Integer(p)) * legendre_symbol(Integer(b), Integer(p)));
    }
  }
}

TEST(Bernoulli, Examples) {
  EXPECT_EQ(bernoulli_number(0), 1);
  EXPECT_EQ(bernoulli_number(1), q(-1, 2));
  EXPECT_EQ(bernoulli_number(2), q(1, 6));
  EXPECT_EQ(bernoulli_number(3), 0);
  EXPECT_EQ(bernoulli_number(12), q(-691, 2730));
}

TEST(Bernoulli, MatchesAkiyamaTanigawa) {
  for (unsigned m = 0; m <= 40; ++m) EXPECT_EQ(bernoulli_number(m), oracle::bernoulli(m)) << m;
}

TEST(Bernoulli, FactorialMultipleIsIntegral) {
  for (unsigned m = 0; m <= 60; ++m) {
    const Rational v = bernoulli_number(m) * Rational(oracle::factorial(m + 1));
    EXPECT_EQ(v.get_den(), 1) << m;
  }
}

TEST(BernoulliPoly, Examples) {
  EXPECT_EQ(bernoulli_poly_eval(1, q(1, 3)), q(-1, 6));
  EXPECT_EQ(bernoulli_poly_eval(0, q(7, 2)), 1);
  EXPECT_EQ(bernoulli_poly_eval(2, 0), q(1, 6));
}

TEST(BernoulliPoly, MatchesBinomialExpansion) {
  const std::vector<Rational> points{q(1, 3), q(-2, 5), q(7, 4), 0, 1};
  for (unsigned m = 0; m <= 20; ++m)
    for (const auto& x : points) {
      Rational s = 0;
      for (unsigned k = 0; k <= m; ++k)
        s += Rational(oracle::binom(Integer(m), k)) * oracle::bernoulli(k) * oracle::power(x, m - k);
      EXPECT_EQ(bernoulli_poly_eval(m, x), s) << m;
    }
}

TEST(TwoSquare, Examples) {
  auto d5 = two_square_decompose(5);
  EXPECT_EQ(d5.x, 1);
  EXPECT_EQ(d5.y, 2);
  auto d13 = two_square_decompose(13);
  EXPECT_EQ(d13.x, -3);
  EXPECT_EQ(d13.y, 2);
  EXPECT_THROW(two_square_decompose(7), std::invalid_argument);
  EXPECT_THROW(two_square_decompose(25), std::invalid_argument);
}

TEST(TwoSquare, NormalizationBelow1e5) {
  for (unsigned long p = 5; p < 100000; p += 4) {
    if (!is_prime(p)) continue;
    const auto d = two_square_decompose(Integer(p));
    ASSERT_EQ(d.x * d.x + d.y * d.y, p);
    ASSERT_EQ(oracle::mod(d.x, 4), 1) << p;
    ASSERT_EQ(oracle::mod(d.y, 2), 0) << p;
    ASSERT_GT(d.y, 0) << p;
  }
}

TEST(Primality, MatchesTrialDivision) {
  for (unsigned long n = 0; n < 5000; ++n) ASSERT_EQ(is_prime(n), oracle::is_prime(n)) << n;
}

TEST(Residue, Examples) {
  EXPECT_EQ(residue_of_rational(q(7, 8), 5, 2).value, 4);
  EXPECT_EQ(residue_of_rational(q(7, 8), 5, 2).modulus, 25);
  EXPECT_EQ(residue_of_rational(3, 7, 1).value, 3);
  EXPECT_THROW(residue_of_rational(q(1, 5), 5, 2), DenominatorNotInvertible);
  EXPECT_EQ(residue_of_rational(q(-1, 3), 5, 1).value, oracle::residue(q(-1, 3), 5));
}

TEST(Residue, InvertsDenominator) {
  std::mt19937_64 rng(11);
  for (unsigned long p : {3UL, 5UL, 7UL, 11UL, 13UL})
    for (unsigned e = 1; e <= 3; ++e)
      for (int i = 0; i < 50; ++i) {
        const long a = static_cast<long>(rng() % 1000) - 500;
        long b = static_cast<long>(rng() % 500) + 1;
        if (b % static_cast<long>(p) == 0) ++b;
        const Rational r = q(a, b);
        const auto res = residue_of_rational(r, Integer(p), e);
        ASSERT_EQ(oracle::mod(res.value * r.get_den() - r.get_num(), res.modulus), 0);
        ASSERT_EQ(res.value, oracle::residue(r, res.modulus));
      }
}

TEST(Divisible, Basics) {
  EXPECT_TRUE(divisible(12, 4));
  EXPECT_FALSE(divisible(q(12, 5), 4));
  EXPECT_FALSE(divisible(10, 4));
  EXPECT_TRUE(divisible(0, 7));
}

TEST(MakeRational, Canonical) {
  EXPECT_EQ(make_rational(6, -4), q(-3, 2));
  EXPECT_EQ(make_rational(6, -4).get_den(), 2);
  EXPECT_THROW(make_rational(1, 0), std::domain_error);
}

TEST(Strings, ShortStringElides) {
  EXPECT_EQ(to_string(q(-3, 2)), "-3/2");
  const Integer big = ipow(10, 300);
  EXPECT_LE(short_string(big).size(), 130u);
  EXPECT_EQ(short_string(Integer(12345)), "12345");
}

TEST(ModFloor, NonNegative) {
  EXPECT_EQ(mod_floor(-7, 5), 3);
  EXPECT_EQ(mod_floor(7, 5), 2);
  EXPECT_EQ(ipow(3, 4), 81);
}
