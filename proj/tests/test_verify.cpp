#include <gtest/gtest.h>

#include <cmath>

#include "oracle.hpp"
#include "rscheck/sequences.hpp"
#include "rscheck/verify.hpp"

using namespace rscheck;
namespace v = rscheck::verify;
using oracle::binom;
using oracle::frac;
using oracle::Q;
using oracle::Z;

namespace {

std::vector<unsigned long> odd_primes_below(unsigned long limit) {
  std::vector<unsigned long> out;
  for (unsigned long p = 3; p < limit; ++p)
    if (oracle::is_prime(p)) out.push_back(p);
  return out;
}

int jacobi_small(long a, unsigned long p) {
  const Z r = oracle::mod(Z(a), Z(p));
  if (r == 0) return 0;
  for (unsigned long x = 1; x < p; ++x)
    if (oracle::mod(Z(x * x) - r, Z(p)) == 0) return 1;
  return -1;
}

Q pow_q(long base, unsigned long e) { return oracle::power(Q(base), e); }

// sum_{k<p} binom(2k,k)^2 / ((2k-1) m^k)
Q central_square_sum(unsigned long p, long m) {
  Q s = 0;
  for (unsigned long k = 0; k < p; ++k) {
    const Z c = binom(Z(2 * k), k);
    s += Q(c * c) / ((Q(Z(2 * k) - 1)) * pow_q(m, k));
  }
  s.canonicalize();
  return s;
}

void expect_all_pass(const CheckResult& r) {
  EXPECT_EQ(r.status, Status::Pass) << r.family << " " << (r.witness ? *r.witness : std::string()) << " "
                                    << (r.note ? *r.note : std::string());
}

}  // namespace

TEST(CheckThm11, Examples) {
  expect_all_pass(v::check_thm11(5));
  expect_all_pass(v::check_thm11(13));
  expect_all_pass(v::check_thm11(7));
  // hand arithmetic at p = 5: R_2 - 5 = 2 and -2 (2/5) x = 2 with x = 1
  EXPECT_EQ(oracle::R(2) - 5, 2);
}

TEST(CheckThm11, FirstCongruenceAgainstOracle) {
  for (unsigned long p : odd_primes_below(300)) {
    if (p % 4 != 1) continue;
    long x = 0;
    for (long t = 1; t * t < static_cast<long>(p); t += 2) {
      const long y2 = static_cast<long>(p) - t * t;
      const long y = static_cast<long>(std::llround(std::sqrt(static_cast<double>(y2))));
      if (y * y == y2 && y % 2 == 0) x = (t % 4 == 1) ? t : -t;
    }
    ASSERT_NE(x, 0);
    const Z m = Z(p) * p;
    const Q s = central_square_sum(p, -16);
    const Z lhs = oracle::residue(s, m);
    EXPECT_EQ(lhs, oracle::mod(Z(-2 * jacobi_small(2, p) * x), m)) << p;
    EXPECT_EQ(oracle::mod(oracle::R((p - 1) / 2) - p, m), lhs) << p;
    expect_all_pass(v::check_thm11(p));
  }
}

TEST(CheckThm11, ThreeModFourAgainstOracle) {
  for (unsigned long p : odd_primes_below(120)) {
    if (p % 4 != 3) continue;
    const Z c = binom(Z((p + 1) / 2), (p + 1) / 4);
    const Q rhs = Q(-1, 2) * Q(jacobi_small(2, p)) * Q(c);
    EXPECT_EQ(oracle::residue(central_square_sum(p, -16), Z(p)), oracle::residue(rhs, Z(p))) << p;
    expect_all_pass(v::check_thm11(p));
  }
}

TEST(CheckThm12, Examples) {
  expect_all_pass(v::check_thm12(3));
  expect_all_pass(v::check_thm12(7));
  expect_all_pass(v::check_thm12(13));
}

TEST(CheckThm12, OracleSums) {
  for (unsigned long p : odd_primes_below(60)) {
    const unsigned long n = (p - 1) / 2;
    for (unsigned long d = n % 2; d <= n; d += 2) {
      Q s = 0;
      for (unsigned long k = 0; k < p; ++k)
        s += Q(binom(Z(2 * k), k) * binom(Z(2 * k), k + d)) / (Q(Z(2 * k) - 1) * pow_q(8, k));
      s.canonicalize();
      EXPECT_EQ(oracle::residue(s, Z(p)), 0) << p << " " << d;
    }
    expect_all_pass(v::check_thm12(p));
  }
}

TEST(CheckRemark11, Examples) {
  expect_all_pass(v::check_remark11(1, 1));
  expect_all_pass(v::check_remark11(0, 0));
  expect_all_pass(v::check_remark11(3, 2));
}

TEST(CheckRemark11, ClosedFormOracle) {
  for (unsigned long n = 0; n <= 12; ++n)
    for (unsigned long d = 0; d <= 5; ++d) {
      const Q rhs = Q(Z(2 * n + 1) * binom(Z(2 * n), n) * binom(Z(2 * n), n + d)) /
                    (Q(Z(4 * d * d) - 1) * pow_q(16, n));
      EXPECT_EQ(seq::ratio_sum(n, d, 16), Q(rhs.get_num(), rhs.get_den())) << n << " " << d;
      expect_all_pass(v::check_remark11(n, d));
    }
}

TEST(CheckThm13, Examples) {
  expect_all_pass(v::check_thm13(3));
  expect_all_pass(v::check_thm13(5));
  expect_all_pass(v::check_thm13(13));
  EXPECT_EQ(oracle::mod(Z(119), 25), oracle::mod(Z(-6), 25));
}

TEST(CheckThm13, OracleSums) {
  seq::SequenceCache cache;
  for (unsigned long p : odd_primes_below(150)) {
    Z s = 0;
    for (unsigned long k = 0; k < p; ++k) s += oracle::R(k);
    const Z m = Z(p) * p;
    EXPECT_EQ(oracle::mod(s, m), oracle::mod(-Z(p) - jacobi_small(-1, p), m)) << p;
    expect_all_pass(v::check_thm13(p, &cache));
  }
}

TEST(CheckThm13ii, Examples) {
  expect_all_pass(v::check_thm13_ii(1));
  expect_all_pass(v::check_thm13_ii(2));
  expect_all_pass(v::check_thm13_ii(100));
}

TEST(CheckThm13ii, OracleValues) {
  for (unsigned long n = 1; n <= 40; ++n) {
    const auto c = oracle::R_coeffs(n);
    Z at_minus_one = 0;
    for (std::size_t k = 0; k < c.size(); ++k) at_minus_one += (k % 2 ? -1 : 1) * c[k];
    EXPECT_EQ(at_minus_one, -Z(2 * n + 1));
    Q s = 0;
    for (unsigned long k = 0; k <= n; ++k) s += frac(binom(Z(n), k) * binom(-Z(n), k), Z(2 * k) - 1);
    EXPECT_EQ(s, Q(-Z(2 * n)));
    expect_all_pass(v::check_thm13_ii(n));
  }
}

TEST(CheckThm14, Examples) {
  expect_all_pass(v::check_thm14_i(3));
  expect_all_pass(v::check_thm14_i(1));
  expect_all_pass(v::check_thm14_i(2));
  expect_all_pass(v::check_thm14_ii(5));
  expect_all_pass(v::check_thm14_ii(7));
  expect_all_pass(v::check_thm14_ii(11));
  EXPECT_EQ((1 + 7 + 55) / 9, 7);
}

TEST(CheckThm14, FirstPartOracle) {
  for (unsigned long n = 1; n <= 40; ++n) {
    Z s = 0;
    for (unsigned long k = 0; k < n; ++k) s += oracle::S(k);
    Z h = 0;
    for (unsigned long k = 0; k < n; ++k) h += binom(Z(n - 1), k) * binom(Z(n - 1), k) * oracle::catalan(k);
    EXPECT_EQ(s, h * n * n) << n;
    expect_all_pass(v::check_thm14_i(n));
  }
}

TEST(CheckThm15i, Examples) {
  expect_all_pass(v::check_thm15_i(2, {1}, v::Thm15Variant::LinearPlus));
  expect_all_pass(v::check_thm15_i(3, {1, 2}, v::Thm15Variant::LinearSquare));
  expect_all_pass(v::check_thm15_i(2, {1}, v::Thm15Variant::PairedHex));
  expect_all_pass(v::check_thm15_i(5, {-3, 2, 1}));
  EXPECT_EQ(2 * (1 + 7 * (-3)), -40);
}

TEST(CheckThm15i, OracleSums) {
  const std::vector<std::vector<long>> lists{{1}, {2}, {-1}, {3, -2}, {1, 1, 2}, {-3, -3}};
  for (unsigned long n = 1; n <= 16; ++n)
    for (const auto& a : lists) {
      Q lin_plus = 0, lin_minus = 0, paired_hex = 0;
      long sum_a = 0;
      for (long x : a) sum_a += x;
      for (unsigned long k = 0; k < n; ++k) {
        Z w = 1, wp = 1;
        for (long x : a) {
          const Z an = Z(x) * Z(n);
          w *= binom(an - 1, k);
          wp *= binom(an - 1, k) * binom(-an - 1, k);
        }
        lin_plus += Q(Z(2 * k + 1) * w);
        lin_minus += Q((k % 2 ? -1 : 1) * Z(2 * k + 1) * w);
        paired_hex += Q(Z(3 * k * k + 3 * k + 1) * wp);
      }
      const Z g = gcd(Z(sum_a - 1), Z(2));
      EXPECT_EQ(oracle::mod(lin_plus.get_num(), Z(n)), 0);
      EXPECT_EQ(oracle::mod(lin_minus.get_num(), Z(n)), 0);
      EXPECT_EQ(oracle::mod(g * paired_hex.get_num(), Z(n) * n * n), 0);
      expect_all_pass(v::check_thm15_i(n, a));
    }
}

TEST(CheckThm15i, VariantNames) {
  for (auto variant : v::all_thm15_variants()) {
    auto back = v::parse_thm15_variant(v::to_string(variant));
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(*back, variant);
  }
  EXPECT_FALSE(v::parse_thm15_variant("bogus").has_value());
}

TEST(CheckThm15ii, Examples) {
  expect_all_pass(v::check_thm15_ii(2, 1, 1));
  expect_all_pass(v::check_thm15_ii(3, 1, 2));
  expect_all_pass(v::check_thm15_ii(4, 2, 1));
}

TEST(CheckThm15ii, FirstSumOracle) {
  EXPECT_EQ(Q(1, 2) * (Q(-1) + frac(Z(-3), Z(3))), Q(-1));
  for (unsigned long n = 1; n <= 20; ++n)
    for (unsigned long a = 1; a <= 3; ++a) {
      Q s = 0;
      for (unsigned long k = 0; k < n; ++k) {
        Z w = 1;
        for (unsigned long i = 0; i < a; ++i) w *= binom(Z(n) - 1, k) * binom(-Z(n) - 1, k);
        s += frac(w, Z(4 * k * k) - 1);
      }
      s /= Q(Z(n));
      s.canonicalize();
      EXPECT_EQ(s.get_den(), 1) << n << " " << a;
    }
}

TEST(CheckThm15ii, CrossValidation) {
  for (unsigned long n = 1; n <= 15; ++n)
    for (unsigned long a = 1; a <= 3; ++a)
      for (unsigned long b = 1; b <= 3; ++b) expect_all_pass(v::cross_validate_thm15_ii(n, a, b));
}

TEST(CheckRemark13, Examples) {
  expect_all_pass(v::check_remark13(2));
  expect_all_pass(v::check_remark13(1));
  expect_all_pass(v::check_remark13(10));
}

TEST(CheckCor11, Examples) {
  expect_all_pass(v::check_cor11(1));
  expect_all_pass(v::check_cor11(2));
  expect_all_pass(v::check_cor11(3));
  EXPECT_EQ(1 + 3 * 13, 40);
}

TEST(CheckCor11, OracleSums) {
  for (unsigned long n = 1; n <= 25; ++n) {
    Z st = 0, sT = 0, sTp = 0, sTm = 0;
    for (unsigned long k = 0; k < n; ++k) {
      Q t = 0;
      Z T = 0, Tp = 0, Tm = 0;
      for (unsigned long j = 0; j <= k; ++j) {
        const Z b = binom(Z(k), j), c = binom(Z(k + j), j);
        const Z w = b * b * c * c;
        t += frac(w, Z(2 * j) - 1);
        T += w * (2 * j + 1);
        Tp += w * (2 * j + 1) * (2 * j + 1);
        Tm += (j % 2 ? -1 : 1) * w * (2 * j + 1) * (2 * j + 1);
      }
      st += (2 * k + 1) * t.get_num();
      sT += (2 * k + 1) * T;
      sTp += (2 * k + 1) * Tp;
      sTm += (2 * k + 1) * Tm;
    }
    const Z n3 = Z(n) * n * n;
    EXPECT_EQ(oracle::mod(st, n3), 0) << n;
    EXPECT_EQ(oracle::mod(sT, n3), 0) << n;
    EXPECT_EQ(oracle::mod(sTp, n3 * n), 0) << n;
    EXPECT_EQ(oracle::mod(sTm, n3), 0) << n;
    expect_all_pass(v::check_cor11(n));
  }
}

TEST(CheckLemma22, Examples) {
  expect_all_pass(v::check_lemma22(0));
  expect_all_pass(v::check_lemma22(1));
  expect_all_pass(v::check_lemma22(12));
}

TEST(CheckLemma23, Examples) {
  expect_all_pass(v::check_lemma23(2, 1));
  expect_all_pass(v::check_lemma23(0, 1));
  expect_all_pass(v::check_lemma23(5, 3));
  for (unsigned long n = 0; n <= 15; ++n)
    for (unsigned long k = 1; k <= n + 1; ++k) expect_all_pass(v::check_lemma23(n, k));
}

TEST(CheckRemark52, Examples) {
  expect_all_pass(v::check_remark52(1));
  expect_all_pass(v::check_remark52(2));
  expect_all_pass(v::check_remark52(25));
}

TEST(CheckRemark53, Range) {
  seq::SequenceCache cache;
  for (unsigned long n = 1; n <= 30; ++n) expect_all_pass(v::check_remark53(n, &cache));
}

TEST(CheckConj51, Primes) {
  for (unsigned long p : odd_primes_below(200))
    if (p % 4 == 3) expect_all_pass(v::check_conj51(p));
}

TEST(CheckConj52, ExactComparisonOracle) {
  EXPECT_GT(Z(1359) * 87, Z(329) * 329);
  seq::SequenceCache cache;
  std::vector<Z> R, S;
  for (unsigned long n = 0; n <= 63; ++n) {
    R.push_back(oracle::R(n));
    S.push_back(oracle::S(n));
  }
  for (unsigned long n = 1; n <= 60; ++n) {
    bool ok = true;
    if (n >= 3) {
      ok = ok && R[n + 2] * R[n] > R[n + 1] * R[n + 1];
      ok = ok && S[n + 2] * S[n] > S[n + 1] * S[n + 1];
      const Z diff = R[n + 1] - 3 * R[n];
      ok = ok && (diff <= 0 || diff * diff < 8 * R[n] * R[n]);
      ok = ok && S[n + 1] < 9 * S[n];
    }
    auto pw = [](const Z& b, unsigned long e) {
      Z r;
      mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
      return r;
    };
    if (n >= 5) {
      ok = ok && pw(R[n + 1], n) > pw(R[n], n + 1);
      ok = ok && pw(R[n + 2], n * (n + 1)) * pw(R[n], (n + 1) * (n + 2)) < pw(R[n + 1], 2 * n * (n + 2));
    }
    ok = ok && pw(S[n + 1], n) > pw(S[n], n + 1);
    ok = ok && pw(S[n + 2], n * (n + 1)) * pw(S[n], (n + 1) * (n + 2)) < pw(S[n + 1], 2 * n * (n + 2));
    EXPECT_TRUE(ok) << n;
    EXPECT_EQ(v::check_conj52(n, &cache).passed(), ok) << n;
  }
}

TEST(Conj53, Witnesses) {
  const auto primes = v::primes_below(200);
  expect_all_pass(v::conj53_witness(1, primes));
  expect_all_pass(v::conj53_witness(2, primes));
  const auto r4 = v::conj53_witness(4, primes);
  EXPECT_NE(r4.status, Status::Fail);
  EXPECT_NE(r4.status, Status::IllPosed);
  const auto none = v::conj53_witness(6, {});
  EXPECT_EQ(none.status, Status::Inconclusive);
}

TEST(IrreducibleModP, LowDegreeRootOracle) {
  const std::vector<IntPolynomial> polys{IntPolynomial{1, 24, 30}, IntPolynomial{1, 0, 1}, IntPolynomial{-2, 0, 0, 1},
                                         IntPolynomial{1, 1, 1}, IntPolynomial{3, -1, 5, 7}};
  for (unsigned long p : odd_primes_below(60))
    for (const auto& f : polys) {
      if (oracle::mod(f.leading(), Z(p)) == 0) continue;
      bool root = false;
      for (unsigned long x = 0; x < p && !root; ++x) root = oracle::mod(f.evaluate(Z(x)), Z(p)) == 0;
      EXPECT_EQ(v::irreducible_mod_p(f, p), !root) << to_string(f) << " mod " << p;
    }
}

TEST(IrreducibleModP, QuarticAlwaysSplits) {
  const IntPolynomial f{1, 0, 0, 0, 1};
  for (unsigned long p : odd_primes_below(200)) EXPECT_FALSE(v::irreducible_mod_p(f, p)) << p;
  EXPECT_FALSE(v::irreducible_mod_p(IntPolynomial{1, 2, 1}, 5));
}

TEST(Conj54, Examples) {
  Z s = oracle::R(0) * oracle::R(0) + oracle::R(1) * oracle::R(1) + oracle::R(2) * oracle::R(2);
  EXPECT_EQ(3 * s / 3, 51);
  seq::SequenceCache cache;
  for (unsigned long n = 1; n <= 40; ++n) {
    expect_all_pass(v::check_conj54(n, &cache));
    expect_all_pass(v::check_conj55(n, &cache));
    expect_all_pass(v::check_conj56(n, &cache));
  }
}

TEST(Conj55, IntegralityOracle) {
  for (unsigned long n = 1; n <= 30; ++n) {
    Z s = 0;
    for (unsigned long k = 0; k < n; ++k) s += k * oracle::S(k);
    EXPECT_EQ(oracle::mod(4 * s, Z(n) * n), 0) << n;
  }
}

TEST(Conj58i, Range) {
  for (unsigned long m = 1; m <= 4; ++m)
    for (unsigned long n = 1; n <= 15; ++n) expect_all_pass(v::check_conj58i(m, n));
}

TEST(ScanConjectures, Selectors) {
  v::ScanRange r{5, 30, 2};
  EXPECT_EQ(v::scan_conjectures("conj54", r).size(), 5u);
  EXPECT_EQ(v::scan_conjectures("conj58i", r).size(), 10u);
  EXPECT_THROW(v::scan_conjectures("conj99", r), std::invalid_argument);
}

TEST(Preconditions, InvalidArgumentsThrow) {
  EXPECT_THROW(v::check_thm11(9), std::invalid_argument);
  EXPECT_THROW(v::check_thm13(2), std::invalid_argument);
  EXPECT_THROW(v::check_conj52(0), std::invalid_argument);
}

TEST(PrimesBelow, MatchesOracle) {
  std::vector<unsigned long> ref;
  for (unsigned long n = 0; n < 500; ++n)
    if (oracle::is_prime(n)) ref.push_back(n);
  EXPECT_EQ(v::primes_below(500), ref);
}
