#include <gtest/gtest.h>

#include <thread>

#include "oracle.hpp"
#include "rscheck/sequences.hpp"

using namespace rscheck;

namespace {

const std::vector<const char*> kR = {"-1",     "1",       "7",        "25",        "87",         "329",
                                     "1359",   "6001",    "27759",    "132689",    "649815",     "3242377",
                                     "16421831", "84196761", "436129183", "2278835681", "11996748255"};
const std::vector<const char*> kS = {"1",        "7",         "55",         "465",         "4047",
                                     "35673",    "316521",    "2819295",    "25173855",    "225157881",
                                     "2016242265", "18070920255", "162071863425"};

IntPolynomial poly(std::initializer_list<long> c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return IntPolynomial(std::move(v));
}

IntPolynomial from_oracle(const oracle::Poly& p) { return IntPolynomial(p); }

}  // namespace

TEST(GoldenValues, R) {
  for (unsigned long n = 0; n < kR.size(); ++n) EXPECT_EQ(seq::R(n), Integer(kR[n])) << n;
}

TEST(GoldenValues, S) {
  for (unsigned long n = 0; n < kS.size(); ++n) EXPECT_EQ(seq::S(n), Integer(kS[n])) << n;
}

TEST(GoldenPolynomials, R) {
  EXPECT_EQ(seq::R_poly(0), poly({-1}));
  EXPECT_EQ(seq::R_poly(1), poly({-1, 2}));
  EXPECT_EQ(seq::R_poly(2), poly({-1, 6, 2}));
  EXPECT_EQ(seq::R_poly(3), poly({-1, 12, 10, 4}));
  EXPECT_EQ(seq::R_poly(4), poly({-1, 20, 30, 28, 10}));
  EXPECT_EQ(seq::R_poly(5), poly({-1, 30, 70, 112, 90, 28}));
}

TEST(GoldenPolynomials, S) {
  EXPECT_EQ(seq::S_poly(0), poly({1}));
  EXPECT_EQ(seq::S_poly(1), poly({1, 6}));
  EXPECT_EQ(seq::S_poly(2), poly({1, 24, 30}));
  EXPECT_EQ(seq::S_poly(3), poly({1, 54, 270, 140}));
  EXPECT_EQ(seq::S_poly(4), poly({1, 96, 1080, 2240, 630}));
  EXPECT_EQ(seq::S_poly(5), poly({1, 150, 3000, 14000, 15750, 2772}));
}

TEST(Sequences, RMatchesBothClosedForms) {
  for (unsigned long n = 0; n <= 200; n += (n < 40 ? 1 : 7)) {
    const auto a = oracle::R(n);
    EXPECT_EQ(a, oracle::R_alt(n)) << n;
    EXPECT_EQ(seq::R(n), a) << n;
  }
}

TEST(Sequences, PolynomialsMatchOracle) {
  for (unsigned long n = 0; n <= 60; n += (n < 20 ? 1 : 5)) {
    EXPECT_EQ(seq::R_poly(n), from_oracle(oracle::R_coeffs(n))) << n;
    EXPECT_EQ(seq::S_poly(n), from_oracle(oracle::S_coeffs(n))) << n;
  }
}

TEST(Sequences, PolynomialValuesAtZeroAndOne) {
  for (unsigned long n = 0; n <= 300; n += (n < 50 ? 1 : 25)) {
    const auto r = seq::R_poly(n);
    const auto s = seq::S_poly(n);
    EXPECT_EQ(r.evaluate(Integer(1)), seq::R(n));
    EXPECT_EQ(r.coefficient(0), -1);
    EXPECT_EQ(s.evaluate(Integer(1)), seq::S(n));
    EXPECT_EQ(s.coefficient(0), 1);
  }
}

TEST(Sequences, RAtMatchesPolynomial) {
  const Rational x = make_rational(-3, 7);
  for (unsigned long n = 0; n <= 30; ++n) EXPECT_EQ(seq::R_at(n, x), evaluate(seq::R_poly(n), x));
}

TEST(Sequences, SMatchesOracle) {
  for (unsigned long n = 0; n <= 200; n += (n < 40 ? 1 : 9)) EXPECT_EQ(seq::S(n), oracle::S(n)) << n;
}

TEST(Schroder, Examples) {
  EXPECT_EQ(seq::schroder(0), 1);
  EXPECT_EQ(seq::schroder(2), 6);
  EXPECT_EQ(seq::schroder(3), 22);
  for (unsigned long n = 0; n <= 50; ++n) EXPECT_EQ(seq::schroder(n), oracle::schroder(n));
}

TEST(H, Examples) {
  EXPECT_EQ(seq::h(0), 1);
  EXPECT_EQ(seq::h(2), 7);
  EXPECT_EQ(seq::h(3), 33);
  for (unsigned long n = 0; n <= 40; ++n) {
    oracle::Z s = 0;
    for (unsigned long k = 0; k <= n; ++k) s += oracle::binom(oracle::Z(n), k) * oracle::binom(oracle::Z(n), k) * oracle::catalan(k);
    EXPECT_EQ(seq::h(n), s);
  }
}

TEST(RatioSum, Examples) {
  EXPECT_EQ(seq::ratio_sum(1, 1, 16), make_rational(1, 8));
  EXPECT_EQ(seq::ratio_sum(0, 0, 8), -1);
  // 5 binom(4,2)^2 / ((-1) 16^2)
  EXPECT_EQ(seq::ratio_sum(2, 0, 16), make_rational(5 * 36, -256));
  EXPECT_EQ(seq::ratio_sum(2, 0, 16), make_rational(-45, 64));
}

TEST(RatioSum, MatchesOracle) {
  for (unsigned long n = 0; n <= 15; ++n)
    for (unsigned long d = 0; d <= 4; ++d) {
      oracle::Q s = 0;
      oracle::Z m_pow = 1;
      for (unsigned long k = 0; k <= n; ++k, m_pow *= 8)
        s += oracle::frac(oracle::binom(oracle::Z(2 * k), k) * oracle::binom(oracle::Z(2 * k), k + d),
                          (oracle::Z(2 * k) - 1) * m_pow);
      EXPECT_EQ(seq::ratio_sum(n, d, 8), s) << n << " " << d;
    }
}

TEST(CompanionSums, Examples) {
  EXPECT_EQ(seq::t_seq(1), 3);
  EXPECT_EQ(seq::T_seq(1), 13);
  EXPECT_EQ(seq::T_plus(1), 37);
  EXPECT_EQ(seq::s_small(0), -1);
  EXPECT_EQ(seq::S_cplus(1), 19);
  EXPECT_EQ(seq::S_cminus(1), -17);
}

TEST(CompanionSums, MatchOracle) {
  using oracle::binom;
  using oracle::Q;
  using oracle::Z;
  for (unsigned long n = 0; n <= 40; ++n) {
    Q t = 0, s = 0;
    Z T = 0, Tp = 0, Tm = 0, Sp = 0, Sm = 0;
    for (unsigned long k = 0; k <= n; ++k) {
      const Z b = binom(Z(n), k);
      const Z c = binom(Z(n + k), k);
      const Z w = b * b * c * c;
      const Z v = b * b * binom(Z(2 * k), k);
      const Z odd = 2 * k + 1;
      const int sg = k % 2 ? -1 : 1;
      t += oracle::frac(w, Z(2 * k) - 1);
      s += oracle::frac(v, Z(2 * k) - 1);
      T += w * odd;
      Tp += w * odd * odd;
      Tm += sg * w * odd * odd;
      Sp += v * odd * odd;
      Sm += sg * v * odd * odd;
    }
    ASSERT_EQ(t.get_den(), 1);
    ASSERT_EQ(s.get_den(), 1);
    EXPECT_EQ(seq::t_seq(n), t.get_num());
    EXPECT_EQ(seq::s_small(n), s.get_num());
    EXPECT_EQ(seq::T_seq(n), T);
    EXPECT_EQ(seq::T_plus(n), Tp);
    EXPECT_EQ(seq::T_minus(n), Tm);
    EXPECT_EQ(seq::S_cplus(n), Sp);
    EXPECT_EQ(seq::S_cminus(n), Sm);
  }
}

TEST(SmPoly, Examples) {
  EXPECT_EQ(seq::S_m_poly(2, 2), poly({1, 24, 30}));
  EXPECT_EQ(seq::S_m_poly(1, 1), poly({1, 2}));
  EXPECT_EQ(seq::S_m_poly(3, 0), poly({1}));
}

TEST(SmPoly, SecondOrderIsS) {
  for (unsigned long n = 0; n <= 100; n += (n < 30 ? 1 : 10)) EXPECT_EQ(seq::S_m_poly(2, n), seq::S_poly(n)) << n;
}

TEST(SmPoly, MatchesOracle) {
  for (unsigned long m = 1; m <= 4; ++m)
    for (unsigned long n = 0; n <= 12; ++n) {
      oracle::Poly ref;
      for (unsigned long k = 0; k <= n; ++k) {
        oracle::Z w = oracle::factorial(k * m + 1);
        oracle::Z den = 1;
        for (unsigned long i = 0; i < m; ++i) {
          w *= oracle::binom(oracle::Z(n), k);
          den *= oracle::factorial(k);
        }
        ref.push_back(w / den);
      }
      EXPECT_EQ(seq::S_m_poly(m, n), IntPolynomial(ref)) << m << " " << n;
    }
}

TEST(Recurrences, SmallInstances) {
  EXPECT_TRUE(seq::check_recurrence_R(0).passed());
  EXPECT_TRUE(seq::check_recurrence_R(1).passed());
  EXPECT_TRUE(seq::check_recurrence_R_poly(0).passed());
  EXPECT_TRUE(seq::check_recurrence_R_poly(1).passed());
  EXPECT_TRUE(seq::check_recurrence_S(0).passed());
  EXPECT_TRUE(seq::check_recurrence_S(1).passed());
}

TEST(Recurrences, HandArithmetic) {
  const Integer r[] = {-1, 1, 7, 25, 87};
  EXPECT_EQ(1 * r[0] - 15 * r[1] + 13 * r[2] - 3 * r[3], 0);
  EXPECT_EQ(2 * r[1] - 22 * r[2] + 20 * r[3] - 4 * r[4], 0);
}

TEST(Recurrences, FullRange) {
  EXPECT_TRUE(seq::check_recurrence_R(200).passed());
  EXPECT_TRUE(seq::check_recurrence_R_poly(100).passed());
  EXPECT_TRUE(seq::check_recurrence_S(200).passed());
}

TEST(SequenceCache, ConcurrentReadsAgree) {
  seq::SequenceCache cache;
  std::vector<std::thread> workers;
  std::vector<Integer> out(4);
  for (int w = 0; w < 4; ++w)
    workers.emplace_back([&, w] {
      Integer acc = 0;
      for (unsigned long n = 0; n <= 60; ++n) acc += cache.R(n) + cache.S(n);
      out[w] = acc;
    });
  for (auto& t : workers) t.join();
  for (int w = 1; w < 4; ++w) EXPECT_EQ(out[w], out[0]);
  EXPECT_EQ(cache.R(16), Integer("11996748255"));
}
