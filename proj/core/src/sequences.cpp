#include "rscheck/sequences.hpp"

#include <string>
#include <vector>

namespace rscheck::seq {

namespace {

// Walks k = 0..n, keeping binom(n+k, 2k) and binom(2k,k)/(2k-1) current.
// Each step is an exact division of the running product.
template <class Fn>
void for_each_shifted_central(unsigned long n, Fn&& fn) {
  Integer b = 1;    // binom(n+k, 2k)
  Integer cb = -1;  // binom(2k,k)/(2k-1)
  Integer c = 1;    // C_k
  for (unsigned long k = 0; k <= n; ++k) {
    fn(k, b, cb);
    if (k == n) break;
    // binom(n+k+1, 2k+2) = binom(n+k, 2k) (n+k+1)(n-k) / ((2k+1)(2k+2))
    b *= (n + k + 1);
    b *= (n - k);
    mpz_divexact_ui(b.get_mpz_t(), b.get_mpz_t(), (2 * k + 1) * (2 * k + 2));
    // binom(2k+2,k+1)/(2k+1) = 2 C_k
    cb = 2 * c;
    // C_{k+1} = C_k 2(2k+1)/(k+2)
    c *= 2 * (2 * k + 1);
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), k + 2);
  }
}

// Walks k = 0..n with binom(n,k) and binom(2k,k).
template <class Fn>
void for_each_row_central(unsigned long n, Fn&& fn) {
  Integer b = 1;  // binom(n,k)
  Integer c = 1;  // binom(2k,k)
  for (unsigned long k = 0; k <= n; ++k) {
    fn(k, b, c);
    if (k == n) break;
    b *= (n - k);
    mpz_divexact_ui(b.get_mpz_t(), b.get_mpz_t(), k + 1);
    c *= 2 * (2 * k + 1);
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), k + 1);
  }
}

}  // namespace

Integer R(unsigned long n) {
  Integer acc = 0;
  for_each_shifted_central(n, [&](unsigned long, const Integer& b, const Integer& cb) { acc += b * cb; });
  return acc;
}

IntPolynomial R_poly(unsigned long n) {
  std::vector<Integer> c(n + 1);
  for_each_shifted_central(n, [&](unsigned long k, const Integer& b, const Integer& cb) { c[k] = b * cb; });
  return IntPolynomial(std::move(c));
}

Rational R_at(unsigned long n, const Rational& x) { return evaluate(R_poly(n), x); }

Integer S(unsigned long n) {
  Integer acc = 0;
  for_each_row_central(n, [&](unsigned long k, const Integer& b, const Integer& c) { acc += b * b * c * (2 * k + 1); });
  return acc;
}

IntPolynomial S_poly(unsigned long n) {
  std::vector<Integer> out(n + 1);
  for_each_row_central(n, [&](unsigned long k, const Integer& b, const Integer& c) { out[k] = b * b * c * (2 * k + 1); });
  return IntPolynomial(std::move(out));
}

Integer schroder(unsigned long n) {
  Integer acc = 0;
  for_each_shifted_central(n, [&](unsigned long k, const Integer& b, const Integer& cb) {
    // binom(2k,k)/(k+1) = cb (2k-1)/(k+1)
    Integer catalan_k = cb * (static_cast<long>(2 * k) - 1);
    mpz_divexact_ui(catalan_k.get_mpz_t(), catalan_k.get_mpz_t(), k + 1);
    acc += b * catalan_k;
  });
  return acc;
}

Integer h(unsigned long n) {
  Integer acc = 0;
  for_each_row_central(n, [&](unsigned long k, const Integer& b, const Integer& c) {
    Integer ck = c;
    mpz_divexact_ui(ck.get_mpz_t(), ck.get_mpz_t(), k + 1);
    acc += b * b * ck;
  });
  return acc;
}

Rational ratio_sum(unsigned long n, unsigned long d, const Integer& m) {
  if (m == 0) throw std::invalid_argument("ratio_sum: base must be nonzero");
  // sum c_k / m^k = (sum c_k m^(n-k)) / m^n, accumulated by Horner
  Integer acc = 0;
  Integer cb = -1;  // binom(2k,k)/(2k-1)
  Integer cat = 1;  // C_k
  for (unsigned long k = 0; k <= n; ++k) {
    acc *= m;
    if (k >= d) acc += cb * binomial(Integer(2 * k), k + d);
    cb = 2 * cat;
    cat *= 2 * (2 * k + 1);
    mpz_divexact_ui(cat.get_mpz_t(), cat.get_mpz_t(), k + 2);
  }
  return make_rational(acc, ipow(m, n));
}

namespace {

enum class Weight { OverTwoKMinusOne, TwoKPlusOne, TwoKPlusOneSquared, AlternatingTwoKPlusOneSquared };

// sum binom(n,k)^2 binom(n+k,k)^2 * weight(k)
Integer apery_like(unsigned long n, Weight w) {
  Integer acc = 0;
  for_each_shifted_central(n, [&](unsigned long k, const Integer& b, const Integer& cb) {
    // binom(n,k) binom(n+k,k) = binom(n+k,2k) binom(2k,k) = b * cb * (2k-1)
    Integer over = b * cb;  // binom(n,k)binom(n+k,k)/(2k-1)
    Integer full = over * (static_cast<long>(2 * k) - 1);
    switch (w) {
      case Weight::OverTwoKMinusOne: acc += full * over; break;
      case Weight::TwoKPlusOne: acc += full * full * (2 * k + 1); break;
      case Weight::TwoKPlusOneSquared: acc += full * full * ((2 * k + 1) * (2 * k + 1)); break;
      case Weight::AlternatingTwoKPlusOneSquared:
        if (k % 2) acc -= full * full * ((2 * k + 1) * (2 * k + 1));
        else acc += full * full * ((2 * k + 1) * (2 * k + 1));
        break;
    }
  });
  return acc;
}

// sum binom(n,k)^2 binom(2k,k) * weight(k)
Integer central_weighted(unsigned long n, Weight w) {
  Integer acc = 0;
  for_each_row_central(n, [&](unsigned long k, const Integer& b, const Integer& c) {
    Integer bb = b * b;
    switch (w) {
      case Weight::OverTwoKMinusOne: acc += bb * central_binomial_over_2k_minus_1(k); break;
      case Weight::TwoKPlusOne: acc += bb * c * (2 * k + 1); break;
      case Weight::TwoKPlusOneSquared: acc += bb * c * ((2 * k + 1) * (2 * k + 1)); break;
      case Weight::AlternatingTwoKPlusOneSquared:
        if (k % 2) acc -= bb * c * ((2 * k + 1) * (2 * k + 1));
        else acc += bb * c * ((2 * k + 1) * (2 * k + 1));
        break;
    }
  });
  return acc;
}

}  // namespace

Integer t_seq(unsigned long n) { return apery_like(n, Weight::OverTwoKMinusOne); }
Integer T_seq(unsigned long n) { return apery_like(n, Weight::TwoKPlusOne); }
Integer T_plus(unsigned long n) { return apery_like(n, Weight::TwoKPlusOneSquared); }
Integer T_minus(unsigned long n) { return apery_like(n, Weight::AlternatingTwoKPlusOneSquared); }

Integer s_small(unsigned long n) { return central_weighted(n, Weight::OverTwoKMinusOne); }
Integer S_cplus(unsigned long n) { return central_weighted(n, Weight::TwoKPlusOneSquared); }
Integer S_cminus(unsigned long n) { return central_weighted(n, Weight::AlternatingTwoKPlusOneSquared); }

IntPolynomial S_m_poly(unsigned long m, unsigned long n) {
  if (m == 0) throw std::invalid_argument("S_m_poly: m must be positive");
  std::vector<Integer> out(n + 1);
  Integer b = 1;  // binom(n,k)
  for (unsigned long k = 0; k <= n; ++k) {
    Integer top;
    mpz_fac_ui(top.get_mpz_t(), k * m + 1);
    Integer kf;
    mpz_fac_ui(kf.get_mpz_t(), k);
    const Integer denom = ipow(kf, m);
    mpz_divexact(top.get_mpz_t(), top.get_mpz_t(), denom.get_mpz_t());
    out[k] = ipow(b, m) * top;
    b *= (n - k);
    mpz_divexact_ui(b.get_mpz_t(), b.get_mpz_t(), k + 1);
  }
  return IntPolynomial(std::move(out));
}

namespace {

std::vector<std::pair<std::string, std::string>> nmax_param(unsigned long n_max) {
  return {{"n_max", std::to_string(n_max)}};
}

}  // namespace

CheckResult check_recurrence_R(unsigned long n_max) {
  ClaimSet cs("recR", nmax_param(n_max));
  std::vector<Integer> r(n_max + 1);
  for (unsigned long i = 0; i <= n_max; ++i) r[i] = R(i);
  unsigned long checked = 0;
  for (unsigned long n = 0; n + 3 <= n_max; ++n) {
    const Integer lhs = (n + 1) * r[n] - (7 * n + 15) * r[n + 1] + (7 * n + 13) * r[n + 2] - (n + 3) * r[n + 3];
    cs.claim("n=" + std::to_string(n), lhs == 0, short_string(lhs), "0");
    if (!cs.ok()) break;
    ++checked;
  }
  auto res = std::move(cs).finish();
  if (res.passed()) {
    res.lhs = "recurrence residual zero for " + std::to_string(checked) + " shifts";
    res.rhs = "0";
  }
  return res;
}

CheckResult check_recurrence_R_poly(unsigned long n_max) {
  ClaimSet cs("recRpoly", nmax_param(n_max));
  std::vector<IntPolynomial> r(n_max + 1);
  for (unsigned long i = 0; i <= n_max; ++i) r[i] = R_poly(i);
  unsigned long checked = 0;
  for (unsigned long n = 0; n + 3 <= n_max; ++n) {
    const long ln = static_cast<long>(n);
    const IntPolynomial a1{Integer(3 * ln + 5), Integer(4 * ln + 10)};
    const IntPolynomial a2{Integer(3 * ln + 7), Integer(4 * ln + 6)};
    IntPolynomial lhs = r[n] * Integer(ln + 1) - a1 * r[n + 1] + a2 * r[n + 2];
    IntPolynomial rhs = r[n + 3] * Integer(ln + 3);
    const bool ok = lhs == rhs;
    cs.claim("n=" + std::to_string(n), ok, ok ? "" : to_string(lhs), ok ? "" : to_string(rhs));
    if (!cs.ok()) break;
    ++checked;
  }
  auto res = std::move(cs).finish();
  if (res.passed()) {
    res.lhs = "polynomial recurrence holds for " + std::to_string(checked) + " shifts";
    res.rhs = "identity";
  }
  return res;
}

CheckResult check_recurrence_S(unsigned long n_max) {
  ClaimSet cs("recS", nmax_param(n_max));
  std::vector<Integer> s(n_max + 1);
  for (unsigned long i = 0; i <= n_max; ++i) s[i] = S(i);
  unsigned long checked = 0;
  for (unsigned long n = 0; n + 3 <= n_max; ++n) {
    const Integer N(n);
    const Integer lhs = 9 * (N + 1) * (N + 1) * s[n] - (19 * N * N + 74 * N + 87) * s[n + 1] +
                        (N + 3) * (11 * N + 29) * s[n + 2];
    const Integer rhs = (N + 3) * (N + 3) * s[n + 3];
    cs.claim("n=" + std::to_string(n), lhs == rhs, short_string(lhs), short_string(rhs));
    if (!cs.ok()) break;
    ++checked;
  }
  auto res = std::move(cs).finish();
  if (res.passed()) {
    res.lhs = "recurrence holds for " + std::to_string(checked) + " shifts";
    res.rhs = "identity";
  }
  return res;
}

}  // namespace rscheck::seq
