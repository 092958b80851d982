#include "rscheck/qalgebra.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace rscheck::q {

QRationalFunction::QRationalFunction(IntPolynomial num, IntPolynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("q-rational function with zero denominator");
  normalize();
}

void QRationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = IntPolynomial::constant(1);
    return;
  }
  if (den_.degree() > 0) {
    const IntPolynomial g = gcd(num_, den_);
    if (g.degree() > 0) {
      // g is primitive, so both quotients stay integral
      num_ = *to_integer(divrem(to_rational(num_), to_rational(g)).first);
      den_ = *to_integer(divrem(to_rational(den_), to_rational(g)).first);
    }
  }
  Integer c = content(den_);
  mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), content(num_).get_mpz_t());
  if (den_.leading() < 0) c = -c;
  if (c != 1) {
    std::vector<Integer> n = num_.coefficients();
    std::vector<Integer> d = den_.coefficients();
    for (auto& v : n) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
    for (auto& v : d) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
    num_ = IntPolynomial(std::move(n));
    den_ = IntPolynomial(std::move(d));
  }
}

const IntPolynomial& QRationalFunction::as_polynomial() const {
  if (!is_polynomial()) throw std::logic_error("q-rational function is not a polynomial");
  return num_;
}

Rational QRationalFunction::at_one() const {
  const Rational d = den_.evaluate(Rational(1));
  if (d == 0) throw std::domain_error("denominator vanishes at q = 1");
  return num_.evaluate(Rational(1)) / d;
}

QRationalFunction operator+(const QRationalFunction& a, const QRationalFunction& b) {
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

QRationalFunction operator-(const QRationalFunction& a, const QRationalFunction& b) {
  if (a.den_ == b.den_) return {a.num_ - b.num_, a.den_};
  return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

QRationalFunction operator*(const QRationalFunction& a, const QRationalFunction& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

QRationalFunction operator/(const QRationalFunction& a, const QRationalFunction& b) {
  if (b.num_.is_zero()) throw std::domain_error("q-rational division by zero");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

IntPolynomial q_integer_poly(unsigned long n) { return IntPolynomial(std::vector<Integer>(n, Integer(1))); }

QRationalFunction q_integer(long n) {
  if (n >= 0) return q_integer_poly(static_cast<unsigned long>(n));
  // [-N]_q = -q^{-N} [N]_q
  const auto big_n = static_cast<unsigned long>(-n);
  return {-q_integer_poly(big_n), IntPolynomial::monomial(Integer(1), big_n)};
}

IntPolynomial times_q_integer(const IntPolynomial& p, unsigned long m) {
  if (m == 0 || p.is_zero()) return {};
  // out = p (1 - q^m) / (1 - q): prefix sums of p_i - p_{i-m}
  const auto& c = p.coefficients();
  std::vector<Integer> out(c.size() + m - 1);
  Integer run = 0;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < c.size()) run += c[i];
    if (i >= m && i - m < c.size()) run -= c[i - m];
    out[i] = run;
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial over_q_integer(const IntPolynomial& p, unsigned long m) {
  if (m == 0) throw std::domain_error("division by [0]_q");
  if (p.is_zero()) return {};
  if (m == 1) return p;
  // g = p (1 - q), then out = g / (1 - q^m): out_i = g_i + out_{i-m}
  const auto& c = p.coefficients();
  const std::size_t gsize = c.size() + 1;
  auto g = [&](std::size_t i) -> Integer {
    Integer v = i < c.size() ? c[i] : Integer(0);
    if (i >= 1 && i - 1 < c.size()) v -= c[i - 1];
    return v;
  };
  if (gsize <= m) throw std::domain_error("polynomial not divisible by [m]_q");
  const std::size_t osize = gsize - m;
  std::vector<Integer> out(gsize);
  for (std::size_t i = 0; i < gsize; ++i) {
    out[i] = g(i);
    if (i >= m) out[i] += out[i - m];
  }
  for (std::size_t i = osize; i < gsize; ++i)
    if (out[i] != 0) throw std::domain_error("polynomial not divisible by [m]_q");
  out.resize(osize);
  return IntPolynomial(std::move(out));
}

IntPolynomial q_binomial_poly(unsigned long n, unsigned long k) {
  if (k > n) return {};
  if (k > n - k) k = n - k;
  IntPolynomial p = IntPolynomial::constant(1);
  for (unsigned long j = 1; j <= k; ++j) {
    p = times_q_integer(p, n - k + j);
    p = over_q_integer(p, j);
  }
  return p;
}

QRationalFunction q_binomial(long n, unsigned long k) {
  if (n >= 0) return q_binomial_poly(static_cast<unsigned long>(n), k);
  // [-N choose k]_q = (-1)^k q^{-(Nk + k(k-1)/2)} [N+k-1 choose k]_q
  const auto big_n = static_cast<unsigned long>(-n);
  IntPolynomial top = q_binomial_poly(big_n + k - 1, k);
  if (k % 2) top = -top;
  return {std::move(top), IntPolynomial::monomial(Integer(1), big_n * k + k * (k - 1) / 2)};
}

const IntPolynomial& CyclotomicTable::get(unsigned long d) {
  if (d == 0) throw std::invalid_argument("cyclotomic index must be positive");
  std::lock_guard lock(mutex_);
  // ascending divisors are built first so the recursion never re-enters the lock
  for (unsigned long e = 1; e <= d; ++e) {
    if (d % e != 0 || cache_.count(e)) continue;
    IntPolynomial num = IntPolynomial::monomial(Integer(1), e) - IntPolynomial::constant(1);
    for (unsigned long f = 1; f < e; ++f) {
      if (e % f != 0) continue;
      auto [quot, rem] = divrem_monic(num, cache_.at(f));
      if (!rem.is_zero()) throw std::logic_error("cyclotomic division left a remainder");
      num = std::move(quot);
    }
    cache_.emplace(e, std::move(num));
  }
  return cache_.at(d);
}

IntPolynomial cyclotomic(unsigned long d) {
  static CyclotomicTable table;
  return table.get(d);
}

std::pair<RationalPolynomial, RationalPolynomial> poly_divrem(const IntPolynomial& a, const IntPolynomial& b) {
  return divrem(to_rational(a), to_rational(b));
}

bool divides_in_Zq(const IntPolynomial& b, const IntPolynomial& a) {
  auto [quot, rem] = poly_divrem(a, b);
  return rem.is_zero() && to_integer(quot).has_value();
}

QuotientRing::QuotientRing(IntPolynomial monic_modulus) : m_(std::move(monic_modulus)) {
  if (m_.is_zero() || m_.leading() != 1) throw std::invalid_argument("QuotientRing: modulus must be monic");
}

IntPolynomial QuotientRing::reduce(const IntPolynomial& a) const { return remainder_monic(a, m_); }

IntPolynomial QuotientRing::mul(const IntPolynomial& a, const IntPolynomial& b) const { return reduce(a * b); }

IntPolynomial QuotientRing::pow(IntPolynomial a, unsigned long e) const {
  IntPolynomial r = reduce(IntPolynomial::constant(1));
  a = reduce(a);
  while (e) {
    if (e & 1) r = mul(r, a);
    e >>= 1;
    if (e) a = mul(a, a);
  }
  return r;
}

IntPolynomial QuotientRing::q_power(long e) const {
  if (period_ > 0) {
    const long p = static_cast<long>(period_);
    e = ((e % p) + p) % p;
  } else if (e < 0) {
    throw std::invalid_argument("negative power of q without a period");
  }
  return reduce(IntPolynomial::monomial(Integer(1), static_cast<std::size_t>(e)));
}

namespace {

using Params = std::vector<std::pair<std::string, std::string>>;

std::string num(unsigned long v) { return std::to_string(v); }

std::string poly_str(const IntPolynomial& p) {
  std::string s = to_string(p, 'q');
  if (s.size() > 160) s = s.substr(0, 70) + " ... " + s.substr(s.size() - 70);
  return s;
}

// [n]_q with q^n = 1 available for q-power reduction.
QuotientRing ring_mod_q_integer(unsigned long n) {
  QuotientRing ring(q_integer_poly(n));
  ring.set_period(n);
  return ring;
}

}  // namespace

CheckResult check_q_lucas(unsigned long a, unsigned long b, unsigned long s, unsigned long t, unsigned long d) {
  if (d == 0 || s >= d || t >= d) throw std::invalid_argument("check_q_lucas: need s < d and t < d");
  ClaimSet cs("qlucas", Params{{"a", num(a)}, {"b", num(b)}, {"s", num(s)}, {"t", num(t)}, {"d", num(d)}});
  const QuotientRing ring(cyclotomic(d));
  const IntPolynomial lhs = ring.reduce(q_binomial_poly(a * d + s, b * d + t));
  const IntPolynomial rhs = ring.reduce(q_binomial_poly(s, t) * binomial(Integer(a), b));
  cs.claim("", lhs == rhs, poly_str(lhs), poly_str(rhs), "Phi_" + num(d) + "(q)");
  return std::move(cs).finish();
}

CheckResult check_lemma32(unsigned long n, unsigned long k) {
  if (n == 0 || !(2 * k + 1 < n)) throw std::invalid_argument("check_lemma32: need k < (n-1)/2");
  ClaimSet cs("lemma32", Params{{"n", num(n)}, {"k", num(k)}});
  QuotientRing ring(cyclotomic(n));
  ring.set_period(n);
  IntPolynomial acc;
  for (unsigned long h = k; h < n; ++h) {
    const IntPolynomial b = ring.reduce(q_binomial_poly(h, k));
    acc += ring.mul(ring.q_power(static_cast<long>(h)), ring.mul(b, b));
  }
  acc = ring.reduce(acc);
  cs.claim("", acc.is_zero(), poly_str(acc), "0", "Phi_" + num(n) + "(q)");
  return std::move(cs).finish();
}

CheckResult check_theorem31_q(unsigned long n, unsigned long k) {
  if (!(n > k)) throw std::invalid_argument("check_theorem31_q: need n > k");
  ClaimSet cs("thm31", Params{{"n", num(n)}, {"k", num(k)}});
  const QuotientRing ring = ring_mod_q_integer(n);
  IntPolynomial inner;
  for (unsigned long h = k; h < n; ++h) {
    const IntPolynomial b = ring.reduce(q_binomial_poly(h, k));
    inner += ring.mul(ring.q_power(static_cast<long>(h)), ring.mul(b, b));
  }
  const IntPolynomial prefix = ring.mul(ring.reduce(q_integer_poly(2 * k + 1)), ring.reduce(q_binomial_poly(2 * k, k)));
  const IntPolynomial total = ring.mul(prefix, ring.reduce(inner));
  cs.claim("", total.is_zero(), poly_str(total), "0", "[" + num(n) + "]_q");
  return std::move(cs).finish();
}

CheckResult check_theorem32_q(unsigned long n, unsigned long a, unsigned long b, unsigned long a_prime) {
  if (n == 0) throw std::invalid_argument("check_theorem32_q: n must be positive");
  if (!(a_prime == a || a_prime + 1 == a)) throw std::invalid_argument("check_theorem32_q: a' must be a or a-1");
  ClaimSet cs("thm32", Params{{"n", num(n)}, {"a", num(a)}, {"b", num(b)}, {"a_prime", num(a_prime)}});
  const QuotientRing ring = ring_mod_q_integer(n);
  IntPolynomial acc;
  for (unsigned long k = 0; k < n; ++k) {
    // exponent a'k(k+1)/2 - k, shifted by n-1 so every term is a polynomial
    const long e = static_cast<long>(a_prime * k * (k + 1) / 2) - static_cast<long>(k) + static_cast<long>(n - 1);
    IntPolynomial term = ring.mul(ring.q_power(e), ring.reduce(q_integer_poly(2 * k + 1)));
    term = ring.mul(term, ring.pow(q_binomial_poly(n - 1, k), a));
    term = ring.mul(term, ring.pow(q_binomial_poly(n + k, k), b));
    if ((a_prime * k) % 2) acc -= term;
    else acc += term;
  }
  acc = ring.reduce(acc);
  cs.claim("", acc.is_zero(), poly_str(acc), "0", "[" + num(n) + "]_q");
  cs.note("sum multiplied by q^" + num(n - 1) + " to clear negative powers of q");
  return std::move(cs).finish();
}

namespace {

std::mutex s_q_mutex;
std::vector<QRationalFunction> s_q_cache;

QRationalFunction compute_s_q(unsigned long n) {
  // k = 0: 1/[-1]_q = -q
  IntPolynomial poly{Integer(0), Integer(-1)};
  QRationalFunction rest;
  for (unsigned long k = 1; k <= n; ++k) {
    const IntPolynomial central = q_binomial_poly(2 * k, k);
    const IntPolynomial b = q_binomial_poly(n, k);
    const IntPolynomial weight = (b * b).shifted(k);
    try {
      poly += weight * over_q_integer(central, 2 * k - 1);
    } catch (const std::domain_error&) {
      rest = rest + QRationalFunction(weight * central, q_integer_poly(2 * k - 1));
    }
  }
  return QRationalFunction(std::move(poly)) + rest;
}

}  // namespace

QRationalFunction s_q(unsigned long n) {
  {
    std::lock_guard lock(s_q_mutex);
    if (n < s_q_cache.size()) return s_q_cache[n];
  }
  QRationalFunction value = compute_s_q(n);
  std::lock_guard lock(s_q_mutex);
  while (s_q_cache.size() < n) s_q_cache.push_back(compute_s_q(s_q_cache.size()));
  if (s_q_cache.size() == n) s_q_cache.push_back(value);
  return value;
}

CheckResult check_conj57(unsigned long n) {
  if (n == 0) throw std::invalid_argument("check_conj57: n must be positive");
  ClaimSet cs("conj57", Params{{"n", num(n)}});
  QRationalFunction sum;
  for (unsigned long k = 0; k < n; ++k)
    sum = sum + QRationalFunction(IntPolynomial::monomial(Integer(1), k)) * s_q(k);
  if (!sum.is_polynomial()) {
    cs.ill_posed("sum", "sum of q^k s_k(q) is not a polynomial");
    return std::move(cs).finish();
  }
  const IntPolynomial a = IntPolynomial{Integer(1), Integer(1)} * sum.as_polynomial();
  const IntPolynomial modulus = q_integer_poly(n) * q_integer_poly(n);
  auto [quot, rem] = divrem_monic(a, modulus);
  cs.claim("", rem.is_zero(), poly_str(rem), "0", "[" + num(n) + "]_q^2");
  if (rem.is_zero()) {
    // the conjectured quotient is quot / 2
    const bool integral = all_coefficients_divisible(quot, Integer(2));
    cs.note(integral ? "quotient (1+q)/2 * sum / [n]_q^2 lies in Z[q]"
                     : "quotient (1+q)/2 * sum / [n]_q^2 is half-integral (in Q[q], not Z[q])");
  }
  return std::move(cs).finish();
}

CheckResult check_conj58_q(unsigned long m, unsigned long n) {
  if (m == 0 || n == 0) throw std::invalid_argument("check_conj58_q: m and n must be positive");
  ClaimSet cs("conj58q", Params{{"m", num(m)}, {"n", num(n)}});
  const QuotientRing ring = ring_mod_q_integer(n);
  for (unsigned long k = 0; k < n; ++k) {
    // [km+1]! / [k]!^m = [km+1]_q prod_{r=1}^{m} [rk choose k]_q
    IntPolynomial factor = ring.reduce(q_integer_poly(k * m + 1));
    for (unsigned long r = 1; r <= m; ++r) factor = ring.mul(factor, ring.reduce(q_binomial_poly(r * k, k)));
    IntPolynomial inner;
    for (unsigned long h = k; h < n; ++h)
      inner += ring.mul(ring.q_power(static_cast<long>(h)), ring.pow(q_binomial_poly(h, k), m));
    const IntPolynomial total = ring.mul(factor, ring.reduce(inner));
    cs.claim("k=" + num(k), total.is_zero(), poly_str(total), "0", "[" + num(n) + "]_q");
    if (!cs.ok()) break;
  }
  return std::move(cs).finish();
}

CheckResult check_q_degeneration(unsigned long n) {
  if (n == 0) throw std::invalid_argument("check_q_degeneration: n must be positive");
  ClaimSet cs("qdegen", Params{{"n", num(n)}});
  const Integer N(n);
  auto at_one = [](const IntPolynomial& p) { return p.evaluate(Integer(1)); };
  for (unsigned long k = 0; k < n; ++k) {
    Integer qsum = 0;
    Integer isum = 0;
    for (unsigned long h = k; h < n; ++h) {
      const Integer b = at_one(q_binomial_poly(h, k));
      qsum += b * b;
      const Integer c = binomial(Integer(h), k);
      isum += c * c;
    }
    const Integer qv = at_one(q_integer_poly(2 * k + 1)) * at_one(q_binomial_poly(2 * k, k)) * qsum;
    const Integer iv = Integer(2 * k + 1) * binomial(Integer(2 * k), k) * isum;
    const std::string label = "central k=" + num(k);
    cs.claim(label, qv == iv && mpz_divisible_p(iv.get_mpz_t(), N.get_mpz_t()), short_string(qv), short_string(iv),
             num(n));
    if (!cs.ok()) return std::move(cs).finish();
  }
  for (unsigned long a = 0; a <= 2; ++a) {
    for (unsigned long b = 0; b <= 2; ++b) {
      for (unsigned long ap : {a, a - 1}) {
        if (ap > a) continue;  // a - 1 wrapped for a = 0
        Integer qv = 0;
        Integer iv = 0;
        for (unsigned long k = 0; k < n; ++k) {
          const int sign = (ap * k) % 2 ? -1 : 1;
          qv += sign * at_one(q_integer_poly(2 * k + 1)) * ipow(at_one(q_binomial_poly(n - 1, k)), a) *
                ipow(at_one(q_binomial_poly(n + k, k)), b);
          iv += sign * Integer(2 * k + 1) * ipow(binomial(Integer(n - 1), k), a) * ipow(binomial(Integer(n + k), k), b);
        }
        const std::string label = "signed a=" + num(a) + " b=" + num(b) + " a'=" + num(ap);
        cs.claim(label, qv == iv && mpz_divisible_p(iv.get_mpz_t(), N.get_mpz_t()), short_string(qv),
                 short_string(iv), num(n));
        if (!cs.ok()) return std::move(cs).finish();
      }
    }
  }
  return std::move(cs).finish();
}

}  // namespace rscheck::q
