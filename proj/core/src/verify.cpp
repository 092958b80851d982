#include "rscheck/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <cstdint>
#include <stdexcept>

#include "rscheck/qalgebra.hpp"

namespace rscheck::verify {

using rscheck::to_string;

namespace {

using Params = std::vector<std::pair<std::string, std::string>>;

std::string int_string(const Integer& v) { return short_string(v); }

std::string clip(std::string s) {
  if (s.size() > 160) s = s.substr(0, 70) + "..." + s.substr(s.size() - 70);
  return s;
}

std::string num(unsigned long v) { return std::to_string(v); }

template <class T>
std::string list(const std::vector<T>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out + "]";
}

void require_odd_prime(unsigned long p, const char* who) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument(std::string(who) + ": p must be an odd prime");
}

// lhs == rhs modulo p^e after exact rational reduction.
void congruence(ClaimSet& cs, std::string_view label, const Rational& lhs, const Rational& rhs, const Integer& p,
                unsigned e) {
  try {
    const ResidueClass l = residue_of_rational(lhs, p, e);
    const ResidueClass r = residue_of_rational(rhs, p, e);
    cs.claim(label, l.value == r.value, short_string(l.value), short_string(r.value), to_string(l.modulus));
  } catch (const DenominatorNotInvertible& ex) {
    cs.ill_posed(label, ex.what());
  }
}

// m | value, value an exact rational that must be an integer.
void multiple_of(ClaimSet& cs, std::string_view label, const Rational& value, const Integer& m) {
  cs.claim(label, divisible(value, m), short_string(value), "0", to_string(m));
}

void integral(ClaimSet& cs, std::string_view label, const Rational& value) {
  cs.claim(label, value.get_den() == 1, short_string(value), "integer");
}

void equal(ClaimSet& cs, std::string_view label, const Rational& lhs, const Rational& rhs) {
  cs.claim(label, lhs == rhs, short_string(lhs), short_string(rhs));
}

// binom(top, k) for k = 0..len-1.
std::vector<Integer> binomial_row(const Integer& top, unsigned long len) {
  std::vector<Integer> row(len);
  if (len == 0) return row;
  row[0] = 1;
  for (unsigned long k = 0; k + 1 < len; ++k) {
    row[k + 1] = row[k] * (top - k);
    mpz_divexact_ui(row[k + 1].get_mpz_t(), row[k + 1].get_mpz_t(), k + 1);
  }
  return row;
}

Integer gcd2(const Integer& v) {
  Integer g;
  const Integer two = 2;
  mpz_gcd(g.get_mpz_t(), v.get_mpz_t(), two.get_mpz_t());
  return g;
}

int pm(bool negative) { return negative ? -1 : 1; }

}  // namespace

std::vector<unsigned long> primes_below(unsigned long limit) {
  std::vector<unsigned long> out;
  if (limit <= 2) return out;
  std::vector<bool> composite(limit, false);
  for (unsigned long i = 2; i < limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (unsigned long j = i * i; j < limit; j += i) composite[j] = true;
  }
  return out;
}

CheckResult check_thm11(unsigned long p) {
  require_odd_prime(p, "check_thm11");
  ClaimSet cs("thm11", Params{{"p", num(p)}});
  const Integer P(p);
  const unsigned long n = (p - 1) / 2;
  const IntPolynomial rn = seq::R_poly(n);
  const Rational r1 = evaluate(rn, Rational(1));
  const Rational rm2 = evaluate(rn, Rational(-2));
  const Rational rmh = evaluate(rn, Rational(-1, 2));
  const Rational sum16 = seq::ratio_sum(p - 1, 0, Integer(-16));
  const Rational sum8 = seq::ratio_sum(p - 1, 0, Integer(8));
  const Rational sum32 = seq::ratio_sum(p - 1, 0, Integer(32));
  const int chi2 = legendre_symbol(Integer(2), P);
  const Rational pr(P);
  if (p % 4 == 1) {
    const TwoSquareDecomposition ts = two_square_decompose(P);
    const bool ok = ts.x * ts.x + ts.y * ts.y == P && mod_floor(ts.x, 4) == 1 && mpz_even_p(ts.y.get_mpz_t()) &&
                    ts.y > 0;
    cs.claim("two squares", ok, "x=" + to_string(ts.x) + " y=" + to_string(ts.y), "x^2+y^2=" + to_string(P));
    const Rational x(ts.x);
    congruence(cs, "R(1) - p vs sum(-16)", r1 - pr, sum16, P, 2);
    congruence(cs, "sum(-16) vs -2(2/p)x", sum16, -2 * chi2 * x, P, 2);
    congruence(cs, "R(-2) + 2p(2/p) vs sum(8)", rm2 + 2 * chi2 * pr, sum8, P, 2);
    congruence(cs, "sum(8) vs (2/p)p/(2x)", sum8, chi2 * pr / (2 * x), P, 2);
    congruence(cs, "R(-1/2) + (p/2)(2/p) vs sum(32)", rmh + chi2 * pr / 2, sum32, P, 2);
    congruence(cs, "sum(32) vs p/(4x) - x", sum32, pr / (4 * x) - x, P, 2);
  } else {
    const Rational c(binomial(Integer((p + 1) / 2), (p + 1) / 4));
    const Rational half_term = Rational(-chi2, 2) * c;
    congruence(cs, "R(1) vs sum(-16)", r1, sum16, P, 1);
    congruence(cs, "sum(-16) vs -(2/p)c/2", sum16, half_term, P, 1);
    congruence(cs, "R(-2) vs sum(8)", rm2, sum8, P, 1);
    congruence(cs, "sum(8) vs -(2/p)c/2", sum8, half_term, P, 1);
    congruence(cs, "R(-1/2) + (p/2)(2/p) vs sum(32)", rmh + chi2 * pr / 2, sum32, P, 2);
    const Rational rhs = -Rational(P + 1) / Rational(ipow(Integer(2), p) + 2) * c;
    congruence(cs, "sum(32) vs -(p+1)c/(2^p+2)", sum32, rhs, P, 2);
  }
  return std::move(cs).finish();
}

CheckResult check_thm12(unsigned long p) {
  require_odd_prime(p, "check_thm12");
  ClaimSet cs("thm12", Params{{"p", num(p)}});
  const unsigned long n = (p - 1) / 2;
  const unsigned long d0 = n % 2;
  const unsigned long count = (n - d0) / 2 + 1;
  // Horner numerators: sum_k cb_k binom(2k,k+d) 8^(p-1-k), one per admissible d
  std::vector<Integer> acc(count, Integer(0));
  Integer cb = -1;  // binom(2k,k)/(2k-1)
  Integer cat = 1;  // C_k
  for (unsigned long k = 0; k < p; ++k) {
    Integer b = binomial(Integer(2 * k), k + d0);
    for (unsigned long i = 0; i < count; ++i) {
      const unsigned long d = d0 + 2 * i;
      mpz_mul_2exp(acc[i].get_mpz_t(), acc[i].get_mpz_t(), 3);
      if (d > k) continue;
      acc[i] += cb * b;
      // binom(2k, j+2) = binom(2k, j) (2k-j)(2k-j-1) / ((j+1)(j+2)) at j = k+d
      const unsigned long j = k + d;
      if (j + 2 <= 2 * k) {
        b *= (2 * k - j) * (2 * k - j - 1);
        mpz_divexact_ui(b.get_mpz_t(), b.get_mpz_t(), (j + 1) * (j + 2));
      } else {
        b = 0;
      }
    }
    cb = 2 * cat;
    cat *= 2 * (2 * k + 1);
    mpz_divexact_ui(cat.get_mpz_t(), cat.get_mpz_t(), k + 2);
  }
  const Integer den = ipow(Integer(8), p - 1);
  for (unsigned long i = 0; i < count; ++i)
    congruence(cs, "d=" + num(d0 + 2 * i), make_rational(acc[i], den), Rational(0), Integer(p), 1);
  return std::move(cs).finish();
}

CheckResult check_remark11(unsigned long n, unsigned long d) {
  ClaimSet cs("rem11", Params{{"n", num(n)}, {"d", num(d)}});
  const Rational lhs = seq::ratio_sum(n, d, Integer(16));
  const Integer dd(d);
  const Rational rhs = make_rational(Integer(2 * n + 1) * binomial(Integer(2 * n), n) * binomial(Integer(2 * n), n + d),
                                     (4 * dd * dd - 1) * ipow(Integer(16), n));
  equal(cs, "", lhs, rhs);
  return std::move(cs).finish();
}

CheckResult check_thm13(unsigned long p, SequenceCache* cache) {
  require_odd_prime(p, "check_thm13");
  ClaimSet cs("thm13", Params{{"p", num(p)}});
  Integer sum = 0;
  for (unsigned long k = 0; k < p; ++k) sum += cache ? (*cache).R(k) : seq::R(k);
  const Integer P(p);
  congruence(cs, "", Rational(sum), Rational(-P - legendre_symbol(Integer(-1), P)), P, 2);
  return std::move(cs).finish();
}

CheckResult check_thm13_ii(unsigned long n) {
  if (n == 0) throw std::invalid_argument("check_thm13_ii: n must be positive");
  ClaimSet cs("thm13ii", Params{{"n", num(n)}});
  equal(cs, "R_n(-1)", seq::R_at(n, Rational(-1)), Rational(-static_cast<long>(2 * n + 1)));
  const auto up = binomial_row(Integer(n), n + 1);
  const auto down = binomial_row(-Integer(n), n + 1);
  Rational sum = 0;
  for (unsigned long k = 0; k <= n; ++k) sum += make_rational(up[k] * down[k], Integer(2 * k) - 1);
  equal(cs, "signed sum", sum, Rational(-static_cast<long>(2 * n)));
  return std::move(cs).finish();
}

CheckResult check_thm14_i(unsigned long n, SequenceCache* cache) {
  if (n == 0) throw std::invalid_argument("check_thm14_i: n must be positive");
  ClaimSet cs("thm14i", Params{{"n", num(n)}});
  Integer sum = 0;
  IntPolynomial poly;
  for (unsigned long k = 0; k < n; ++k) {
    sum += cache ? cache->S(k) : seq::S(k);
    poly += cache ? cache->S_poly(k) : seq::S_poly(k);
  }
  const Integer N(n);
  const Integer h = cache ? cache->h(n - 1) : seq::h(n - 1);
  cs.claim("sum S_k = n^2 h", sum == N * N * h, int_string(sum), int_string(N * N * h));
  bool poly_ok = all_coefficients_divisible(poly, N);
  cs.claim("sum S_k(x)", poly_ok, poly_ok ? "coefficients" : to_string(poly), "0", to_string(N));
  return std::move(cs).finish();
}

CheckResult check_thm14_ii(unsigned long p, SequenceCache* cache) {
  if (p <= 3 || !is_prime(p)) throw std::invalid_argument("check_thm14_ii: p must be a prime > 3");
  ClaimSet cs("thm14ii", Params{{"p", num(p)}});
  Rational a = 0;
  Rational b = 0;
  for (unsigned long k = 1; k < p; ++k) {
    const Integer s = cache ? cache->S(k) : seq::S(k);
    a += make_rational(s, Integer(k));
    b += make_rational(s, Integer(k) * k);
  }
  const Integer P(p);
  const Rational pr(P);
  const Rational rhs =
      -pr / 2 * legendre_symbol(P, Integer(3)) * bernoulli_poly_eval(static_cast<unsigned>(p - 2), Rational(1, 3));
  congruence(cs, "sum S_k/k vs p sum S_k/k^2", a, pr * b, P, 2);
  congruence(cs, "p sum S_k/k^2 vs Bernoulli", pr * b, rhs, P, 2);
  return std::move(cs).finish();
}

std::string_view to_string(Thm15Variant v) {
  switch (v) {
    case Thm15Variant::LinearPlus: return "linear+";
    case Thm15Variant::LinearMinus: return "linear-";
    case Thm15Variant::CubicPlus: return "cubic+";
    case Thm15Variant::CubicMinus: return "cubic-";
    case Thm15Variant::LinearSquare: return "linear-sq";
    case Thm15Variant::Hex: return "hex";
    case Thm15Variant::PairedCubic: return "paired-cubic";
    case Thm15Variant::PairedHex: return "paired-hex";
  }
  return "";
}

const std::vector<Thm15Variant>& all_thm15_variants() {
  static const std::vector<Thm15Variant> all{Thm15Variant::LinearPlus,   Thm15Variant::LinearMinus,
                                             Thm15Variant::CubicPlus,    Thm15Variant::CubicMinus,
                                             Thm15Variant::LinearSquare, Thm15Variant::Hex,
                                             Thm15Variant::PairedCubic,  Thm15Variant::PairedHex};
  return all;
}

std::optional<Thm15Variant> parse_thm15_variant(std::string_view text) {
  for (auto v : all_thm15_variants())
    if (to_string(v) == text) return v;
  return std::nullopt;
}

CheckResult check_thm15_i(unsigned long n, const std::vector<long>& a, std::optional<Thm15Variant> variant) {
  if (n == 0 || a.empty()) throw std::invalid_argument("check_thm15_i: need n >= 1 and a nonempty list");
  Params params{{"n", num(n)}, {"a", list(a)}};
  if (variant) params.emplace_back("variant", std::string(to_string(*variant)));
  ClaimSet cs("thm15i", params);
  const std::size_t m = a.size();
  const Integer N(n);
  std::vector<Integer> single(n, Integer(1));  // prod binom(a_i n - 1, k)
  std::vector<Integer> paired(n, Integer(1));  // prod binom(a_i n - 1, k) binom(-a_i n - 1, k)
  long sum_a = 0;
  for (long ai : a) {
    sum_a += ai;
    const Integer an = Integer(ai) * N;
    const auto up = binomial_row(an - 1, n);
    const auto down = binomial_row(-an - 1, n);
    for (unsigned long k = 0; k < n; ++k) {
      single[k] *= up[k];
      paired[k] *= up[k] * down[k];
    }
  }
  const Integer g = gcd2(Integer(sum_a - 1));
  auto run = [&](Thm15Variant v) {
    Integer s = 0;
    for (unsigned long k = 0; k < n; ++k) {
      const Integer K(k);
      const bool odd = k % 2;
      switch (v) {
        case Thm15Variant::LinearPlus: s += (2 * K + 1) * single[k]; break;
        case Thm15Variant::LinearMinus: s += pm(odd) * (2 * K + 1) * single[k]; break;
        case Thm15Variant::CubicPlus: s += (4 * K * K * K - 1) * single[k]; break;
        case Thm15Variant::CubicMinus: s += pm(odd) * (4 * K * K * K - 1) * single[k]; break;
        case Thm15Variant::LinearSquare: s += pm(odd && m % 2) * (2 * K + 1) * single[k]; break;
        case Thm15Variant::Hex: s += pm(odd && m % 2) * (3 * K * K + 3 * K + 1) * single[k]; break;
        case Thm15Variant::PairedCubic: s += pm(odd) * (4 * K * K * K - 1) * paired[k]; break;
        case Thm15Variant::PairedHex: s += (3 * K * K + 3 * K + 1) * paired[k]; break;
      }
    }
    Integer mod = N;
    switch (v) {
      case Thm15Variant::LinearSquare: s *= g; mod = N * N; break;
      case Thm15Variant::Hex: s *= 6; mod = N * N; break;
      case Thm15Variant::PairedCubic: mod = N * N; break;
      case Thm15Variant::PairedHex: s *= g; mod = N * N * N; break;
      default: break;
    }
    multiple_of(cs, to_string(v), Rational(s), mod);
  };
  if (variant) {
    run(*variant);
  } else {
    for (auto v : all_thm15_variants()) run(v);
  }
  return std::move(cs).finish();
}

namespace {

// Displayed sums of the second part of the binomial-sum theorem, in order:
// four with equal exponents (before division by n), six with exponents a, b,
// and the signed (2k+1) sum with the gcd factor.
struct Thm15iiSums {
  std::array<Rational, 10> s;
  Integer linear;
};

Thm15iiSums thm15_ii_sums(unsigned long n, unsigned long a, unsigned long b) {
  const Integer N(n);
  const auto up = binomial_row(N - 1, n);
  const auto down = binomial_row(-N - 1, n);
  const unsigned long m = a + b;
  Thm15iiSums out;
  for (auto& v : out.s) v = 0;
  out.linear = 0;
  for (unsigned long k = 0; k < n; ++k) {
    const Integer K(k);
    const Rational w(ipow(up[k], a) * ipow(down[k], a));
    const Rational v(ipow(up[k], a) * ipow(down[k], b));
    const Integer four_k2_m1 = 4 * K * K - 1;
    const Integer tri = (K + 2) * (K + 1) / 2;
    const Integer central = binomial(Integer(2 * k), k);
    const int alt = pm(k % 2);
    const int sm = pm(k % 2 && m % 2);
    const int sm1 = pm(k % 2 && (m - 1) % 2);
    out.s[0] += w / Rational(four_k2_m1);
    out.s[1] += w / Rational(tri);
    out.s[2] += alt * (1 + make_rational(2 * K, four_k2_m1)) * w;
    out.s[3] += alt * (4 - make_rational(2 * K + 3, tri)) * w;
    out.s[4] += sm * v / Rational(four_k2_m1);
    out.s[5] += sm1 * make_rational(K, four_k2_m1) * v;
    out.s[6] += sm * v / Rational(tri);
    out.s[7] += sm1 * make_rational(2 * K + 3, tri) * v;
    out.s[8] += sm * make_rational(3 * K + 1, (2 * K + 1) * central) * v;
    out.s[9] += sm1 * make_rational(5 * K + 3, (2 * K + 1) * central) * v;
    out.linear += sm * (2 * K + 1) * ipow(up[k], a) * ipow(down[k], b);
  }
  return out;
}

const std::array<const char*, 10> kThm15iiLabels{
    "1/(4k^2-1)",           "1/binom(k+2,2)",        "alt 1+2k/(4k^2-1)", "alt 4-(2k+3)/binom(k+2,2)",
    "signed 1/(4k^2-1)",    "signed k/(4k^2-1)",     "signed 1/binom(k+2,2)",
    "signed (2k+3)/binom(k+2,2)", "signed (3k+1)/((2k+1)binom(2k,k))", "signed (5k+3)/((2k+1)binom(2k,k))"};

}  // namespace

CheckResult check_thm15_ii(unsigned long n, unsigned long a, unsigned long b) {
  if (n == 0 || a == 0 || b == 0) throw std::invalid_argument("check_thm15_ii: n, a, b must be positive");
  ClaimSet cs("thm15ii", Params{{"n", num(n)}, {"a", num(a)}, {"b", num(b)}});
  const Thm15iiSums sums = thm15_ii_sums(n, a, b);
  const Integer N(n);
  for (std::size_t i = 0; i < 4; ++i) multiple_of(cs, kThm15iiLabels[i], sums.s[i], N);
  for (std::size_t i = 4; i < 10; ++i) integral(cs, kThm15iiLabels[i], sums.s[i]);
  const Integer g = gcd2(Integer(a + b - 1));
  multiple_of(cs, "signed (2k+1)", Rational(g * sums.linear), N * N);
  return std::move(cs).finish();
}

CheckResult cross_validate_thm15_ii(unsigned long n, unsigned long a, unsigned long b) {
  if (n == 0 || a == 0 || b == 0) throw std::invalid_argument("cross_validate_thm15_ii: n, a, b must be positive");
  ClaimSet cs("xval15", Params{{"n", num(n)}, {"a", num(a)}, {"b", num(b)}});
  const Thm15iiSums sums = thm15_ii_sums(n, a, b);
  const std::vector<unsigned long> ones(a, 1);
  auto kernel = [](const char* name) { return *find_kernel(name); };
  equal(cs, "f1", sums.s[0], -thm43_sum(n, kernel("f1"), ones));
  equal(cs, "f3", sums.s[1], thm43_sum(n, kernel("f3"), ones));
  equal(cs, "f2", sums.s[2], -thm43_sum(n, kernel("f2"), ones));
  equal(cs, "f4", sums.s[3], -thm43_sum(n, kernel("f4"), ones));
  const int sm = pm((a + b) % 2);  // (-1)^m
  equal(cs, "f5", -2 * sm * sums.s[4], thm44_sum(n, a, b, kernel("f5")));
  equal(cs, "f6", -4 * sm * sums.s[5], thm44_sum(n, a, b, kernel("f6")));
  equal(cs, "f7", -sm * sums.s[6], thm44_sum(n, a, b, kernel("f7")));
  equal(cs, "f8", -sm * sums.s[7], thm44_sum(n, a, b, kernel("f8")));
  // f9, f10 at k = 0 use binom(-1,0) = 1, so the k = 0 kernel difference
  // exceeds the displayed summand by (-1)^m (the k = 0 weight is 1)
  equal(cs, "f9", -sm * sums.s[8] + sm, thm44_sum(n, a, b, kernel("f9")));
  equal(cs, "f10", -sm * sums.s[9] + sm, thm44_sum(n, a, b, kernel("f10")));
  cs.note("f9 and f10 include the k = 0 boundary term (-1)^m");
  return std::move(cs).finish();
}

CheckResult check_remark13(unsigned long n) {
  if (n == 0) throw std::invalid_argument("check_remark13: n must be positive");
  ClaimSet cs("rem13", Params{{"n", num(n)}});
  const Integer N(n);
  const auto up = binomial_row(N - 1, n);
  const auto down = binomial_row(-N - 1, n);
  Rational sum = 0;
  for (unsigned long k = 0; k < n; ++k) sum += make_rational(up[k] * down[k], Integer(4 * k * k) - 1);
  equal(cs, "sum from k=0", sum, Rational(-N));
  const auto up1 = binomial_row(N, n + 1);
  const auto down1 = binomial_row(-N, n + 1);
  Rational half = 0;
  for (unsigned long k = 0; k <= n; ++k) half += make_rational(up1[k] * down1[k], Integer(2 * k) - 1);
  half /= 2;
  equal(cs, "half signed sum", half, Rational(-N));
  cs.note("first sum starts at k = 0; its k = 0 term is -1");
  return std::move(cs).finish();
}

CheckResult check_cor11(unsigned long n, SequenceCache* cache) {
  if (n == 0) throw std::invalid_argument("check_cor11: n must be positive");
  ClaimSet cs("cor11", Params{{"n", num(n)}});
  Integer t = 0, T = 0, tp = 0, tm = 0;
  for (unsigned long k = 0; k < n; ++k) {
    const unsigned long w = 2 * k + 1;
    t += w * (cache ? cache->t(k) : seq::t_seq(k));
    T += w * (cache ? cache->T(k) : seq::T_seq(k));
    tp += w * (cache ? cache->T_plus(k) : seq::T_plus(k));
    tm += w * (cache ? cache->T_minus(k) : seq::T_minus(k));
  }
  const Integer N(n);
  const Integer n3 = N * N * N;
  multiple_of(cs, "t", Rational(t), n3);
  multiple_of(cs, "T", Rational(T), n3);
  multiple_of(cs, "T+", Rational(tp), n3 * N);
  multiple_of(cs, "T-", Rational(tm), n3);
  return std::move(cs).finish();
}

CheckResult check_lemma22(unsigned long n) {
  ClaimSet cs("lemma22", Params{{"n", num(n)}});
  // c_k = binom(2k,k)^2/(2k-1) = binom(2k,k) * (binom(2k,k)/(2k-1)), an integer
  std::vector<Integer> coeff(n + 2);
  for (unsigned long k = 0; k <= n; ++k) {
    const Integer K(k);
    const Integer c = binomial(Integer(2 * k), k) * central_binomial_over_2k_minus_1(k);
    coeff[n - k] += (16 * K * K - 4) * c;
    coeff[n - k + 1] -= K * K * c;
  }
  const IntPolynomial lhs(std::move(coeff));
  const Integer b = binomial(Integer(2 * n + 1), n);
  const Rational rhs = make_rational(4 * Integer(n + 1) * (n + 1) * b * b, Integer(2 * n + 1));
  const bool ok = rhs.get_den() == 1 && lhs == IntPolynomial::constant(Integer(rhs.get_num()));
  cs.claim("", ok, clip(to_string(lhs)), short_string(rhs));
  return std::move(cs).finish();
}

CheckResult check_lemma23(unsigned long n, unsigned long k) {
  if (k == 0) throw std::invalid_argument("check_lemma23: k must be positive");
  ClaimSet cs("lemma23", Params{{"n", num(n)}, {"k", num(k)}});
  const Integer N(n);
  Rational lhs = make_rational(binomial(N, k) * binomial(-N, k), binomial(Integer(2 * k - 1), k));
  if (k % 2) lhs = -lhs;
  const Integer top = binomial(N + k, 2 * k);
  const Rational middle = make_rational(2 * N * top, N + k);
  const Rational right(top + binomial(N + k - 1, 2 * k));
  equal(cs, "left vs middle", lhs, middle);
  equal(cs, "middle vs right", middle, right);
  return std::move(cs).finish();
}

namespace {

Integer gcd_of(const std::vector<long>& a, const std::vector<unsigned long>& b, unsigned long n) {
  Integer g(n);
  for (long v : a) {
    const Integer x(v);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  for (unsigned long v : b) {
    const Integer x(v);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  return g;
}

// prod binom(a_i - 1, b_i + k) for k = 0..n-1.
std::vector<Integer> shifted_products(unsigned long n, const std::vector<long>& a, const std::vector<unsigned long>& b) {
  std::vector<Integer> out(n, Integer(1));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (unsigned long k = 0; k < n; ++k) out[k] *= binomial(Integer(a[i] - 1), b[i] + k);
  return out;
}

// prod binom(a_i n - 1, k) binom(-a_i n - 1, k) for k = 0..n-1.
template <class Int>
std::vector<Integer> paired_products(unsigned long n, const std::vector<Int>& a) {
  std::vector<Integer> out(n, Integer(1));
  for (Int ai : a) {
    const Integer an = Integer(static_cast<long>(ai)) * n;
    const auto up = binomial_row(an - 1, n);
    const auto down = binomial_row(-an - 1, n);
    for (unsigned long k = 0; k < n; ++k) out[k] *= up[k] * down[k];
  }
  return out;
}

// f(k) must be an integer divisible by k^power for k = 0..n.
void require_power_divisible(const KernelSpec& f, unsigned long n, long m, unsigned power, const char* who) {
  for (unsigned long k = 0; k <= n; ++k) {
    const Rational v = f(k, m);
    if (!divisible(v, ipow(Integer(k), power)))
      throw std::invalid_argument(std::string(who) + ": kernel " + f.name + " violates k^" + std::to_string(power) +
                                  " | f(k) at k = " + std::to_string(k));
  }
}

bool divides_kernel_power(const KernelSpec& f, unsigned long n, long m, unsigned power) {
  for (unsigned long k = 0; k <= n; ++k)
    if (!divisible(f(k, m), ipow(Integer(k), power))) return false;
  return true;
}

// binom(2k-1,k) f(k) integral (and divisible by k when over_k) for k = 0..n.
void require_central(const KernelSpec& f, unsigned long n, long m, bool over_k, const char* who) {
  for (unsigned long k = 0; k <= n; ++k) {
    const Rational v = f(k, m) * Rational(binomial(Integer(2 * k) - 1, k));
    const bool ok = over_k ? divisible(v, Integer(k)) : v.get_den() == 1;
    if (!ok)
      throw std::invalid_argument(std::string(who) + ": kernel " + f.name + " violates binom(2k-1,k) f(k) in " +
                                  (over_k ? "kZ" : "Z") + " at k = " + std::to_string(k));
  }
}

}  // namespace

CheckResult check_thm41(unsigned long n, const KernelSpec& f, const std::vector<long>& a,
                        const std::vector<unsigned long>& b) {
  if (n == 0 || a.empty() || a.size() != b.size())
    throw std::invalid_argument("check_thm41: need n >= 1 and equal-length nonempty a, b");
  const long m = static_cast<long>(a.size());
  require_power_divisible(f, n, m, 1, "check_thm41");
  ClaimSet cs("thm41", Params{{"n", num(n)}, {"kernel", f.name}, {"a", list(a)}, {"b", list(b)}});
  const Integer d = gcd_of(a, b, n);
  const auto prod = shifted_products(n, a, b);
  const int sm = pm(m % 2);
  Rational lhs = 0;
  Rational tail = 0;
  for (unsigned long k = 0; k < n; ++k) {
    const Rational fk = f(k, m);
    lhs += (f(k + 1, m) - sm * fk) * prod[k];
    if (k > 0) tail += fk / Rational(static_cast<long>(k)) * prod[k];
  }
  multiple_of(cs, "mod d", lhs, d);
  if (divides_kernel_power(f, n, m, 2)) {
    long sum_a = 0;
    for (long v : a) sum_a += v;
    const Rational rhs = sm * Rational(sum_a) * tail;
    cs.claim("mod d^2", divisible(lhs - rhs, d * d), short_string(lhs), short_string(rhs), int_string(d * d));
  } else {
    cs.note("k^2 does not divide f(k); square-modulus part not applicable");
  }
  return std::move(cs).finish();
}

CheckResult check_cor41(unsigned long n, const std::vector<long>& a, const std::vector<unsigned long>& b) {
  if (n == 0 || a.empty() || a.size() != b.size())
    throw std::invalid_argument("check_cor41: need n >= 1 and equal-length nonempty a, b");
  ClaimSet cs("cor41", Params{{"n", num(n)}, {"a", list(a)}, {"b", list(b)}});
  const Integer d = gcd_of(a, b, n);
  const auto prod = shifted_products(n, a, b);
  const std::size_t m = a.size();
  Integer s_alt = 0, lin_p = 0, lin_m = 0, cub_p = 0, cub_m = 0, lin_alt = 0, hex_alt = 0;
  for (unsigned long k = 0; k < n; ++k) {
    const Integer K(k);
    const int alt = pm(k % 2);
    const int sm = pm(k % 2 && m % 2);
    const Integer lin = (2 * K + 1) * prod[k];
    const Integer cub = (4 * K * K * K - 1) * prod[k];
    s_alt += sm * prod[k];
    lin_p += lin;
    lin_m += alt * lin;
    cub_p += cub;
    cub_m += alt * cub;
    lin_alt += sm * lin;
    hex_alt += sm * (3 * K * K + 3 * K + 1) * prod[k];
  }
  Integer sum_a = 0;
  for (long v : a) sum_a += v;
  const Integer g = gcd2(Integer(sum_a / d) - 1);
  multiple_of(cs, "signed", Rational(s_alt), d);
  multiple_of(cs, "linear+", Rational(lin_p), d);
  multiple_of(cs, "linear-", Rational(lin_m), d);
  multiple_of(cs, "cubic+", Rational(cub_p), d);
  multiple_of(cs, "cubic-", Rational(cub_m), d);
  multiple_of(cs, "linear-sq", Rational(g * lin_alt), d * d);
  multiple_of(cs, "hex", Rational(6 * hex_alt), d * d);
  return std::move(cs).finish();
}

CheckResult check_thm42(unsigned long n, const KernelSpec& f, const std::vector<long>& a) {
  if (n == 0 || a.empty()) throw std::invalid_argument("check_thm42: need n >= 1 and a nonempty list");
  const long m = static_cast<long>(a.size());
  require_power_divisible(f, n, m, 3, "check_thm42");
  ClaimSet cs("thm42", Params{{"n", num(n)}, {"kernel", f.name}, {"a", list(a)}});
  const auto prod = paired_products(n, a);
  Rational lhs = 0;
  Rational tail = 0;
  for (unsigned long k = 0; k < n; ++k) {
    const Rational fk = f(k, m);
    lhs += (f(k + 1, m) - fk) * prod[k];
    if (k > 0) tail += fk / Rational(static_cast<long>(k * k)) * prod[k];
  }
  Integer sq = 0;
  for (long v : a) sq += Integer(v) * v;
  const Integer N(n);
  const Rational rhs = Rational(N * N * sq) * tail;
  const Integer n3 = N * N * N;
  cs.claim("", divisible(lhs - rhs, n3), short_string(lhs), short_string(rhs), to_string(n3));
  return std::move(cs).finish();
}

Rational thm43_sum(unsigned long n, const KernelSpec& f, const std::vector<unsigned long>& a) {
  const long m = static_cast<long>(a.size());
  const auto prod = paired_products(n, a);
  Rational s = 0;
  for (unsigned long k = 0; k < n; ++k) s += (f(k + 1, m) - f(k, m)) * prod[k];
  return s;
}

CheckResult check_thm43(unsigned long n, const KernelSpec& f, const std::vector<unsigned long>& a, Strength strength) {
  if (n == 0 || a.empty() || *std::min_element(a.begin(), a.end()) != 1)
    throw std::invalid_argument("check_thm43: need n >= 1 and positive a with minimum 1");
  const bool over_n = strength == Strength::OverN;
  require_central(f, n, static_cast<long>(a.size()), over_n, "check_thm43");
  ClaimSet cs("thm43", Params{{"n", num(n)},
                              {"kernel", f.name},
                              {"a", list(a)},
                              {"strength", over_n ? "over_n" : "integral"}});
  const Integer N(n);
  // k binom(n,k) binom(-n,k) / binom(2k-1,k) divisible by n, k = 0..n
  const auto up = binomial_row(N, n + 1);
  const auto down = binomial_row(-N, n + 1);
  for (unsigned long k = 0; k <= n; ++k) {
    const Rational v = make_rational(Integer(k) * up[k] * down[k], binomial(Integer(2 * k) - 1, k));
    multiple_of(cs, "central quotient k=" + num(k), v, N);
    if (!cs.ok()) return std::move(cs).finish();
  }
  const Rational s = thm43_sum(n, f, a);
  if (over_n) multiple_of(cs, "sum", s, N);
  else integral(cs, "sum", s);
  return std::move(cs).finish();
}

Rational thm44_sum(unsigned long n, unsigned long a, unsigned long b, const KernelSpec& f) {
  const Integer N(n);
  const auto up = binomial_row(N - 1, n);
  const auto down = binomial_row(-N - 1, n);
  const long m = static_cast<long>(a + b);
  const int sm = pm(m % 2);
  Rational s = 0;
  for (unsigned long k = 0; k < n; ++k) s += (f(k + 1, m) - sm * f(k, m)) * Rational(ipow(up[k], a) * ipow(down[k], b));
  return s;
}

CheckResult check_thm44(unsigned long n, unsigned long a, unsigned long b, const KernelSpec& f) {
  if (n == 0 || a == 0 || b == 0) throw std::invalid_argument("check_thm44: n, a, b must be positive");
  require_central(f, n, static_cast<long>(a + b), false, "check_thm44");
  ClaimSet cs("thm44", Params{{"n", num(n)}, {"a", num(a)}, {"b", num(b)}, {"kernel", f.name}});
  integral(cs, "", thm44_sum(n, a, b, f));
  return std::move(cs).finish();
}

CheckResult check_lemma42(unsigned long n, const std::vector<Rational>& a_seq, std::string_view label) {
  if (n == 0 || a_seq.size() < n) throw std::invalid_argument("check_lemma42: need n >= 1 and n sequence entries");
  ClaimSet cs("lemma42", Params{{"n", num(n)}, {"sequence", std::string(label)}});
  // w(j,k) = binom(j,k)^2 binom(j+k,k)^2
  auto weight = [](unsigned long j, unsigned long k) {
    const Integer v = binomial(Integer(j), k) * binomial(Integer(j + k), k);
    return Rational(v * v);
  };
  Rational lhs = 0;
  for (unsigned long j = 0; j < n; ++j) {
    Rational tilde = 0;
    for (unsigned long k = 0; k <= j; ++k) tilde += weight(j, k) * a_seq[k];
    lhs += static_cast<long>(2 * j + 1) * tilde;
  }
  lhs /= Rational(Integer(n) * n);
  Rational rhs = 0;
  for (unsigned long k = 0; k < n; ++k) {
    const Integer v = binomial(Integer(n - 1), k) * binomial(Integer(n + k), k);
    rhs += a_seq[k] / Rational(static_cast<long>(2 * k + 1)) * Rational(v * v);
  }
  equal(cs, "", lhs, rhs);
  return std::move(cs).finish();
}

CheckResult check_remark52(unsigned long n, SequenceCache* cache) {
  if (n == 0) throw std::invalid_argument("check_remark52: n must be positive");
  ClaimSet cs("rem52", Params{{"n", num(n)}});
  IntPolynomial acc;
  for (unsigned long k = 0; k < n; ++k) acc += (cache ? cache->R_poly(k) : seq::R_poly(k)) * Integer(2 * k + 1);
  RationalPolynomial lhs = to_rational(acc) * make_rational(Integer(3), Integer(n));
  std::vector<Rational> rc(n);
  const Integer N(n);
  for (unsigned long k = 0; k < n; ++k) {
    const Integer K(k);
    const Integer c = binomial(N + k, 2 * k) * binomial(Integer(2 * k), k) * (N - k);
    rc[k] = Rational(c) * (make_rational(Integer(2), 2 * K - 1) - make_rational(Integer(1), K + 1));
  }
  const RationalPolynomial rhs(std::move(rc));
  const bool same = lhs == rhs;
  cs.claim("identity", same, same ? "equal" : to_string(lhs), same ? "equal" : to_string(rhs));
  const bool integral_rhs = to_integer(rhs).has_value();
  cs.claim("integral", integral_rhs, integral_rhs ? "Z[x]" : to_string(rhs), "Z[x]");
  return std::move(cs).finish();
}

CheckResult check_remark53(unsigned long n, SequenceCache* cache) {
  if (n == 0) throw std::invalid_argument("check_remark53: n must be positive");
  ClaimSet cs("rem53", Params{{"n", num(n)}});
  Integer plus = 0, minus = 0;
  for (unsigned long k = 0; k < n; ++k) {
    plus += cache ? cache->S_plus(k) : seq::S_cplus(k);
    minus += cache ? cache->S_minus(k) : seq::S_cminus(k);
  }
  multiple_of(cs, "S+", Rational(plus), Integer(n));
  multiple_of(cs, "S-", Rational(minus), Integer(n));
  return std::move(cs).finish();
}

CheckResult check_conj51(unsigned long p) {
  require_odd_prime(p, "check_conj51");
  if (p % 4 != 3) throw std::invalid_argument("check_conj51: p must be 3 mod 4");
  ClaimSet cs("conj51", Params{{"p", num(p)}});
  const Integer P(p);
  const int chi2 = legendre_symbol(Integer(2), P);
  const Rational c(binomial(Integer((p + 1) / 2), (p + 1) / 4));
  const Rational rhs1 = -chi2 * Rational(P + 1) / Rational(ipow(Integer(2), p - 1) + 1) * c;
  congruence(cs, "squared", seq::ratio_sum(p - 1, 0, Integer(8)), rhs1, P, 2);
  const Rational rhs2 = Rational(P) + chi2 * Rational(2 * P) / c;
  congruence(cs, "shifted", 3 * seq::ratio_sum(p - 1, 1, Integer(8)), rhs2, P, 2);
  return std::move(cs).finish();
}

namespace {

constexpr unsigned long kRootMonotoneLimit = 100;

struct PowerTerm {
  const Integer* base;
  unsigned long exponent;
};

double log_of(const Integer& v) {
  long e = 0;
  const double d = mpz_get_d_2exp(&e, v.get_mpz_t());
  return std::log(d) + static_cast<double>(e) * std::log(2.0);
}

// Sign of prod lhs - prod rhs for positive bases. A double estimate of the
// log difference decides unless it lies within a generous error bound; then
// the powers are formed exactly.
int compare_power_products(const std::vector<PowerTerm>& lhs, const std::vector<PowerTerm>& rhs, double& log_l,
                           double& log_r) {
  double err = 0;
  auto total = [&err](const std::vector<PowerTerm>& side) {
    double s = 0;
    for (const auto& t : side) {
      const double l = log_of(*t.base);
      s += static_cast<double>(t.exponent) * l;
      err += static_cast<double>(t.exponent) * (1 + std::fabs(l));
    }
    return s;
  };
  log_l = total(lhs);
  log_r = total(rhs);
  const double diff = log_l - log_r;
  if (std::fabs(diff) > 1e-12 * err + 1e-9) return diff > 0 ? 1 : -1;
  auto exact = [](const std::vector<PowerTerm>& side) {
    Integer v = 1;
    for (const auto& t : side) v *= ipow(*t.base, t.exponent);
    return v;
  };
  return cmp(exact(lhs), exact(rhs));
}

std::string log_text(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "log %.6f", v);
  return buf;
}

// Claims of the growth conjecture for one sequence at index n.
void growth_claims(ClaimSet& cs, const char* name, seq::SequenceMemo& v, unsigned long n, unsigned long ratio_from,
                   unsigned long root_from, const Integer& bound_int, bool sqrt_bound) {
  const std::string tag(name);
  if (n >= ratio_from) {
    const Integer& a = v(n);
    const Integer& b = v(n + 1);
    const Integer& c = v(n + 2);
    cs.claim(tag + " ratio increasing", c * a > b * b, int_string(c * a), int_string(b * b));
    if (sqrt_bound) {
      // b/a < 3 + 2 sqrt 2  <=>  b - 3a <= 0 or (b - 3a)^2 < 8 a^2
      const Integer diff = b - 3 * a;
      const bool ok = diff <= 0 || diff * diff < 8 * a * a;
      cs.claim(tag + " ratio below 3+2sqrt2", ok, int_string(diff * diff), int_string(8 * a * a));
    } else {
      cs.claim(tag + " ratio below " + to_string(bound_int), b < bound_int * a, short_string(b),
               int_string(bound_int * a));
    }
  }
  if (n >= root_from) {
    const Integer& a = v(n);
    const Integer& b = v(n + 1);
    double l = 0, r = 0;
    // b^(1/(n+1)) > a^(1/n)
    const int up = compare_power_products({{&b, n}}, {{&a, n + 1}}, l, r);
    cs.claim(tag + " root ratio above 1", up > 0, log_text(l), log_text(r));
    if (n <= kRootMonotoneLimit) {
      // c^(1/(n+2)) / b^(1/(n+1)) < b^(1/(n+1)) / a^(1/n)
      const Integer& c = v(n + 2);
      const int dec = compare_power_products({{&c, n * (n + 1)}, {&a, (n + 1) * (n + 2)}}, {{&b, 2 * n * (n + 2)}}, l, r);
      cs.claim(tag + " root ratio decreasing", dec < 0, log_text(l), log_text(r));
    }
  }
}

}  // namespace

CheckResult check_conj52(unsigned long n, SequenceCache* cache) {
  if (n == 0) throw std::invalid_argument("check_conj52: n must be positive");
  SequenceCache local;
  SequenceCache& c = cache ? *cache : local;
  ClaimSet cs("conj52", Params{{"n", num(n)}});
  growth_claims(cs, "R", c.R, n, 3, 5, Integer(0), true);
  growth_claims(cs, "S", c.S, n, 3, 1, Integer(9), false);
  cs.note("finite surrogate: monotonicity and exact bounds, limits not asserted");
  return std::move(cs).finish();
}

namespace {

using Fp = std::vector<std::uint64_t>;  // low-to-high, trimmed

void trim(Fp& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t r = 1, e = p - 2;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

Fp fp_mod(Fp a, const Fp& m, std::uint64_t p) {
  const std::size_t dm = m.size() - 1;
  const std::uint64_t li = inv_mod(m.back(), p);
  trim(a);
  while (a.size() > dm) {
    const std::uint64_t f = a.back() * li % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t j = 0; j <= dm; ++j) a[shift + j] = (a[shift + j] + (p - f) * m[j]) % p;
    trim(a);
  }
  return a;
}

Fp fp_mulmod(const Fp& a, const Fp& b, const Fp& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Fp out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  return fp_mod(std::move(out), m, p);
}

Fp fp_gcd(Fp a, Fp b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Fp r = fp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Fp fp_powmod(Fp base, std::uint64_t e, const Fp& m, std::uint64_t p) {
  Fp r{1};
  r = fp_mod(r, m, p);
  base = fp_mod(std::move(base), m, p);
  while (e) {
    if (e & 1) r = fp_mulmod(r, base, m, p);
    e >>= 1;
    if (e) base = fp_mulmod(base, base, m, p);
  }
  return r;
}

}  // namespace

bool irreducible_mod_p(const IntPolynomial& f, unsigned long p) {
  if (p < 2 || !is_prime(p)) throw std::invalid_argument("irreducible_mod_p: p must be prime");
  if (p >= (1ul << 31)) throw std::invalid_argument("irreducible_mod_p: p too large");
  if (f.is_zero()) return false;
  const Integer P(p);
  if (mpz_divisible_p(f.leading().get_mpz_t(), P.get_mpz_t()))
    throw std::invalid_argument("irreducible_mod_p: p divides the leading coefficient");
  Fp g;
  for (const auto& c : f.coefficients()) g.push_back(mod_floor(c, P).get_ui());
  const std::size_t deg = g.size() - 1;
  if (deg == 0) return false;
  if (deg == 1) return true;
  Fp deriv;
  for (std::size_t i = 1; i <= deg; ++i) deriv.push_back(g[i] * (i % p) % p);
  trim(deriv);
  if (deriv.empty() || fp_gcd(g, deriv, p).size() > 1) return false;
  const Fp x{0, 1};
  Fp h = fp_mod(x, g, p);
  for (std::size_t i = 1; i <= deg / 2; ++i) {
    h = fp_powmod(h, p, g, p);
    Fp t = h;
    if (t.size() < 2) t.resize(2, 0);
    t[1] = (t[1] + p - 1) % p;
    trim(t);
    if (fp_gcd(g, t, p).size() > 1) return false;
  }
  return true;
}

CheckResult conj53_witness(unsigned long n, const std::vector<unsigned long>& p_candidates) {
  if (n == 0) throw std::invalid_argument("conj53_witness: n must be positive");
  CheckResult res;
  res.family = "conj53";
  res.params = {{"n", num(n)}};
  const std::array<std::pair<const char*, IntPolynomial>, 2> polys{
      std::pair{"R", seq::R_poly(n)}, std::pair{"S", seq::S_poly(n)}};
  std::vector<std::string> found;
  bool all = true;
  for (const auto& [name, f] : polys) {
    std::string witness;
    if (f.degree() <= 1) {
      witness = "degree 1";
    } else {
      for (unsigned long p : p_candidates) {
        if (!is_prime(p) || mpz_divisible_ui_p(f.leading().get_mpz_t(), p)) continue;
        if (irreducible_mod_p(f, p)) {
          witness = "p=" + num(p);
          break;
        }
      }
    }
    if (witness.empty()) {
      all = false;
      found.push_back(std::string(name) + ": none");
    } else {
      found.push_back(std::string(name) + ": " + witness);
    }
  }
  std::string joined;
  for (const auto& s : found) joined += (joined.empty() ? "" : "; ") + s;
  res.status = all ? Status::Pass : Status::Inconclusive;
  res.lhs = joined;
  res.rhs = "irreducible mod p";
  if (!all) res.note = "no witness prime among " + num(static_cast<unsigned long>(p_candidates.size())) + " candidates";
  return res;
}

CheckResult check_conj54(unsigned long n, SequenceCache* cache) {
  if (n == 0) throw std::invalid_argument("check_conj54: n must be positive");
  ClaimSet cs("conj54", Params{{"n", num(n)}});
  Integer sq = 0, wsq = 0;
  for (unsigned long k = 0; k < n; ++k) {
    const Integer r = cache ? cache->R(k) : seq::R(k);
    sq += r * r;
    wsq += (2 * k + 1) * r * r;
  }
  const Integer N(n);
  multiple_of(cs, "3 sum R_k^2", Rational(3 * sq), N);
  multiple_of(cs, "sum (2k+1) R_k^2", Rational(wsq), N);
  if (n > 2 && is_prime(n)) {
    const int chi = legendre_symbol(Integer(-1), N);
    congruence(cs, "prime sum R_k^2", Rational(sq), Rational(N) / 3 * (11 - 4 * chi), N, 2);
    congruence(cs, "prime sum (2k+1) R_k^2", Rational(wsq), Rational(4 * N * chi - N * N), N, 3);
  }
  return std::move(cs).finish();
}

CheckResult check_conj55(unsigned long n, SequenceCache* cache) {
  if (n == 0) throw std::invalid_argument("check_conj55: n must be positive");
  ClaimSet cs("conj55", Params{{"n", num(n)}});
  Integer sum = 0;
  for (unsigned long k = 0; k < n; ++k) sum += k * (cache ? cache->S(k) : seq::S(k));
  const Integer N(n);
  multiple_of(cs, "4 sum k S_k", Rational(4 * sum), N * N);
  if (is_prime(n)) {
    const int chi = legendre_symbol(N, Integer(3));
    congruence(cs, "prime sum k S_k", Rational(sum), make_rational(N * N, Integer(8)) * (5 - 9 * chi), N, 3);
  }
  return std::move(cs).finish();
}

CheckResult check_conj56(unsigned long n, SequenceCache* cache) {
  if (n == 0) throw std::invalid_argument("check_conj56: n must be positive");
  ClaimSet cs("conj56", Params{{"n", num(n)}});
  Integer s = 0, plus = 0, minus = 0;
  for (unsigned long k = 0; k < n; ++k) {
    s += cache ? cache->s(k) : seq::s_small(k);
    plus += cache ? cache->S_plus(k) : seq::S_cplus(k);
    minus += cache ? cache->S_minus(k) : seq::S_cminus(k);
  }
  const Integer n2 = Integer(n) * n;
  multiple_of(cs, "s", Rational(s), n2);
  multiple_of(cs, "S+", Rational(plus), n2);
  multiple_of(cs, "S-", Rational(minus), n2);
  return std::move(cs).finish();
}

CheckResult check_conj58i(unsigned long m, unsigned long n) {
  if (m == 0 || n == 0) throw std::invalid_argument("check_conj58i: m and n must be positive");
  ClaimSet cs("conj58i", Params{{"m", num(m)}, {"n", num(n)}});
  const Integer N(n);
  IntPolynomial total;
  for (unsigned long k = 0; k < n; ++k) total += seq::S_m_poly(m, k);
  const bool poly_ok = all_coefficients_divisible(total, N);
  cs.claim("polynomial", poly_ok, poly_ok ? "coefficients" : to_string(total), "0", to_string(N));
  for (unsigned long k = 0; k < n && cs.ok(); ++k) {
    Integer top, kf;
    mpz_fac_ui(top.get_mpz_t(), k * m + 1);
    mpz_fac_ui(kf.get_mpz_t(), k);
    const Integer factor = top / ipow(kf, m);
    Integer inner = 0;
    for (unsigned long h = k; h < n; ++h) inner += ipow(binomial(Integer(h), k), m);
    multiple_of(cs, "k=" + num(k), Rational(factor * inner), N);
  }
  return std::move(cs).finish();
}

std::vector<CheckResult> scan_conjectures(std::string_view selector, const ScanRange& range) {
  std::vector<CheckResult> out;
  SequenceCache cache;
  if (selector == "conj51") {
    for (unsigned long p : primes_below(range.max_p))
      if (p % 4 == 3) out.push_back(check_conj51(p));
  } else if (selector == "conj52") {
    for (unsigned long n = 1; n <= range.max_n; ++n) out.push_back(check_conj52(n, &cache));
  } else if (selector == "conj53") {
    const auto cands = primes_below(range.max_p);
    for (unsigned long n = 1; n <= range.max_n; ++n) out.push_back(conj53_witness(n, cands));
  } else if (selector == "conj54") {
    for (unsigned long n = 1; n <= range.max_n; ++n) out.push_back(check_conj54(n, &cache));
  } else if (selector == "conj55") {
    for (unsigned long n = 1; n <= range.max_n; ++n) out.push_back(check_conj55(n, &cache));
  } else if (selector == "conj56") {
    for (unsigned long n = 1; n <= range.max_n; ++n) out.push_back(check_conj56(n, &cache));
  } else if (selector == "conj57") {
    for (unsigned long n = 1; n <= range.max_n; ++n) out.push_back(q::check_conj57(n));
  } else if (selector == "conj58") {
    for (unsigned long m = 1; m <= range.max_m; ++m)
      for (unsigned long n = 1; n <= range.max_n; ++n) out.push_back(q::check_conj58_q(m, n));
  } else if (selector == "conj58i") {
    for (unsigned long m = 1; m <= range.max_m; ++m)
      for (unsigned long n = 1; n <= range.max_n; ++n) out.push_back(check_conj58i(m, n));
  } else {
    throw std::invalid_argument("scan_conjectures: unknown selector " + std::string(selector));
  }
  return out;
}

}  // namespace rscheck::verify
