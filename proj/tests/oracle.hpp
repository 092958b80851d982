#pragma once

// Naive reference implementations used as test oracles. They share no code
// with the library beyond the GMP scalar types.

#include <gmpxx.h>

#include <map>
#include <vector>

namespace oracle {

using Z = mpz_class;
using Q = mpq_class;

inline Z factorial(unsigned long n) {
  Z r = 1;
  for (unsigned long i = 2; i <= n; ++i) r *= i;
  return r;
}

// prod_{j<k} (n - j) / k!, through rationals.
inline Z binom(const Z& n, unsigned long k) {
  Q r = 1;
  for (unsigned long j = 0; j < k; ++j) r *= Q(n - j);
  r /= Q(factorial(k));
  r.canonicalize();
  return r.get_num();
}

inline Z binom(long n, unsigned long k) { return binom(Z(n), k); }

inline Q frac(const Z& a, const Z& b) {
  Q r(a, b);
  r.canonicalize();
  return r;
}

inline Z as_integer(const Q& q) { return q.get_num(); }

inline Z R(unsigned long n) {
  Q s = 0;
  for (unsigned long k = 0; k <= n; ++k) s += frac(binom(Z(n), k) * binom(Z(n + k), k), Z(2 * k) - 1);
  return as_integer(s);
}

// Second closed form: sum binom(n+k,2k) binom(2k,k)/(2k-1).
inline Z R_alt(unsigned long n) {
  Q s = 0;
  for (unsigned long k = 0; k <= n; ++k) s += frac(binom(Z(n + k), 2 * k) * binom(Z(2 * k), k), Z(2 * k) - 1);
  return as_integer(s);
}

inline std::vector<Z> R_coeffs(unsigned long n) {
  std::vector<Z> c;
  for (unsigned long k = 0; k <= n; ++k) c.push_back(as_integer(frac(binom(Z(n), k) * binom(Z(n + k), k), Z(2 * k) - 1)));
  return c;
}

inline Z S(unsigned long n) {
  Z s = 0;
  for (unsigned long k = 0; k <= n; ++k) {
    const Z b = binom(Z(n), k);
    s += b * b * binom(Z(2 * k), k) * (2 * k + 1);
  }
  return s;
}

inline std::vector<Z> S_coeffs(unsigned long n) {
  std::vector<Z> c;
  for (unsigned long k = 0; k <= n; ++k) {
    const Z b = binom(Z(n), k);
    c.push_back(b * b * binom(Z(2 * k), k) * (2 * k + 1));
  }
  return c;
}

inline Z schroder(unsigned long n) {
  Q s = 0;
  for (unsigned long k = 0; k <= n; ++k) s += frac(binom(Z(n), k) * binom(Z(n + k), k), Z(k + 1));
  return as_integer(s);
}

inline Z catalan(unsigned long k) { return binom(Z(2 * k), k) / (k + 1); }

// Akiyama-Tanigawa, then the sign of B_1 switched to -1/2.
inline Q bernoulli(unsigned m) {
  std::vector<Q> a(m + 1);
  for (unsigned i = 0; i <= m; ++i) {
    a[i] = Q(1, i + 1);
    for (unsigned j = i; j >= 1; --j) {
      a[j - 1] = Q(j) * (a[j - 1] - a[j]);
      a[j - 1].canonicalize();
    }
  }
  return m == 1 ? -a[0] : a[0];
}

inline Q power(const Q& x, unsigned long e) {
  Q r = 1;
  for (unsigned long i = 0; i < e; ++i) r *= x;
  return r;
}

// Polynomials as coefficient vectors, trimmed.
using Poly = std::vector<Z>;

inline Poly trim(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

inline Poly add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return trim(r);
}

inline Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return trim(r);
}

inline Poly shift(const Poly& a, std::size_t k) {
  if (a.empty()) return {};
  Poly r(k, Z(0));
  r.insert(r.end(), a.begin(), a.end());
  return r;
}

// Gaussian binomial by the q-Pascal rule [n,k] = [n-1,k-1] + q^k [n-1,k].
inline Poly q_binom(unsigned long n, unsigned long k) {
  static std::map<std::pair<unsigned long, unsigned long>, Poly> memo;
  if (k > n) return {};
  if (k == 0 || k == n) return {Z(1)};
  const auto key = std::make_pair(n, k);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  Poly r = add(q_binom(n - 1, k - 1), shift(q_binom(n - 1, k), k));
  memo[key] = r;
  return r;
}

inline Poly q_int(unsigned long n) { return Poly(n, Z(1)); }

// Value of p at q = 1.
inline Z at_one(const Poly& p) {
  Z s = 0;
  for (const auto& c : p) s += c;
  return s;
}

// Remainder of a modulo a monic polynomial m.
inline Poly rem_monic(Poly a, const Poly& m) {
  const std::size_t dm = m.size() - 1;
  a = trim(a);
  while (a.size() > dm && !a.empty()) {
    const Z f = a.back();
    const std::size_t s = a.size() - 1 - dm;
    for (std::size_t j = 0; j <= dm; ++j) a[s + j] -= f * m[j];
    a = trim(a);
  }
  return a;
}

inline int mobius(unsigned long n) {
  int mu = 1;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

// Phi_d from prod_{e|d} (q^e - 1)^{mu(d/e)}: multiply the positive factors,
// then divide by the negative ones (monic up to sign, exact).
inline Poly cyclotomic(unsigned long d) {
  Poly num{Z(1)}, den{Z(1)};
  for (unsigned long e = 1; e <= d; ++e) {
    if (d % e) continue;
    Poly f(e + 1, Z(0));
    f[0] = -1;
    f[e] = 1;
    const int mu = mobius(d / e);
    if (mu == 1) num = mul(num, f);
    if (mu == -1) den = mul(den, f);
  }
  // long division num / den, den monic
  Poly quo(num.size() - den.size() + 1, Z(0));
  Poly r = num;
  while (r.size() >= den.size() && !r.empty()) {
    const std::size_t s = r.size() - den.size();
    const Z f = r.back();
    quo[s] = f;
    for (std::size_t j = 0; j < den.size(); ++j) r[s + j] -= f * den[j];
    r = trim(r);
  }
  return trim(quo);
}

inline bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline Z mod(const Z& a, const Z& m) {
  Z r = a % m;
  if (r < 0) r += m;
  return r;
}

// a/b mod m by brute-force search for the inverse (m small).
inline Z residue(const Q& v, const Z& m) {
  const Z b = mod(v.get_den(), m);
  for (Z inv = 1; inv < m; ++inv)
    if (mod(b * inv, m) == 1) return mod(v.get_num() * inv, m);
  return Z(-1);
}

}  // namespace oracle
