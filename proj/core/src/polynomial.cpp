#include "rscheck/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace rscheck {

RationalPolynomial to_rational(const IntPolynomial& p) {
  std::vector<Rational> c;
  c.reserve(p.size());
  for (const auto& v : p.coefficients()) c.emplace_back(v);
  return RationalPolynomial(std::move(c));
}

Rational evaluate(const IntPolynomial& p, const Rational& x) {
  if (p.is_zero()) return 0;
  const Integer u(x.get_num());
  const Integer v(x.get_den());
  // sum c_k u^k v^(d-k), then divide by v^d
  const auto& c = p.coefficients();
  const std::size_t d = c.size() - 1;
  Integer acc = c[d];
  Integer vp = 1;
  for (std::size_t k = d; k-- > 0;) {
    vp *= v;
    acc = acc * u + c[k] * vp;
  }
  return make_rational(acc, vp);
}

std::optional<IntPolynomial> to_integer(const RationalPolynomial& p) {
  std::vector<Integer> c;
  c.reserve(p.size());
  for (const auto& v : p.coefficients()) {
    if (v.get_den() != 1) return std::nullopt;
    c.emplace_back(v.get_num());
  }
  return IntPolynomial(std::move(c));
}

Integer content(const IntPolynomial& p) {
  Integer g = 0;
  for (const auto& v : p.coefficients()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

bool all_coefficients_divisible(const IntPolynomial& p, const Integer& m) {
  for (const auto& v : p.coefficients())
    if (!mpz_divisible_p(v.get_mpz_t(), m.get_mpz_t())) return false;
  return true;
}

std::pair<RationalPolynomial, RationalPolynomial> divrem(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {RationalPolynomial{}, a};
  std::vector<Rational> r = a.coefficients();
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  std::vector<Rational> q(r.size() - db);
  const Rational lead_inv = 1 / bc.back();
  for (std::size_t i = r.size(); i-- > db;) {
    if (r[i] == 0) continue;
    Rational f = r[i] * lead_inv;
    q[i - db] = f;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] -= f * bc[j];
  }
  r.resize(db);
  return {RationalPolynomial(std::move(q)), RationalPolynomial(std::move(r))};
}

IntPolynomial remainder_monic(IntPolynomial a, const IntPolynomial& monic) {
  return divrem_monic(a, monic).second;
}

std::pair<IntPolynomial, IntPolynomial> divrem_monic(const IntPolynomial& a, const IntPolynomial& monic) {
  if (monic.is_zero() || monic.leading() != 1) throw std::invalid_argument("divrem_monic: divisor is not monic");
  const std::size_t dm = monic.size() - 1;
  if (a.size() <= dm) return {IntPolynomial{}, a};
  std::vector<Integer> r = a.coefficients();
  const auto& mc = monic.coefficients();
  std::vector<Integer> q(r.size() - dm);
  for (std::size_t i = r.size(); i-- > dm;) {
    if (r[i] == 0) continue;
    const Integer f = r[i];
    q[i - dm] = f;
    for (std::size_t j = 0; j < dm; ++j)
      if (mc[j] != 0) r[i - dm + j] -= f * mc[j];
    r[i] = 0;
  }
  r.resize(dm);
  return {IntPolynomial(std::move(q)), IntPolynomial(std::move(r))};
}

namespace {

IntPolynomial primitive_part(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  Integer g = content(p);
  if (p.leading() < 0) g = -g;
  std::vector<Integer> c = p.coefficients();
  for (auto& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(c));
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, computed in Z[var].
IntPolynomial pseudo_remainder(IntPolynomial a, const IntPolynomial& b) {
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  std::vector<Integer> r = a.coefficients();
  const Integer& lb = bc.back();
  while (r.size() > db && !r.empty()) {
    const Integer f = r.back();
    const std::size_t shift = r.size() - 1 - db;
    for (auto& v : r) v *= lb;
    for (std::size_t j = 0; j <= db; ++j) r[shift + j] -= f * bc[j];
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  return IntPolynomial(std::move(r));
}

}  // namespace

IntPolynomial gcd(IntPolynomial a, IntPolynomial b) {
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  a = primitive_part(a);
  b = primitive_part(b);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPolynomial r = primitive_part(pseudo_remainder(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

namespace {

template <class T>
std::string render(const Polynomial<T>& p, char var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& c = p.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    T v = c[i];
    const bool neg = v < 0;
    if (neg) v = -v;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (i == 0 || v != 1) os << v.get_str();
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

}  // namespace

std::string to_string(const IntPolynomial& p, char var) { return render(p, var); }

std::string to_string(const RationalPolynomial& p, char var) { return render(p, var); }

std::vector<std::string> coefficient_strings(const IntPolynomial& p) {
  std::vector<std::string> out;
  out.reserve(p.size());
  for (const auto& v : p.coefficients()) out.push_back(v.get_str());
  return out;
}

}  // namespace rscheck
