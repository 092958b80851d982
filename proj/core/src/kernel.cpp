#include "rscheck/kernel.hpp"

#include <sstream>
#include <stdexcept>

namespace rscheck {

int sign_at(SignExponent s, unsigned long k, long m) {
  long e = 0;
  switch (s) {
    case SignExponent::None: e = 0; break;
    case SignExponent::K: e = static_cast<long>(k % 2); break;
    case SignExponent::KM: e = static_cast<long>(k % 2) * (m % 2); break;
    case SignExponent::KMMinus1: e = static_cast<long>(k % 2) * ((m - 1) % 2); break;
  }
  return e % 2 == 0 ? 1 : -1;
}

Rational KernelSpec::operator()(unsigned long k, long m) const {
  const Rational x(static_cast<long>(k));
  Rational num = evaluate(numerator, x);
  Rational den = denominator_kind == DenominatorKind::Central ? Rational(binomial(Integer(2 * k) - 1, k))
                                                                : evaluate(denominator, x);
  if (den == 0) throw std::domain_error("kernel " + name + " has a zero denominator at k = " + std::to_string(k));
  Rational v = num / den;
  if (sign_at(sign, k, m) < 0) v = -v;
  return v;
}

namespace {

std::string_view sign_name(SignExponent s) {
  switch (s) {
    case SignExponent::None: return "none";
    case SignExponent::K: return "k";
    case SignExponent::KM: return "km";
    case SignExponent::KMMinus1: return "km1";
  }
  return "none";
}

std::string coeff_list(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& c : p.coefficients()) {
    if (!out.empty()) out += ',';
    out += c.get_str();
  }
  return out;
}

std::optional<IntPolynomial> parse_coeffs(std::string_view text) {
  std::vector<Integer> c;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    Integer v;
    if (item.empty() || v.set_str(item, 10) != 0) return std::nullopt;
    c.push_back(v);
  }
  if (c.empty()) return std::nullopt;
  return IntPolynomial(std::move(c));
}

KernelSpec make(std::string name, SignExponent s, IntPolynomial num, IntPolynomial den) {
  return {std::move(name), s, std::move(num), DenominatorKind::Poly, std::move(den)};
}

KernelSpec make_central(std::string name, SignExponent s, IntPolynomial num) {
  return {std::move(name), s, std::move(num), DenominatorKind::Central, IntPolynomial::constant(1)};
}

}  // namespace

std::string KernelSpec::describe() const {
  std::string out = "sign=" + std::string(sign_name(sign)) + ";num=" + coeff_list(numerator) + ";den=";
  out += denominator_kind == DenominatorKind::Central ? "central" : coeff_list(denominator);
  return out;
}

const std::vector<KernelSpec>& kernel_registry() {
  static const std::vector<KernelSpec> registry = [] {
    using P = IntPolynomial;
    const P one = P::constant(1);
    const P k{0, 1};
    const P two_k_minus_1{-1, 2};
    const P k_plus_1{1, 1};
    std::vector<KernelSpec> r;
    r.push_back(make("f1", SignExponent::None, k, two_k_minus_1));
    r.push_back(make("f2", SignExponent::K, k, two_k_minus_1));
    r.push_back(make("f3", SignExponent::None, P{0, 2}, k_plus_1));
    r.push_back(make("f4", SignExponent::K, P{0, 2}, k_plus_1));
    r.push_back(make("f5", SignExponent::KM, one, two_k_minus_1));
    r.push_back(make("f6", SignExponent::KMMinus1, one, two_k_minus_1));
    r.push_back(make("f7", SignExponent::KM, P::constant(2), k_plus_1));
    r.push_back(make("f8", SignExponent::KMMinus1, P::constant(2), k_plus_1));
    r.push_back(make_central("f9", SignExponent::KM, one));
    r.push_back(make_central("f10", SignExponent::KMMinus1, one));
    r.push_back(make("inv2km1", SignExponent::None, one, two_k_minus_1));
    r.push_back(make("k", SignExponent::None, k, one));
    r.push_back(make("k2", SignExponent::None, P{0, 0, 1}, one));
    r.push_back(make("k3", SignExponent::None, P{0, 0, 0, 1}, one));
    r.push_back(make("k3km1", SignExponent::None, P{0, 0, 0, -1, 1}, one));
    r.push_back(make("altk", SignExponent::KM, k, one));
    r.push_back(make("altk2", SignExponent::KM, P{0, 0, 1}, one));
    r.push_back(make("altk3", SignExponent::KM, P{0, 0, 0, 1}, one));
    r.push_back(make("signk3", SignExponent::K, P{0, 0, 0, 1}, one));
    // (-1)^(k-1) k^2 (2k-3)
    r.push_back(make("cubicdiff", SignExponent::K, P{0, 0, 3, -2}, one));
    r.push_back(make("catalan", SignExponent::None, P::constant(2), k_plus_1));
    return r;
  }();
  return registry;
}

std::optional<KernelSpec> find_kernel(std::string_view name) {
  for (const auto& k : kernel_registry())
    if (k.name == name) return k;
  return std::nullopt;
}

std::optional<KernelSpec> parse_kernel(std::string_view text) {
  KernelSpec spec;
  spec.name = std::string(text);
  bool have_num = false;
  std::istringstream in{std::string(text)};
  std::string field;
  while (std::getline(in, field, ';')) {
    const auto eq = field.find('=');
    if (eq == std::string::npos) return std::nullopt;
    const std::string key = field.substr(0, eq);
    const std::string value = field.substr(eq + 1);
    if (key == "sign") {
      if (value == "none") spec.sign = SignExponent::None;
      else if (value == "k") spec.sign = SignExponent::K;
      else if (value == "km") spec.sign = SignExponent::KM;
      else if (value == "km1") spec.sign = SignExponent::KMMinus1;
      else return std::nullopt;
    } else if (key == "num") {
      auto p = parse_coeffs(value);
      if (!p) return std::nullopt;
      spec.numerator = *p;
      have_num = true;
    } else if (key == "den") {
      if (value == "central") {
        spec.denominator_kind = DenominatorKind::Central;
      } else {
        auto p = parse_coeffs(value);
        if (!p || p->is_zero()) return std::nullopt;
        spec.denominator_kind = DenominatorKind::Poly;
        spec.denominator = *p;
      }
    } else {
      return std::nullopt;
    }
  }
  if (!have_num) return std::nullopt;
  return spec;
}

}  // namespace rscheck
