#pragma once

// Kernels f: N -> Q for the summation theorems, described as data:
// sign twist * numerator(k) / denominator(k), where the denominator is either
// a polynomial in k or binom(2k-1, k).

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rscheck/exactnum.hpp"
#include "rscheck/polynomial.hpp"

namespace rscheck {

enum class SignExponent { None, K, KM, KMMinus1 };
enum class DenominatorKind { Poly, Central };

struct KernelSpec {
  std::string name;
  SignExponent sign = SignExponent::None;
  IntPolynomial numerator;
  DenominatorKind denominator_kind = DenominatorKind::Poly;
  IntPolynomial denominator = IntPolynomial::constant(1);

  /// f(k) for the twist parameter m. Throws std::domain_error when the
  /// denominator vanishes at k.
  Rational operator()(unsigned long k, long m = 0) const;

  /// Compact text form, accepted back by parse_kernel.
  std::string describe() const;
};

/// (-1)^e as +1 / -1 for the given exponent kind.
int sign_at(SignExponent s, unsigned long k, long m);

/// Named kernels: f1..f10 of the central-binomial family plus the integer
/// kernels used with the first two summation theorems.
const std::vector<KernelSpec>& kernel_registry();
std::optional<KernelSpec> find_kernel(std::string_view name);

/// Parses "sign=km;num=0,1;den=-1,2" (den=central for binom(2k-1,k)).
/// Coefficients are low-to-high in k. nullopt on malformed text.
std::optional<KernelSpec> parse_kernel(std::string_view text);

}  // namespace rscheck
