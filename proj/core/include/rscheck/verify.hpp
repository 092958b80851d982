#pragma once

// Checkers for the identities, divisibility results and congruences, the
// kernel summation framework, and the conjecture scans. Rational-valued sums
// are computed exactly and reduced once; a denominator sharing the modulus
// prime yields ILL_POSED rather than a silent skip.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rscheck/check_result.hpp"
#include "rscheck/kernel.hpp"
#include "rscheck/sequences.hpp"

namespace rscheck::verify {

using seq::SequenceCache;

// Congruences at primes and closed-form identities.
CheckResult check_thm11(unsigned long p);
CheckResult check_thm12(unsigned long p);
CheckResult check_remark11(unsigned long n, unsigned long d);
CheckResult check_thm13(unsigned long p, SequenceCache* cache = nullptr);
CheckResult check_thm13_ii(unsigned long n);
CheckResult check_thm14_i(unsigned long n, SequenceCache* cache = nullptr);
CheckResult check_thm14_ii(unsigned long p, SequenceCache* cache = nullptr);

enum class Thm15Variant { LinearPlus, LinearMinus, CubicPlus, CubicMinus, LinearSquare, Hex, PairedCubic, PairedHex };
std::string_view to_string(Thm15Variant v);
std::optional<Thm15Variant> parse_thm15_variant(std::string_view text);
const std::vector<Thm15Variant>& all_thm15_variants();

/// nullopt runs every variant as one instance.
CheckResult check_thm15_i(unsigned long n, const std::vector<long>& a, std::optional<Thm15Variant> variant = {});
CheckResult check_thm15_ii(unsigned long n, unsigned long a, unsigned long b);
/// The displayed sums of check_thm15_ii against the kernel-framework sums
/// built from f1..f10, value by value.
CheckResult cross_validate_thm15_ii(unsigned long n, unsigned long a, unsigned long b);
CheckResult check_remark13(unsigned long n);
CheckResult check_cor11(unsigned long n, SequenceCache* cache = nullptr);
CheckResult check_lemma22(unsigned long n);
CheckResult check_lemma23(unsigned long n, unsigned long k);

// Kernel framework.
CheckResult check_thm41(unsigned long n, const KernelSpec& f, const std::vector<long>& a,
                        const std::vector<unsigned long>& b);
CheckResult check_cor41(unsigned long n, const std::vector<long>& a, const std::vector<unsigned long>& b);
CheckResult check_thm42(unsigned long n, const KernelSpec& f, const std::vector<long>& a);

enum class Strength { Integral, OverN };
CheckResult check_thm43(unsigned long n, const KernelSpec& f, const std::vector<unsigned long>& a, Strength strength);
CheckResult check_thm44(unsigned long n, unsigned long a, unsigned long b, const KernelSpec& f);
/// a_seq needs at least n entries.
CheckResult check_lemma42(unsigned long n, const std::vector<Rational>& a_seq, std::string_view label = "custom");

/// The signed sum of check_thm44, exact; exposed for cross-validation.
Rational thm44_sum(unsigned long n, unsigned long a, unsigned long b, const KernelSpec& f);
/// The Delta f sum of check_thm43, exact.
Rational thm43_sum(unsigned long n, const KernelSpec& f, const std::vector<unsigned long>& a);

CheckResult check_remark52(unsigned long n, SequenceCache* cache = nullptr);
CheckResult check_remark53(unsigned long n, SequenceCache* cache = nullptr);

// Conjecture scans.
CheckResult check_conj51(unsigned long p);
CheckResult check_conj52(unsigned long n, SequenceCache* cache = nullptr);
/// Both R_n(x) and S_n(x); PASS needs a witness prime for each.
CheckResult conj53_witness(unsigned long n, const std::vector<unsigned long>& p_candidates);
/// The integrality claims at n, plus the prime claims when n is a prime.
CheckResult check_conj54(unsigned long n, SequenceCache* cache = nullptr);
CheckResult check_conj55(unsigned long n, SequenceCache* cache = nullptr);
CheckResult check_conj56(unsigned long n, SequenceCache* cache = nullptr);
CheckResult check_conj58i(unsigned long m, unsigned long n);

/// True iff f is irreducible over F_p (p prime, p not dividing the leading coefficient).
bool irreducible_mod_p(const IntPolynomial& f, unsigned long p);

struct ScanRange {
  unsigned long max_n = 0;
  unsigned long max_p = 0;
  unsigned long max_m = 0;
};

/// Serial scan of one conjecture family (conj51, conj52, conj53, conj54,
/// conj55, conj56, conj57, conj58, conj58i) over the given range.
std::vector<CheckResult> scan_conjectures(std::string_view selector, const ScanRange& range);

std::vector<unsigned long> primes_below(unsigned long limit);

}  // namespace rscheck::verify
