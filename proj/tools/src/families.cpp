#include "rscheck/cli/families.hpp"

#include <cstdint>
#include <memory>
#include <random>
#include <sstream>
#include <stdexcept>

#include "rscheck/kernel.hpp"
#include "rscheck/qalgebra.hpp"
#include "rscheck/sequences.hpp"
#include "rscheck/verify.hpp"

namespace rscheck::cli {

namespace {

using verify::SequenceCache;
using UL = unsigned long;

std::vector<UL> n_range(const RunOptions& o, UL lo, UL def_max) {
  if (o.n) return {*o.n};
  std::vector<UL> out;
  for (UL n = lo; n <= o.max_n.value_or(def_max); ++n) out.push_back(n);
  return out;
}

std::vector<UL> p_range(const RunOptions& o, UL lo, UL def_max) {
  if (o.p) return {*o.p};
  std::vector<UL> out;
  for (UL p : verify::primes_below(o.max_p.value_or(def_max)))
    if (p >= lo) out.push_back(p);
  return out;
}

std::vector<UL> small_range(const std::optional<std::vector<long>>& fixed, UL lo, UL hi, const char* what) {
  if (!fixed) {
    std::vector<UL> out;
    for (UL v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
  if (fixed->size() != 1 || fixed->front() < 0)
    throw std::invalid_argument(std::string("--") + what + " takes one nonnegative value here");
  return {static_cast<UL>(fixed->front())};
}

std::vector<UL> to_unsigned(const std::vector<long>& v, const char* what) {
  std::vector<UL> out;
  for (long x : v) {
    if (x < 0) throw std::invalid_argument(std::string("--") + what + " entries must be nonnegative");
    out.push_back(static_cast<UL>(x));
  }
  return out;
}

KernelSpec resolve_kernel(const std::string& text) {
  if (auto k = find_kernel(text)) return *k;
  if (auto k = parse_kernel(text)) return *k;
  throw std::invalid_argument("unknown kernel " + text);
}

template <class F>
Task task(F f) {
  return Task(std::move(f));
}

// --- sequences ---

std::vector<Task> rec_r(const RunOptions& o) {
  const UL max = o.max_n.value_or(200);
  return {task([max] { return seq::check_recurrence_R(max); })};
}

std::vector<Task> rec_r_poly(const RunOptions& o) {
  const UL max = o.max_n.value_or(100);
  return {task([max] { return seq::check_recurrence_R_poly(max); })};
}

std::vector<Task> rec_s(const RunOptions& o) {
  const UL max = o.max_n.value_or(200);
  return {task([max] { return seq::check_recurrence_S(max); })};
}

// --- identities and congruences ---

std::vector<Task> thm11(const RunOptions& o) {
  std::vector<Task> out;
  for (UL p : p_range(o, 3, 2000)) out.push_back(task([p] { return verify::check_thm11(p); }));
  return out;
}

std::vector<Task> thm12(const RunOptions& o) {
  std::vector<Task> out;
  for (UL p : p_range(o, 3, 1000)) out.push_back(task([p] { return verify::check_thm12(p); }));
  return out;
}

std::vector<Task> rem11(const RunOptions& o) {
  std::vector<Task> out;
  for (UL n : n_range(o, 0, 30)) {
    if (o.d) {
      out.push_back(task([n, d = *o.d] { return verify::check_remark11(n, d); }));
      continue;
    }
    for (UL d = 0; d <= n; ++d) out.push_back(task([n, d] { return verify::check_remark11(n, d); }));
  }
  return out;
}

std::vector<Task> thm13(const RunOptions& o) {
  auto cache = std::make_shared<SequenceCache>();
  std::vector<Task> out;
  for (UL p : p_range(o, 3, 1000)) out.push_back(task([p, cache] { return verify::check_thm13(p, cache.get()); }));
  return out;
}

std::vector<Task> thm13_ii(const RunOptions& o) {
  std::vector<Task> out;
  for (UL n : n_range(o, 1, 500)) out.push_back(task([n] { return verify::check_thm13_ii(n); }));
  return out;
}

std::vector<Task> thm14_i(const RunOptions& o) {
  auto cache = std::make_shared<SequenceCache>();
  std::vector<Task> out;
  for (UL n : n_range(o, 1, 300)) out.push_back(task([n, cache] { return verify::check_thm14_i(n, cache.get()); }));
  return out;
}

std::vector<Task> thm14_ii(const RunOptions& o) {
  auto cache = std::make_shared<SequenceCache>();
  std::vector<Task> out;
  for (UL p : p_range(o, 5, 500)) out.push_back(task([p, cache] { return verify::check_thm14_ii(p, cache.get()); }));
  return out;
}

// Multisets of size m drawn from values, nondecreasing by index.
void multisets(const std::vector<long>& values, std::size_t m, std::size_t from, std::vector<long>& cur,
               std::vector<std::vector<long>>& out) {
  if (cur.size() == m) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < values.size(); ++i) {
    cur.push_back(values[i]);
    multisets(values, m, i, cur, out);
    cur.pop_back();
  }
}

std::vector<Task> thm15_i(const RunOptions& o) {
  std::optional<verify::Thm15Variant> variant;
  if (o.variant) {
    variant = verify::parse_thm15_variant(*o.variant);
    if (!variant) throw std::invalid_argument("unknown variant " + *o.variant);
  }
  std::vector<std::vector<long>> tuples;
  if (o.a) {
    tuples.push_back(*o.a);
  } else {
    const std::vector<long> values{-3, -2, -1, 1, 2, 3};
    std::vector<long> cur;
    for (std::size_t m = 1; m <= o.m.value_or(3); ++m) multisets(values, m, 0, cur, tuples);
  }
  std::vector<Task> out;
  for (UL n : n_range(o, 1, 60))
    for (const auto& a : tuples) out.push_back(task([n, a, variant] { return verify::check_thm15_i(n, a, variant); }));
  return out;
}

std::vector<Task> thm15_ii(const RunOptions& o) {
  std::vector<Task> out;
  for (UL n : n_range(o, 1, 60))
    for (UL a : small_range(o.a, 1, 3, "a"))
      for (UL b : small_range(o.b, 1, 3, "b"))
        out.push_back(task([n, a, b] { return verify::check_thm15_ii(n, a, b); }));
  return out;
}

std::vector<Task> xval15(const RunOptions& o) {
  std::vector<Task> out;
  for (UL n : n_range(o, 1, 60))
    for (UL a : small_range(o.a, 1, 3, "a"))
      for (UL b : small_range(o.b, 1, 3, "b"))
        out.push_back(task([n, a, b] { return verify::cross_validate_thm15_ii(n, a, b); }));
  return out;
}

std::vector<Task> rem13(const RunOptions& o) {
  std::vector<Task> out;
  for (UL n : n_range(o, 1, 60)) out.push_back(task([n] { return verify::check_remark13(n); }));
  return out;
}

std::vector<Task> cor11(const RunOptions& o) {
  auto cache = std::make_shared<SequenceCache>();
  std::vector<Task> out;
  for (UL n : n_range(o, 1, 150)) out.push_back(task([n, cache] { return verify::check_cor11(n, cache.get()); }));
  return out;
}

std::vector<Task> lemma22(const RunOptions& o) {
  std::vector<Task> out;
  for (UL n : n_range(o, 0, 50)) out.push_back(task([n] { return verify::check_lemma22(n); }));
  return out;
}

std::vector<Task> lemma23(const RunOptions& o) {
  std::vector<Task> out;
  for (UL n : n_range(o, 1, 50)) {
    if (o.k) {
      out.push_back(task([n, k = *o.k] { return verify::check_lemma23(n, k); }));
      continue;
    }
    for (UL k = 1; k <= n; ++k) out.push_back(task([n, k] { return verify::check_lemma23(n, k); }));
  }
  return out;
}

std::vector<Task> rem52(const RunOptions& o) {
  auto cache = std::make_shared<SequenceCache>();
  std::vector<Task> out;
  for (UL n : n_range(o, 1, 50)) out.push_back(task([n, cache] { return verify::check_remark52(n, cache.get()); }));
  return out;
}

std::vector<Task> rem53(const RunOptions& o) {
  auto cache = std::make_shared<SequenceCache>();
  std::vector<Task> out;
  for (UL n : n_range(o, 1, 200)) out.push_back(task([n, cache] { return verify::check_remark53(n, cache.get()); }));
  return out;
}

// --- kernel framework: seeded random grid ---

struct GridInstance {
  UL n;
  std::vector<long> a;
  std::vector<UL> b;
};

class Grid {
 public:
  explicit Grid(std::uint64_t seed) : rng_(seed) {}

  UL pick(UL lo, UL hi) { return lo + static_cast<UL>(rng_() % (hi - lo + 1)); }

  // n <= max_n, m <= 3, |a_i| <= 4, b_i <= 3; most draws share a factor
  // g in {2,3,4} with n so that gcd(a, b, n) > 1.
  GridInstance draw(UL max_n) {
    GridInstance g;
    g.n = pick(1, max_n);
    const UL m = pick(1, 3);
    std::vector<UL> factors;
    for (UL f = 2; f <= 4; ++f)
      if (g.n % f == 0) factors.push_back(f);
    UL f = 1;
    if (!factors.empty() && pick(0, 3) != 0) f = factors[pick(0, factors.size() - 1)];
    const long reach = static_cast<long>(4 / f);
    for (UL i = 0; i < m; ++i) {
      g.a.push_back(static_cast<long>(f) * (static_cast<long>(pick(0, 2 * reach)) - reach));
      g.b.push_back(f * pick(0, 3 / f));
    }
    return g;
  }

 private:
  std::mt19937_64 rng_;
};

constexpr std::uint64_t kGridSeed = 20240917;

const std::vector<std::string> kDivisibleByK{"k", "k2", "k3", "k3km1", "altk", "altk2", "altk3", "signk3", "cubicdiff"};
const std::vector<std::string> kDivisibleByK3{"k3", "k3km1", "altk3", "signk3"};

std::vector<Task> thm41(const RunOptions& o) {
  std::vector<Task> out;
  if (o.n && o.a) {
    const KernelSpec f = resolve_kernel(o.kernel.value_or("k"));
    const std::vector<UL> b = o.b ? to_unsigned(*o.b, "b") : std::vector<UL>(o.a->size(), 0);
    out.push_back(task([n = *o.n, f, a = *o.a, b] { return verify::check_thm41(n, f, a, b); }));
    return out;
  }
  Grid grid(kGridSeed + 41);
  for (std::size_t i = 0; i < 250; ++i) {
    const GridInstance g = grid.draw(o.max_n.value_or(40));
    const KernelSpec f = *find_kernel(kDivisibleByK[i % kDivisibleByK.size()]);
    out.push_back(task([g, f] { return verify::check_thm41(g.n, f, g.a, g.b); }));
  }
  return out;
}

std::vector<Task> cor41(const RunOptions& o) {
  std::vector<Task> out;
  if (o.n && o.a) {
    const std::vector<UL> b = o.b ? to_unsigned(*o.b, "b") : std::vector<UL>(o.a->size(), 0);
    out.push_back(task([n = *o.n, a = *o.a, b] { return verify::check_cor41(n, a, b); }));
    return out;
  }
  Grid grid(kGridSeed + 42);
  for (std::size_t i = 0; i < 250; ++i) {
    const GridInstance g = grid.draw(o.max_n.value_or(40));
    out.push_back(task([g] { return verify::check_cor41(g.n, g.a, g.b); }));
  }
  return out;
}

std::vector<Task> thm42(const RunOptions& o) {
  std::vector<Task> out;
  if (o.n && o.a) {
    const KernelSpec f = resolve_kernel(o.kernel.value_or("k3"));
    out.push_back(task([n = *o.n, f, a = *o.a] { return verify::check_thm42(n, f, a); }));
    return out;
  }
  Grid grid(kGridSeed + 43);
  for (std::size_t i = 0; i < 150; ++i) {
    const GridInstance g = grid.draw(o.max_n.value_or(40));
    const KernelSpec f = *find_kernel(kDivisibleByK3[i % kDivisibleByK3.size()]);
    out.push_back(task([g, f] { return verify::check_thm42(g.n, f, g.a); }));
  }
  return out;
}

verify::Strength parse_strength(const std::string& text) {
  if (text == "integral") return verify::Strength::Integral;
  if (text == "over_n") return verify::Strength::OverN;
  throw std::invalid_argument("strength must be integral or over_n");
}

std::vector<Task> thm43(const RunOptions& o) {
  std::vector<Task> out;
  if (o.n && o.a) {
    const KernelSpec f = resolve_kernel(o.kernel.value_or("f1"));
    const auto strength = parse_strength(o.variant.value_or("over_n"));
    out.push_back(
        task([n = *o.n, f, a = to_unsigned(*o.a, "a"), strength] { return verify::check_thm43(n, f, a, strength); }));
    return out;
  }
  const std::vector<std::pair<std::string, verify::Strength>> kernels{
      {"f1", verify::Strength::OverN},      {"f2", verify::Strength::OverN},
      {"f3", verify::Strength::OverN},      {"f4", verify::Strength::OverN},
      {"f5", verify::Strength::Integral},   {"f7", verify::Strength::Integral},
      {"f9", verify::Strength::Integral},   {"catalan", verify::Strength::Integral},
      {"inv2km1", verify::Strength::Integral}, {"f2", verify::Strength::Integral}};
  Grid grid(kGridSeed + 44);
  for (std::size_t i = 0; i < 150; ++i) {
    const UL n = grid.pick(1, o.max_n.value_or(40));
    std::vector<UL> a{1};
    const UL m = grid.pick(1, 3);
    for (UL j = 1; j < m; ++j) a.push_back(grid.pick(1, 4));
    const auto& [name, strength] = kernels[i % kernels.size()];
    const KernelSpec f = *find_kernel(name);
    out.push_back(task([n, f, a, strength = strength] { return verify::check_thm43(n, f, a, strength); }));
  }
  return out;
}

std::vector<Task> thm44(const RunOptions& o) {
  std::vector<Task> out;
  if (o.n && o.a && o.b) {
    const KernelSpec f = resolve_kernel(o.kernel.value_or("f5"));
    const UL a = small_range(o.a, 0, 0, "a").front();
    const UL b = small_range(o.b, 0, 0, "b").front();
    out.push_back(task([n = *o.n, a, b, f] { return verify::check_thm44(n, a, b, f); }));
    return out;
  }
  const std::vector<std::string> kernels{"f5", "f6", "f7", "f8", "f9", "f10", "f1", "f3", "catalan"};
  Grid grid(kGridSeed + 45);
  for (std::size_t i = 0; i < 150; ++i) {
    const UL n = grid.pick(1, o.max_n.value_or(40));
    const UL a = grid.pick(1, 3);
    const UL b = grid.pick(1, 3);
    const KernelSpec f = *find_kernel(kernels[i % kernels.size()]);
    out.push_back(task([n, a, b, f] { return verify::check_thm44(n, a, b, f); }));
  }
  return out;
}

std::vector<Rational> lemma42_sequence(const std::string& name, UL len) {
  std::vector<Rational> a;
  for (UL k = 0; k < len; ++k) {
    if (name == "ones") a.emplace_back(1);
    else if (name == "k") a.emplace_back(static_cast<long>(k));
    else if (name == "alt") a.emplace_back(k % 2 ? -1 : 1);
    else if (name == "harmonic") a.push_back(make_rational(Integer(1), Integer(k + 1)));
    else throw std::invalid_argument("unknown sequence " + name + " (ones, k, alt, harmonic)");
  }
  return a;
}

std::vector<Task> lemma42(const RunOptions& o) {
  std::vector<std::string> names{"ones", "k", "alt", "harmonic"};
  if (o.variant) names = {*o.variant};
  std::vector<Task> out;
  for (UL n : n_range(o, 1, 40))
    for (const auto& name : names) {
      auto seq = lemma42_sequence(name, n);
      out.push_back(task([n, seq, name] { return verify::check_lemma42(n, seq, name); }));
    }
  return out;
}

// --- q-analogues ---

std::vector<Task> qlucas(const RunOptions& o) {
  std::vector<Task> out;
  std::optional<std::vector<long>> fixed_d;
  if (o.d) fixed_d = std::vector<long>{static_cast<long>(*o.d)};
  for (UL d : small_range(fixed_d, 1, 6, "d"))
    for (UL a : small_range(o.a, 0, 6, "a"))
      for (UL b : small_range(o.b, 0, 6, "b"))
        for (UL s = 0; s < d; ++s)
          for (UL t = 0; t < d; ++t) out.push_back(task([a, b, s, t, d] { return q::check_q_lucas(a, b, s, t, d); }));
  return out;
}

std::vector<Task> lemma32(const RunOptions& o) {
  std::vector<Task> out;
  for (UL n : n_range(o, 2, 30)) {
    if (o.k) {
      out.push_back(task([n, k = *o.k] { return q::check_lemma32(n, k); }));
      continue;
    }
    for (UL k = 0; 2 * k + 1 < n; ++k) out.push_back(task([n, k] { return q::check_lemma32(n, k); }));
  }
  return out;
}

std::vector<Task> qthm31(const RunOptions& o) {
  std::vector<Task> out;
  for (UL n : n_range(o, 1, 30)) {
    if (o.k) {
      out.push_back(task([n, k = *o.k] { return q::check_theorem31_q(n, k); }));
      continue;
    }
    for (UL k = 0; k < n; ++k) out.push_back(task([n, k] { return q::check_theorem31_q(n, k); }));
  }
  return out;
}

std::vector<Task> qthm32(const RunOptions& o) {
  std::vector<Task> out;
  for (UL n : n_range(o, 1, 20))
    for (UL a : small_range(o.a, 1, 2, "a"))
      for (UL b : small_range(o.b, 1, 2, "b"))
        for (UL ap : {a - 1, a}) out.push_back(task([n, a, b, ap] { return q::check_theorem32_q(n, a, b, ap); }));
  return out;
}

std::vector<Task> qdegen(const RunOptions& o) {
  std::vector<Task> out;
  for (UL n : n_range(o, 1, 20)) out.push_back(task([n] { return q::check_q_degeneration(n); }));
  return out;
}

// --- conjectures ---

std::vector<Task> conj51(const RunOptions& o) {
  std::vector<Task> out;
  for (UL p : p_range(o, 3, 1000))
    if (o.p || p % 4 == 3) out.push_back(task([p] { return verify::check_conj51(p); }));
  return out;
}

std::vector<Task> conj52(const RunOptions& o) {
  auto cache = std::make_shared<SequenceCache>();
  std::vector<Task> out;
  for (UL n : n_range(o, 1, 1000)) out.push_back(task([n, cache] { return verify::check_conj52(n, cache.get()); }));
  return out;
}

std::vector<Task> conj53(const RunOptions& o) {
  const auto candidates = std::make_shared<std::vector<UL>>(verify::primes_below(o.max_p.value_or(2000)));
  std::vector<Task> out;
  for (UL n : n_range(o, 1, 30))
    out.push_back(task([n, candidates] { return verify::conj53_witness(n, *candidates); }));
  return out;
}

std::vector<Task> conj54(const RunOptions& o) {
  auto cache = std::make_shared<SequenceCache>();
  std::vector<Task> out;
  for (UL n : n_range(o, 1, 300)) out.push_back(task([n, cache] { return verify::check_conj54(n, cache.get()); }));
  return out;
}

std::vector<Task> conj55(const RunOptions& o) {
  auto cache = std::make_shared<SequenceCache>();
  std::vector<Task> out;
  for (UL n : n_range(o, 1, 300)) out.push_back(task([n, cache] { return verify::check_conj55(n, cache.get()); }));
  return out;
}

std::vector<Task> conj56(const RunOptions& o) {
  auto cache = std::make_shared<SequenceCache>();
  std::vector<Task> out;
  for (UL n : n_range(o, 1, 200)) out.push_back(task([n, cache] { return verify::check_conj56(n, cache.get()); }));
  return out;
}

std::vector<Task> conj57(const RunOptions& o) {
  std::vector<Task> out;
  for (UL n : n_range(o, 1, 25)) out.push_back(task([n] { return q::check_conj57(n); }));
  return out;
}

std::vector<Task> conj58q(const RunOptions& o) {
  std::vector<Task> out;
  for (UL m = 1; m <= o.m.value_or(3); ++m)
    for (UL n : n_range(o, 1, 20)) out.push_back(task([m, n] { return q::check_conj58_q(m, n); }));
  return out;
}

std::vector<Task> conj58i(const RunOptions& o) {
  std::vector<Task> out;
  for (UL m = 1; m <= o.m.value_or(4); ++m)
    for (UL n : n_range(o, 1, 60)) out.push_back(task([m, n] { return verify::check_conj58i(m, n); }));
  return out;
}

}  // namespace

std::string_view to_string(Group g) {
  switch (g) {
    case Group::Sequence: return "sequence";
    case Group::Identity: return "identity";
    case Group::Kernel: return "kernel";
    case Group::Q: return "q";
    case Group::Conjecture: return "conjecture";
  }
  return "";
}

std::vector<std::pair<std::string, std::string>> RunOptions::echo() const {
  std::vector<std::pair<std::string, std::string>> out;
  auto put = [&out](const char* key, const std::optional<unsigned long>& v) {
    if (v) out.emplace_back(key, std::to_string(*v));
  };
  auto put_list = [&out](const char* key, const std::optional<std::vector<long>>& v) {
    if (!v) return;
    std::string s;
    for (long x : *v) s += (s.empty() ? "" : ",") + std::to_string(x);
    out.emplace_back(key, s);
  };
  put("n", n);
  put("p", p);
  put("k", k);
  put("d", d);
  put("m", m);
  put("max_n", max_n);
  put("max_p", max_p);
  put_list("a", a);
  put_list("b", b);
  if (variant) out.emplace_back("variant", *variant);
  if (kernel) out.emplace_back("kernel", *kernel);
  return out;
}

const std::vector<Family>& families() {
  static const std::vector<Family> registry{
      {"recR", Group::Sequence, "three-term recurrence of R_n checked against direct sums", "n <= 200", rec_r},
      {"recRx", Group::Sequence, "recurrence of the polynomials R_n(x) in Z[x]", "n <= 100", rec_r_poly},
      {"recS", Group::Sequence, "three-term recurrence of S_n checked against direct sums", "n <= 200", rec_s},
      {"thm11", Group::Identity,
       "R_{(p-1)/2}(x) at x = 1, -2, -1/2 against central ratio sums and two-square or binomial values",
       "odd primes p < 2000", thm11},
      {"thm12", Group::Identity, "ratio sums with binom(2k,k+d) and base 8 vanish mod p for d = (p-1)/2 mod 2",
       "odd primes p < 1000", thm12},
      {"rem11", Group::Identity, "closed form of the base-16 ratio sum", "n <= 30, d <= n", rem11},
      {"thm13", Group::Identity, "sum of R_k over k < p modulo p^2", "odd primes p < 1000", thm13},
      {"thm13ii", Group::Identity, "R_n(-1) = -(2n+1) and the signed binomial sum equals -2n", "n <= 500",
       thm13_ii},
      {"thm14i", Group::Identity, "sum of S_k equals n^2 h_{n-1}; coefficients of sum S_k(x) divisible by n",
       "n <= 300", thm14_i},
      {"thm14ii", Group::Identity, "sums of S_k/k and S_k/k^2 against a Bernoulli polynomial value mod p^2",
       "primes 5 <= p < 500", thm14_ii},
      {"thm15i", Group::Identity,
       "weighted sums of products of binom(a_i n - 1, k), linear/cubic/hex weights, mod n, n^2, n^3",
       "n <= 60, multisets a_i in [-3,3] without 0, m <= 3", thm15_i},
      {"thm15ii", Group::Identity, "integrality of sums of binom(n-1,k)^a binom(-n-1,k)^b with rational weights",
       "n <= 60, a, b <= 3", thm15_ii},
      {"xval15", Group::Identity, "the sums of thm15ii recomputed through kernels f1..f10, value by value",
       "n <= 60, a, b <= 3", xval15},
      {"rem13", Group::Identity, "sum binom(n-1,k) binom(-n-1,k)/(4k^2-1) = -n, summed from k = 0", "n <= 60", rem13},
      {"cor11", Group::Identity, "n^3 or n^4 divides (2k+1)-weighted sums of t_k, T_k, T_k^+, T_k^-", "n <= 150",
       cor11},
      {"lemma22", Group::Identity, "polynomial identity in x with the factor (16-x)k^2 - 4", "n <= 50", lemma22},
      {"lemma23", Group::Identity, "binom(n,k) binom(-n,k)/binom(2k-1,k) as binom(n+k,2k) + binom(n+k-1,2k)",
       "n <= 50, 1 <= k <= n", lemma23},
      {"thm41", Group::Kernel, "shifted-binomial kernel sums mod d and d^2, d = gcd(a, b, n)",
       "250 seeded instances, n <= 40", thm41},
      {"cor41", Group::Kernel, "five kernel consequences with fixed weights mod d and d^2",
       "250 seeded instances, n <= 40", cor41},
      {"thm42", Group::Kernel, "paired binomial sums with k^3 | f modulo n^3", "150 seeded instances, n <= 40", thm42},
      {"thm43", Group::Kernel, "paired binomial sums, integral and divisible-by-n strengths",
       "150 seeded instances, n <= 40", thm43},
      {"thm44", Group::Kernel, "integrality of signed kernel sums with exponents a, b",
       "150 seeded instances, n <= 40", thm44},
      {"lemma42", Group::Kernel, "transform of a_k by binom(n,k)^2 binom(n+k,k)^2", "n <= 40, four sequences",
       lemma42},
      {"qlucas", Group::Q, "q-Lucas congruence modulo cyclotomic polynomials", "a, b <= 6, d <= 6, s, t < d",
       qlucas},
      {"lemma32", Group::Q, "q-binomial product congruence modulo Phi_n", "n <= 30", lemma32},
      {"thm31", Group::Q, "q-analogue of the central sum, divisible by [n]_q", "n <= 30, k < n", qthm31},
      {"thm32", Group::Q, "q-analogue of the paired sum modulo [n]_q^2", "n <= 20, a, b <= 2, a' in {a-1, a}",
       qthm32},
      {"qdegen", Group::Q, "q = 1 limits of the q-sums against the integer sums", "n <= 20", qdegen},
      {"rem52", Group::Conjecture, "(3/n) sum (2k+1) R_k(x) as an explicit integral polynomial", "n <= 50", rem52},
      {"rem53", Group::Conjecture, "n divides the sums of S_k^+ and S_k^-", "n <= 200", rem53},
      {"conj51", Group::Conjecture, "base-8 ratio sums modulo p^2 for p = 3 mod 4", "primes p < 1000", conj51},
      {"conj52", Group::Conjecture, "ratio and root monotonicity of R_n and S_n with exact bounds (surrogate)",
       "n <= 1000", conj52},
      {"conj53", Group::Conjecture, "irreducibility of R_n(x) and S_n(x) by a prime witness",
       "n <= 30, candidates p < 2000", conj53},
      {"conj54", Group::Conjecture, "sums of R_k^2: integrality and prime congruences", "n <= 300", conj54},
      {"conj55", Group::Conjecture, "sums of k S_k: integrality and prime congruences", "n <= 300", conj55},
      {"conj56", Group::Conjecture, "n^2 divides the sums of s_k, S_k^+, S_k^-", "n <= 200", conj56},
      {"conj57", Group::Conjecture, "q-sum of s_k(q) modulo [n]_q^2, integrality class recorded", "n <= 25", conj57},
      {"conj58q", Group::Conjecture, "q-analogue of the S^(m) sum modulo [n]_q", "m <= 3, n <= 20", conj58q},
      {"conj58i", Group::Conjecture, "coefficients of sum S^(m)_k(x) divisible by n", "m <= 4, n <= 60", conj58i},
  };
  return registry;
}

const Family* find_family(std::string_view name) {
  for (const auto& f : families())
    if (f.name == name) return &f;
  return nullptr;
}

std::vector<Task> all_tasks(const RunOptions& options) {
  std::vector<Task> out;
  for (const auto& f : families()) {
    auto t = f.tasks(options);
    out.insert(out.end(), std::make_move_iterator(t.begin()), std::make_move_iterator(t.end()));
  }
  return out;
}

std::string list_families() {
  std::ostringstream out;
  for (const auto& f : families()) {
    std::string name = f.name;
    name.resize(std::max<std::size_t>(name.size(), 9), ' ');
    std::string group(to_string(f.group));
    group.resize(std::max<std::size_t>(group.size(), 11), ' ');
    out << name << ' ' << group << ' ' << f.description << "  [" << f.range << "]\n";
  }
  out << families().size() << " families\n";
  return out.str();
}

std::optional<std::vector<long>> parse_int_list(std::string_view text) {
  std::vector<long> out;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const long v = std::stol(item, &used);
      if (used != item.size()) return std::nullopt;
      out.push_back(v);
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  if (out.empty()) return std::nullopt;
  return out;
}

}  // namespace rscheck::cli
