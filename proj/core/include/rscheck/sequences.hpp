#pragma once

// Generators for R_n, S_n, their polynomials and companion sums, plus exact
// checks of the three holonomic recurrences. Every generator is a direct
// summation; the recurrences only cross-check.

#include <cstddef>
#include <deque>
#include <functional>
#include <mutex>
#include <shared_mutex>

#include "rscheck/check_result.hpp"
#include "rscheck/exactnum.hpp"
#include "rscheck/polynomial.hpp"

namespace rscheck::seq {

Integer R(unsigned long n);
IntPolynomial R_poly(unsigned long n);
/// R_n(x) at a rational point, summed directly (no polynomial built).
Rational R_at(unsigned long n, const Rational& x);

Integer S(unsigned long n);
IntPolynomial S_poly(unsigned long n);

/// Large Schroeder numbers.
Integer schroder(unsigned long n);
/// sum binom(n,k)^2 C_k.
Integer h(unsigned long n);

/// sum_{k<=n} binom(2k,k) binom(2k,k+d) / ((2k-1) m^k).
Rational ratio_sum(unsigned long n, unsigned long d, const Integer& m);

// Sums with weight binom(n,k)^2 binom(n+k,k)^2.
Integer t_seq(unsigned long n);    // weight / (2k-1)
Integer T_seq(unsigned long n);    // weight (2k+1)
Integer T_plus(unsigned long n);   // weight (2k+1)^2
Integer T_minus(unsigned long n);  // weight (-1)^k (2k+1)^2

// Sums with weight binom(n,k)^2 binom(2k,k).
Integer s_small(unsigned long n);  // weight / (2k-1)
Integer S_cplus(unsigned long n);  // weight (2k+1)^2
Integer S_cminus(unsigned long n); // weight (-1)^k (2k+1)^2

/// sum binom(n,k)^m (km+1)!/(k!)^m x^k.
IntPolynomial S_m_poly(unsigned long m, unsigned long n);

CheckResult check_recurrence_R(unsigned long n_max);
CheckResult check_recurrence_R_poly(unsigned long n_max);
CheckResult check_recurrence_S(unsigned long n_max);

/// Thread-safe memo of a sequence indexed from 0.
///
/// Entries are appended under an exclusive lock and never move (deque), so
/// references handed out stay valid while readers only take a shared lock.
template <class T>
class IndexedMemo {
 public:
  explicit IndexedMemo(std::function<T(unsigned long)> generator) : gen_(std::move(generator)) {}

  const T& operator()(unsigned long n) {
    {
      std::shared_lock lock(mutex_);
      if (n < values_.size()) return values_[n];
    }
    std::unique_lock lock(mutex_);
    while (values_.size() <= n) values_.push_back(gen_(values_.size()));
    return values_[n];
  }

 private:
  std::function<T(unsigned long)> gen_;
  std::deque<T> values_;
  mutable std::shared_mutex mutex_;
};

using SequenceMemo = IndexedMemo<Integer>;

/// Memo tables shared by range scans.
struct SequenceCache {
  SequenceMemo R{seq::R};
  SequenceMemo S{seq::S};
  SequenceMemo t{seq::t_seq};
  SequenceMemo T{seq::T_seq};
  SequenceMemo T_plus{seq::T_plus};
  SequenceMemo T_minus{seq::T_minus};
  SequenceMemo s{seq::s_small};
  SequenceMemo S_plus{seq::S_cplus};
  SequenceMemo S_minus{seq::S_cminus};
  SequenceMemo h{seq::h};
  IndexedMemo<IntPolynomial> R_poly{seq::R_poly};
  IndexedMemo<IntPolynomial> S_poly{seq::S_poly};
};

}  // namespace rscheck::seq
