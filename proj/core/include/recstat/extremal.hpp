#pragma once

#include "recstat/types.hpp"

#include <cstdint>
#include <vector>

namespace recstat {

/// m(n,k): the least product v_1 v_2 ... v_r over tuples with v_1 = 1,
/// v_1 < ... < v_r <= n and v_1 + ... + v_r = k, plus a witness tuple.
struct ExtremalResult {
  int n = 0;
  std::int64_t k = 0;
  BigInt m;
  std::vector<int> witness;
};

/// True when some record-position tuple sums to k: 1 <= k <= n(n+1)/2,
/// k != 2, k != n(n+1)/2 - 1.
bool srec_feasible(int n, std::int64_t k) noexcept;

/// Minimum-product table for fixed n over all sums up to max_sum + 1.
///
/// best(j, s) is the least product of a set of distinct integers drawn
/// from {j, ..., n} with sum s. Products are compared as exact integers.
class ExtremalTable {
 public:
  /// max_k defaults to n(n+1)/2.
  explicit ExtremalTable(int n, std::int64_t max_k = -1);

  int n() const noexcept { return n_; }
  std::int64_t max_k() const noexcept { return max_sum_ + 1; }

  /// Witness is the lexicographically smallest optimal tuple.
  ExtremalResult min_product(std::int64_t k) const;

 private:
  const BigInt& best(int j, std::int64_t s) const noexcept;

  int n_;
  std::int64_t max_sum_;
  std::vector<BigInt> best_;  // (n - 1) rows for j = 2..n+1; zero marks "no subset"
};

inline constexpr int kMaxExtremalSize = 200;

ExtremalResult min_product(int n, std::int64_t k);

/// Full-range table for n, built once and shared. Safe for concurrent use.
const ExtremalTable& cached_extremal_table(int n);

/// Greatest i0 with k - 1 >= n + (n-1) + ... + (n-i0), by accumulation.
int i0_greedy(int n, std::int64_t k);

/// floor((2n - 1 - sqrt(4n^2 + 4n - 8k + 9)) / 2) in exact integer arithmetic.
int i0_closed(int n, std::int64_t k);

std::uint64_t isqrt(std::uint64_t value) noexcept;

/// ln Gamma(n+1) - ln Gamma(n-i0) <= ln m(n,k) <= that + n.
struct GammaBounds {
  int i0 = 0;
  double log_lower = 0.0;
  double log_upper = 0.0;
};

GammaBounds gamma_bounds(int n, std::int64_t k);

/// Log-domain bounds on C(n,k), dispatching on k = 1, 3 <= k <= n and
/// n + 1 <= k.
LogBounds srec_count_bounds(int n, std::int64_t k);

}  // namespace recstat
