#include "recstat/extremal.hpp"

#include "recstat/special_functions.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>

namespace recstat {
namespace {

std::string describe(int n, std::int64_t k) {
  return "(n = " + std::to_string(n) + ", k = " + std::to_string(k) + ")";
}

void require_i0_range(int n, std::int64_t k) {
  if (n < 2) throw std::invalid_argument("i0 requires n >= 2, got n = " + std::to_string(n));
  if (k <= n || k > triangular(n)) {
    throw std::invalid_argument("i0 requires n + 1 <= k <= n(n+1)/2, got " + describe(n, k));
  }
}

}  // namespace

bool srec_feasible(int n, std::int64_t k) noexcept {
  const auto top = triangular(n);
  return n >= 1 && k >= 1 && k <= top && k != 2 && k != top - 1;
}

ExtremalTable::ExtremalTable(int n, std::int64_t max_k) : n_(n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (n > kMaxExtremalSize) {
    throw SizeLimitError("minimum-product table is limited to n <= " +
                         std::to_string(kMaxExtremalSize));
  }
  const auto top = triangular(n);
  if (max_k < 0 || max_k > top) max_k = top;
  max_sum_ = std::max<std::int64_t>(max_k - 1, 0);

  // Row j (2 <= j <= n + 1) holds best(j, s) for s = 0..max_sum_. Row n+1 is
  // the empty set: product 1 at s = 0, infeasible (0) elsewhere.
  const auto width = static_cast<std::size_t>(max_sum_ + 1);
  best_.assign(static_cast<std::size_t>(n) * width, BigInt(0));
  auto row = [&](int j) { return best_.begin() + static_cast<std::ptrdiff_t>((j - 2) * width); };
  row(n + 1)[0] = 1;
  BigInt candidate;
  for (int j = n; j >= 2; --j) {
    auto current = row(j);
    auto next = row(j + 1);
    for (std::int64_t s = 0; s <= max_sum_; ++s) {
      BigInt& cell = current[s];
      cell = next[s];
      if (s >= j && sgn(next[s - j]) != 0) {
        candidate = next[s - j];
        candidate *= static_cast<unsigned long>(j);
        if (sgn(cell) == 0 || candidate < cell) cell = candidate;
      }
    }
  }
}

const BigInt& ExtremalTable::best(int j, std::int64_t s) const noexcept {
  const auto width = max_sum_ + 1;
  return best_[static_cast<std::size_t>((j - 2) * width + s)];
}

ExtremalResult ExtremalTable::min_product(std::int64_t k) const {
  if (!srec_feasible(n_, k)) throw InfeasibleError("no tuple satisfies the conditions for " + describe(n_, k));
  if (k - 1 > max_sum_) {
    throw std::out_of_range("table built for k <= " + std::to_string(max_k()) + ", asked " +
                            describe(n_, k));
  }
  ExtremalResult result{n_, k, BigInt(1), {1}};
  if (k == 1) return result;

  result.m = best(2, k - 1);
  // Greedy reconstruction: the smallest usable element at each step yields
  // the lexicographically smallest optimal tuple.
  std::int64_t remaining = k - 1;
  BigInt target = result.m;
  BigInt candidate;
  int from = 2;
  while (remaining > 0) {
    const auto before = remaining;
    for (int v = from; v <= n_ && v <= remaining; ++v) {
      const BigInt& rest = best(v + 1, remaining - v);
      if (sgn(rest) == 0) continue;
      candidate = rest;
      candidate *= static_cast<unsigned long>(v);
      if (candidate == target) {
        result.witness.push_back(v);
        remaining -= v;
        target = rest;
        from = v + 1;
        break;
      }
    }
    if (remaining == before) throw std::logic_error("witness reconstruction failed for " + describe(n_, k));
  }
  return result;
}

ExtremalResult min_product(int n, std::int64_t k) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (!srec_feasible(n, k)) throw InfeasibleError("no tuple satisfies the conditions for " + describe(n, k));
  return ExtremalTable(n, k).min_product(k);
}

const ExtremalTable& cached_extremal_table(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const ExtremalTable>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<const ExtremalTable>(n);
  return *slot;
}

int i0_greedy(int n, std::int64_t k) {
  require_i0_range(n, k);
  std::int64_t accumulated = 0;
  int i0 = -1;
  while (accumulated + (n - (i0 + 1)) <= k - 1) {
    ++i0;
    accumulated += n - i0;
  }
  return i0;
}

std::uint64_t isqrt(std::uint64_t value) noexcept {
  if (value < 2) return value;
  // Newton iteration from an overestimate; decreases monotonically to floor(sqrt).
  std::uint64_t x = value;
  std::uint64_t y = x / 2 + 1;
  while (y < x) {
    x = y;
    y = (x + value / x) / 2;
  }
  return x;
}

int i0_closed(int n, std::int64_t k) {
  require_i0_range(n, k);
  const std::int64_t nn = n;
  const std::int64_t radicand = 4 * nn * nn + 4 * nn - 8 * k + 9;
  if (radicand < 0) throw std::logic_error("negative radicand for " + describe(n, k));
  const auto root = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(radicand)));
  const std::int64_t numerator = 2 * nn - 1 - root;
  // Exact square: floor(numerator / 2). Otherwise sqrt lies strictly between
  // root and root + 1, so the floor is floor((numerator - 1) / 2).
  const bool exact = root * root == radicand;
  // numerator >= 1 whenever the radicand is not a square, since k >= n + 1.
  return static_cast<int>((exact ? numerator : numerator - 1) / 2);
}

GammaBounds gamma_bounds(int n, std::int64_t k) {
  require_i0_range(n, k);
  if (k == triangular(n) - 1) throw InfeasibleError("no tuple satisfies the conditions for " + describe(n, k));
  const int i0 = i0_closed(n, k);
  const double nd = n;
  const double lower = log_gamma(nd + 1.0) - log_gamma(nd - i0);
  return {i0, lower, lower + nd};
}

LogBounds srec_count_bounds(int n, std::int64_t k) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (!srec_feasible(n, k)) {
    throw InfeasibleError("C(n, k) is zero or out of range for " + describe(n, k));
  }
  const double nd = n;
  const double log_n = std::log(nd);
  const double log_n_factorial = log_gamma(nd + 1.0);
  const double n_ln2 = nd * std::numbers::ln2;
  if (k == 1) {
    // m(n, 1) = 1.
    return {log_n_factorial - log_n, n_ln2 + log_n_factorial};
  }
  if (k <= n) {
    // m(n, k) = k - 1.
    const double log_m = std::log(static_cast<double>(k - 1));
    return {log_n_factorial - log_m - log_n, n_ln2 + log_n_factorial - log_m};
  }
  const double log_gamma_tail = log_gamma(nd - i0_closed(n, k));
  return {log_gamma_tail - log_n - nd, n_ln2 + log_gamma_tail};
}

}  // namespace recstat
