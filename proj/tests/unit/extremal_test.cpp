#include "recstat/extremal.hpp"
#include "recstat/tables.hpp"
#include "verify/oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

namespace recstat {
namespace {

TEST(MinProduct, Examples) {
  const ExtremalResult small = min_product(10, 7);
  EXPECT_EQ(small.m, 6);
  EXPECT_EQ(small.witness, (std::vector<int>{1, 6}));

  const ExtremalResult six = min_product(6, 12);
  EXPECT_EQ(six.n, 6);
  EXPECT_EQ(six.k, 12);
  EXPECT_EQ(six.m, 30);
  EXPECT_EQ(six.witness, (std::vector<int>{1, 5, 6}));

  for (int n = 1; n <= 12; ++n) {
    const ExtremalResult full = min_product(n, triangular(n));
    EXPECT_EQ(full.m, oracle::factorial_product(n));
    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 1);
    EXPECT_EQ(full.witness, all);
  }

  const ExtremalResult one = min_product(5, 1);
  EXPECT_EQ(one.m, 1);
  EXPECT_EQ(one.witness, (std::vector<int>{1}));
}

TEST(MinProduct, RejectsInfeasible) {
  EXPECT_THROW(min_product(6, 2), InfeasibleError);
  EXPECT_THROW(min_product(6, 20), InfeasibleError);
  EXPECT_THROW(min_product(6, 0), InfeasibleError);
  EXPECT_THROW(min_product(6, 22), InfeasibleError);
  EXPECT_THROW(min_product(0, 1), std::invalid_argument);
  EXPECT_THROW(min_product(kMaxExtremalSize + 1, 3), SizeLimitError);
}

TEST(MinProduct, Feasibility) {
  EXPECT_TRUE(srec_feasible(1, 1));
  EXPECT_FALSE(srec_feasible(1, 2));
  EXPECT_TRUE(srec_feasible(2, 3));
  EXPECT_FALSE(srec_feasible(2, 2));
  EXPECT_TRUE(srec_feasible(6, 19));
  EXPECT_FALSE(srec_feasible(6, 20));
  EXPECT_TRUE(srec_feasible(6, 21));
}

TEST(MinProduct, ExhaustiveAgainstSubsets) {
  for (int n = 1; n <= 15; ++n) {
    const auto minima = oracle::subset_minima(n);
    const ExtremalTable table(n);
    for (std::int64_t k = 1; k <= triangular(n); ++k) {
      const auto it = minima.find(k);
      if (it == minima.end()) {
        EXPECT_THROW(table.min_product(k), InfeasibleError) << n << ' ' << k;
        continue;
      }
      const ExtremalResult result = table.min_product(k);
      EXPECT_EQ(result.m, it->second.product) << n << ' ' << k;
      EXPECT_EQ(result.witness, it->second.witness) << n << ' ' << k;
    }
  }
}

TEST(MinProduct, PartialTableAgreesWithFullTable) {
  const ExtremalTable partial(20, 60);
  const ExtremalTable& full = cached_extremal_table(20);
  EXPECT_EQ(partial.max_k(), 60);
  for (std::int64_t k = 1; k <= 60; ++k) {
    if (!srec_feasible(20, k)) continue;
    EXPECT_EQ(partial.min_product(k).m, full.min_product(k).m);
    EXPECT_EQ(partial.min_product(k).witness, full.min_product(k).witness);
  }
  EXPECT_THROW(partial.min_product(61), std::out_of_range);
}

TEST(MinProduct, SmallKIsKMinusOne) {
  for (int n = 3; n <= 60; ++n) {
    for (int k = 3; k <= n; ++k) {
      const ExtremalResult result = cached_extremal_table(n).min_product(k);
      EXPECT_EQ(result.m, k - 1);
      EXPECT_EQ(result.witness, (std::vector<int>{1, k - 1}));
    }
  }
}

TEST(MinProduct, WitnessSatisfiesConditions) {
  const ExtremalTable& table = cached_extremal_table(40);
  for (std::int64_t k = 1; k <= triangular(40); k += 7) {
    if (!srec_feasible(40, k)) continue;
    const ExtremalResult result = table.min_product(k);
    ASSERT_FALSE(result.witness.empty());
    EXPECT_EQ(result.witness.front(), 1);
    EXPECT_TRUE(std::is_sorted(result.witness.begin(), result.witness.end()));
    EXPECT_EQ(std::adjacent_find(result.witness.begin(), result.witness.end()), result.witness.end());
    EXPECT_LE(result.witness.back(), 40);
    BigInt product = 1;
    std::int64_t sum = 0;
    for (int v : result.witness) {
      product *= v;
      sum += v;
    }
    EXPECT_EQ(sum, k);
    EXPECT_EQ(product, result.m);
  }
}

TEST(I0, Examples) {
  EXPECT_EQ(i0_greedy(10, 11), 0);
  EXPECT_EQ(i0_greedy(10, 27), 1);
  EXPECT_EQ(i0_greedy(10, 55), 8);
  EXPECT_EQ(i0_closed(10, 11), 0);
  EXPECT_EQ(i0_closed(10, 27), 1);
  EXPECT_EQ(i0_closed(10, 55), 8);
}

TEST(I0, Errors) {
  EXPECT_THROW(i0_greedy(10, 10), std::invalid_argument);
  EXPECT_THROW(i0_closed(10, 56), std::invalid_argument);
  EXPECT_THROW(i0_closed(1, 2), std::invalid_argument);
}

TEST(I0, ClosedEqualsGreedyEqualsScan) {
  for (int n = 2; n <= 200; ++n) {
    for (std::int64_t k = n + 1; k <= triangular(n); ++k) {
      const int closed = i0_closed(n, k);
      ASSERT_EQ(closed, i0_greedy(n, k)) << n << ' ' << k;
      if (n <= 30) {
        ASSERT_EQ(closed, oracle::i0_by_scan(n, k)) << n << ' ' << k;
      }
    }
  }
}

TEST(I0, IntegerSquareRoot) {
  EXPECT_EQ(isqrt(0), 0u);
  EXPECT_EQ(isqrt(1), 1u);
  EXPECT_EQ(isqrt(15), 3u);
  EXPECT_EQ(isqrt(16), 4u);
  EXPECT_EQ(isqrt(std::uint64_t{1} << 62), std::uint64_t{1} << 31);
  EXPECT_EQ(isqrt(~std::uint64_t{0}), 4294967295u);
  for (std::uint64_t r = 1; r < 5000; ++r) {
    EXPECT_EQ(isqrt(r * r), r);
    EXPECT_EQ(isqrt(r * r - 1), r - 1);
  }
}

TEST(I0, AsymptoticWithinThree) {
  for (int n = 4; n <= 500; ++n) {
    const auto top = triangular(n);
    for (std::int64_t k = n + 1; k < top; ++k) {
      const double x = static_cast<double>(k) / static_cast<double>(top);
      ASSERT_LE(std::abs(n - i0_closed(n, k) - n * std::sqrt(1.0 - x)), 3.0) << n << ' ' << k;
    }
  }
}

TEST(GammaBounds, Examples) {
  const GammaBounds full = gamma_bounds(10, 55);
  EXPECT_EQ(full.i0, 8);
  EXPECT_NEAR(full.log_lower, std::log(3628800.0), 1e-9);
  EXPECT_NEAR(full.log_upper, std::log(3628800.0) + 10, 1e-9);
  const double log_m = std::log(3628800.0);
  EXPECT_LE(full.log_lower, log_m + 1e-9);

  for (auto [n, k] : {std::pair{10, 27}, std::pair{20, 150}}) {
    const GammaBounds bounds = gamma_bounds(n, k);
    const double value = oracle::log_big(min_product(n, k).m);
    EXPECT_LE(bounds.log_lower, value + 1e-9);
    EXPECT_LE(value, bounds.log_upper + 1e-9);
  }
  EXPECT_THROW(gamma_bounds(10, 54), InfeasibleError);
  EXPECT_THROW(gamma_bounds(10, 10), std::invalid_argument);
}

TEST(GammaBounds, SqueezeThroughForty) {
  for (int n = 2; n <= 40; ++n) {
    const ExtremalTable& table = cached_extremal_table(n);
    for (std::int64_t k = n + 1; k <= triangular(n); ++k) {
      if (k == triangular(n) - 1) continue;
      const GammaBounds bounds = gamma_bounds(n, k);
      const double value = oracle::log_big(table.min_product(k).m);
      ASSERT_LE(bounds.log_lower, value + 1e-9) << n << ' ' << k;
      ASSERT_LE(value, bounds.log_upper + 1e-9) << n << ' ' << k;
    }
  }
}

TEST(CountBounds, Examples) {
  EXPECT_TRUE(srec_count_bounds(10, 7).brackets(oracle::log_big(srec_table(10)[7])));
  EXPECT_TRUE(srec_count_bounds(12, 40).brackets(oracle::log_big(srec_table(12)[40])));
  const LogBounds top = srec_count_bounds(12, 78);
  EXPECT_LE(top.log_lower, 0.0);
  EXPECT_TRUE(top.brackets(0.0));
  EXPECT_THROW(srec_count_bounds(12, 2), InfeasibleError);
  EXPECT_THROW(srec_count_bounds(12, 77), InfeasibleError);
}

TEST(CountBounds, BracketExactCountsThroughSixty) {
  for (int n = 1; n <= 60; ++n) {
    const CountTable srec = srec_table(n);
    for (std::int64_t k = 1; k <= triangular(n); ++k) {
      if (sgn(srec[k]) == 0) continue;
      ASSERT_TRUE(srec_count_bounds(n, k).brackets(oracle::log_big(srec[k]), 1e-9)) << n << ' ' << k;
    }
  }
}

}  // namespace
}  // namespace recstat
