#include "recstat/scaling.hpp"
#include "recstat/tables.hpp"
#include "verify/oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <stdexcept>

namespace recstat {
namespace {

TEST(FloorScaled, BreakpointsMapBack) {
  for (std::int64_t scale = 1; scale <= 2000; ++scale) {
    for (std::int64_t k = 0; k <= scale; ++k) {
      ASSERT_EQ(floor_scaled(scale, static_cast<double>(k) / static_cast<double>(scale)), k);
    }
  }
  EXPECT_EQ(floor_scaled(10, 0.35), 3);
  EXPECT_EQ(floor_scaled(10, 0.2999), 2);
}

TEST(FnValue, Examples) {
  const CountTable rec = rec_table(5);
  EXPECT_EQ(fn_value(rec, 1.0), 1);
  EXPECT_EQ(fn_value(rec, 0.0), 24);
  EXPECT_EQ(fn_value(rec, 0.5), 50);
  EXPECT_EQ(fn_value(rec, 0.19), 24);
  EXPECT_THROW(fn_value(rec, -0.1), std::invalid_argument);
  EXPECT_THROW(fn_value(rec, 1.1), std::invalid_argument);
  EXPECT_THROW(fn_value(srec_table(5), 0.5), std::invalid_argument);
}

TEST(PhinValue, Examples) {
  const CountTable srec = srec_table(5);
  EXPECT_EQ(phin_value(srec, 0.0), 24);
  EXPECT_EQ(phin_value(srec, 1.0), 1);
  EXPECT_EQ(phin_value(srec, 0.4), srec[6]);
  EXPECT_EQ(phin_value(srec, 2.0 / 15), 24);   // below 6/(n(n+1))
  EXPECT_EQ(phin_value(srec, 14.0 / 15), 1);   // at 1 - 2/(n(n+1))
  EXPECT_EQ(phin_value(srec, 13.0 / 15), srec[13]);
  EXPECT_THROW(phin_value(srec, 1.5), std::invalid_argument);
  EXPECT_THROW(phin_value(rec_table(5), 0.5), std::invalid_argument);
}

TEST(CurveValues, BreakpointsAgreeWithTables) {
  for (int n = 2; n <= 80; ++n) {
    const CountTable rec = rec_table(n);
    for (int k = 1; k <= n; ++k) ASSERT_EQ(fn_value(rec, static_cast<double>(k) / n), rec[k]);
    const CountTable srec = srec_table(n);
    const auto top = triangular(n);
    for (std::int64_t k = 3; k <= top - 2; ++k) {
      ASSERT_EQ(phin_value(srec, static_cast<double>(k) / static_cast<double>(top)), srec[k]);
    }
  }
}

TEST(ScaledValue, EndpointsAndErrors) {
  for (int n = 2; n <= 60; ++n) {
    EXPECT_EQ(scaled_value(rec_table(n), 1.0), 0.0);
    EXPECT_EQ(scaled_value(srec_table(n), 1.0), 0.0);
  }
  const double expected = oracle::log_big(oracle::factorial_product(9)) / (10 * std::log(10.0));
  EXPECT_NEAR(scaled_value(rec_table(10), 0.0), expected, 1e-14);
  EXPECT_THROW(scaled_value(rec_table(1), 0.5), std::invalid_argument);
  EXPECT_EQ(target_value(Statistic::rec, 0.25), 0.75);
  EXPECT_EQ(target_value(Statistic::srec, 0.75), 0.5);
}

TEST(SupDeviation, TwoRecIsOne) {
  const DeviationReport report = sup_deviation(2, Statistic::rec);
  EXPECT_EQ(report.n, 2);
  EXPECT_EQ(report.stat, Statistic::rec);
  EXPECT_DOUBLE_EQ(report.sup_dev, 1.0);
  EXPECT_EQ(report.argmax_x, 0.0);
  EXPECT_DOUBLE_EQ(report.tau, std::log(2.0));
}

// Reference supremum from scratch: for every constant piece of the curve,
// the deviation against a decreasing target peaks at a piece endpoint.
double reference_sup(const CountTable& table) {
  const int n = table.n();
  const Statistic stat = table.kind();
  const double scale = n * std::log(static_cast<double>(n));
  const std::int64_t top = stat == Statistic::rec ? n : triangular(n);
  double best = 0.0;
  auto value_at = [&](std::int64_t k) {
    // Piece [k/top, (k+1)/top) for k < top, then the point {1}.
    BigInt count;
    if (stat == Statistic::rec) {
      count = table[std::max<std::int64_t>(k, 1)];
    } else if (k < 3) {
      count = table[1];
    } else if (k >= top - 1) {
      count = 1;
    } else {
      count = table[k];
    }
    return oracle::log_big(count) / scale;
  };
  for (std::int64_t k = 0; k < top; ++k) {
    const double psi = value_at(k);
    const double lo = static_cast<double>(k) / static_cast<double>(top);
    const double hi = static_cast<double>(k + 1) / static_cast<double>(top);
    best = std::max({best, std::abs(psi - target_value(stat, lo)), std::abs(psi - target_value(stat, hi))});
  }
  return std::max(best, std::abs(value_at(top) - target_value(stat, 1.0)));
}

TEST(SupDeviation, MatchesReferenceSupremum) {
  for (int n = 2; n <= 40; ++n) {
    for (Statistic stat : {Statistic::rec, Statistic::srec}) {
      const DeviationReport report = sup_deviation(n, stat);
      EXPECT_NEAR(report.sup_dev, reference_sup(count_table(stat, n)), 1e-14) << n;
    }
  }
}

TEST(SupDeviation, DominatesRandomSamples) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int n : {3, 7, 25, 50}) {
    for (Statistic stat : {Statistic::rec, Statistic::srec}) {
      const CountTable table = count_table(stat, n);
      const DeviationReport report = sup_deviation(table);
      for (int i = 0; i < 3000; ++i) {
        const double x = unit(rng);
        ASSERT_LE(std::abs(scaled_value(table, x) - target_value(stat, x)), report.sup_dev + 1e-12);
      }
    }
  }
}

TEST(SupDeviation, Errors) {
  EXPECT_THROW(sup_deviation(1, Statistic::rec), std::invalid_argument);
  EXPECT_THROW(sup_deviation(1, Statistic::srec), std::invalid_argument);
}

TEST(CurveSegments, CoverUnitInterval) {
  for (Statistic stat : {Statistic::rec, Statistic::srec}) {
    for (int n = 2; n <= 12; ++n) {
      const auto segments = curve_segments(count_table(stat, n));
      ASSERT_FALSE(segments.empty());
      EXPECT_EQ(segments.front().lo, 0.0);
      EXPECT_EQ(segments.back().hi, 1.0);
      EXPECT_TRUE(segments.back().closed_right);
      for (std::size_t i = 1; i < segments.size(); ++i) {
        EXPECT_EQ(segments[i].lo, segments[i - 1].hi) << n;
        EXPECT_FALSE(segments[i - 1].closed_right);
      }
    }
  }
}

TEST(TauSeries, ConsistentAndBounded) {
  const auto rec = tau_series(Statistic::rec, 2, 50);
  ASSERT_EQ(rec.size(), 49u);
  double c_emp = 0.0;
  for (const auto& report : rec) {
    EXPECT_EQ(report.sup_dev, sup_deviation(report.n, Statistic::rec).sup_dev);
    c_emp = std::max(c_emp, report.tau);
  }
  for (const auto& report : rec) EXPECT_LE(report.tau, c_emp);
  const auto far = tau_series(Statistic::rec, 200, 200);
  ASSERT_EQ(far.size(), 1u);
  EXPECT_LE(far.front().tau, 1.5 * c_emp);

  const auto srec = tau_series(Statistic::srec, 2, 50);
  ASSERT_EQ(srec.size(), 49u);
  EXPECT_EQ(srec.front().n, 2);
  EXPECT_EQ(srec.back().n, 50);
}

TEST(TauSeries, Errors) {
  EXPECT_THROW(tau_series(Statistic::rec, 1, 5), std::invalid_argument);
  EXPECT_THROW(tau_series(Statistic::rec, 6, 5), std::invalid_argument);
  EXPECT_THROW(tau_series(Statistic::srec, 2, kMaxSrecSeriesSize + 1), SizeLimitError);
}

TEST(CurveSamples, BreakpointsAndGrid) {
  const ScaledCurve rec = curve_samples(rec_table(10), 0, Sampling::breakpoints);
  ASSERT_GE(rec.samples.size(), 2u);
  const double expected = oracle::log_big(oracle::factorial_product(9)) / (10 * std::log(10.0));
  EXPECT_EQ(rec.samples.front().x, 0.0);
  EXPECT_NEAR(rec.samples.front().psi, expected, 1e-14);
  EXPECT_EQ(rec.samples.back().x, 1.0);
  EXPECT_EQ(rec.samples.back().psi, 0.0);
  EXPECT_EQ(rec.samples.back().target, 0.0);
  for (std::size_t i = 1; i < rec.samples.size(); ++i) EXPECT_LT(rec.samples[i - 1].x, rec.samples[i].x);

  const ScaledCurve grid = curve_samples(srec_table(50), 101, Sampling::grid);
  ASSERT_EQ(grid.samples.size(), 101u);
  EXPECT_EQ(grid.samples.back().x, 1.0);
  EXPECT_NEAR(grid.samples[50].x, 0.5, 1e-15);
  EXPECT_NEAR(grid.samples[50].target, std::sqrt(0.5), 1e-15);
  EXPECT_THROW(curve_samples(srec_table(5), 1, Sampling::grid), std::invalid_argument);
}

}  // namespace
}  // namespace recstat
