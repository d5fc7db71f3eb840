#include "recstat/scaling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace recstat {
namespace {

void require_unit_interval(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument("x must lie in [0, 1]");
}

void require_kind(const CountTable& table, Statistic stat) {
  if (table.kind() != stat) {
    throw std::invalid_argument(std::string("expected a ") + std::string(to_string(stat)) + " table");
  }
}

void require_scalable(const CountTable& table) {
  // ln n = 0 at n = 1 leaves the scaled curve undefined.
  if (table.n() < 2) throw std::invalid_argument("scaled curves require n >= 2");
}

double log_scale(int n) { return n * std::log(static_cast<double>(n)); }

}  // namespace

BigInt fn_value(const CountTable& rec, double x) {
  require_kind(rec, Statistic::rec);
  require_unit_interval(x);
  const int n = rec.n();
  // x < 1/n exactly when [nx] = 0.
  return rec[std::clamp<std::int64_t>(floor_scaled(n, x), 1, n)];
}

BigInt phin_value(const CountTable& srec, double x) {
  require_kind(srec, Statistic::srec);
  require_unit_interval(x);
  const auto top = triangular(srec.n());
  // x < 6/(n(n+1)) iff [top x] < 3, and x >= 1 - 2/(n(n+1)) iff [top x] >= top - 1.
  const auto k = floor_scaled(top, x);
  if (k < 3) return srec[1];
  if (k >= top - 1) return srec[top];
  return srec[k];
}

double target_value(Statistic stat, double x) noexcept {
  return stat == Statistic::rec ? 1.0 - x : std::sqrt(std::max(0.0, 1.0 - x));
}

double scaled_value(const CountTable& table, double x) {
  require_scalable(table);
  const BigInt value = table.kind() == Statistic::rec ? fn_value(table, x) : phin_value(table, x);
  return big_ln(value) / log_scale(table.n());
}

std::vector<CurveSegment> curve_segments(const CountTable& table) {
  require_scalable(table);
  const int n = table.n();
  const double scale = log_scale(n);
  std::vector<CurveSegment> segments;
  auto add = [&](double lo, double hi, bool closed_right, std::int64_t k) {
    segments.push_back({lo, hi, closed_right, k, big_ln(table[k]) / scale});
  };

  if (table.kind() == Statistic::rec) {
    // c(n,1) on [0, 2/n), c(n,k) on [k/n, (k+1)/n), c(n,n) = 1 at x = 1.
    const double nd = n;
    add(0.0, 2.0 / nd, false, 1);
    for (int k = 2; k < n; ++k) add(k / nd, (k + 1) / nd, false, k);
    add(1.0, 1.0, true, n);
  } else {
    const auto top = triangular(n);
    const double topd = static_cast<double>(top);
    const double first_edge = 3.0 / topd;  // 6/(n(n+1))
    add(0.0, first_edge, false, 1);
    for (std::int64_t k = 3; k <= top - 2; ++k) {
      add(static_cast<double>(k) / topd, static_cast<double>(k + 1) / topd, false, k);
    }
    add(std::max(first_edge, (topd - 1.0) / topd), 1.0, true, top);
  }
  return segments;
}

DeviationReport sup_deviation(const CountTable& table) {
  const auto segments = curve_segments(table);
  const Statistic stat = table.kind();
  DeviationReport report{table.n(), stat, -1.0, 0.0, 0.0};
  auto consider = [&](double psi, double x) {
    const double deviation = std::abs(psi - target_value(stat, x));
    if (deviation > report.sup_dev) {
      report.sup_dev = deviation;
      report.argmax_x = x;
    }
  };
  for (const auto& segment : segments) {
    consider(segment.psi, segment.lo);
    consider(segment.psi, segment.hi);
  }
  report.tau = report.sup_dev * std::log(static_cast<double>(table.n()));
  return report;
}

DeviationReport sup_deviation(int n, Statistic stat) {
  if (n < 2) throw std::invalid_argument("sup_deviation requires n >= 2");
  return sup_deviation(count_table(stat, n));
}

std::vector<DeviationReport> tau_series(Statistic stat, int n_min, int n_max) {
  if (n_min < 2 || n_max < n_min) {
    throw std::invalid_argument("tau series requires 2 <= n_min <= n_max");
  }
  if (stat == Statistic::srec && n_max > kMaxSrecSeriesSize) {
    throw SizeLimitError("srec tau series is limited to n_max <= " +
                         std::to_string(kMaxSrecSeriesSize));
  }
  std::vector<DeviationReport> series;
  series.reserve(static_cast<std::size_t>(n_max - n_min + 1));
  CountTable table = count_table(stat, n_min);
  for (;;) {
    series.push_back(sup_deviation(table));
    if (table.n() == n_max) break;
    table = extend_table(table);
  }
  return series;
}

ScaledCurve curve_samples(const CountTable& table, std::size_t num_points, Sampling sampling) {
  require_scalable(table);
  ScaledCurve curve{table.n(), table.kind(), {}};
  const Statistic stat = table.kind();
  if (sampling == Sampling::breakpoints) {
    for (const auto& segment : curve_segments(table)) {
      if (!curve.samples.empty() && segment.lo <= curve.samples.back().x) continue;
      curve.samples.push_back({segment.lo, segment.psi, target_value(stat, segment.lo)});
    }
    if (curve.samples.back().x < 1.0) {
      curve.samples.push_back({1.0, scaled_value(table, 1.0), target_value(stat, 1.0)});
    }
    return curve;
  }
  if (num_points < 2) throw std::invalid_argument("grid sampling needs at least 2 points");
  const double last = static_cast<double>(num_points - 1);
  for (std::size_t i = 0; i < num_points; ++i) {
    const double x = i + 1 == num_points ? 1.0 : static_cast<double>(i) / last;
    curve.samples.push_back({x, scaled_value(table, x), target_value(stat, x)});
  }
  return curve;
}

}  // namespace recstat
