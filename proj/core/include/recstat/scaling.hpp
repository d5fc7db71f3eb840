#pragma once

#include "recstat/tables.hpp"
#include "recstat/types.hpp"

#include <cstddef>
#include <vector>

namespace recstat {

/// f_n(x) = c(n, [nx]) for x >= 1/n, else c(n, 1). `rec` must be a rec table.
BigInt fn_value(const CountTable& rec, double x);

/// phi_n(x): (n-1)! for x < 6/(n(n+1)); 1 for x >= 1 - 2/(n(n+1));
/// otherwise C(n, [n(n+1)x/2]). `srec` must be an srec table.
BigInt phin_value(const CountTable& srec, double x);

/// Limit shape: 1 - x for rec, sqrt(1 - x) for srec.
double target_value(Statistic stat, double x) noexcept;

/// ln(f_n(x)) / (n ln n) or ln(phi_n(x)) / (n ln n).
double scaled_value(const CountTable& table, double x);

/// One maximal interval on which the scaled curve is constant.
struct CurveSegment {
  double lo = 0.0;
  double hi = 0.0;
  bool closed_right = false;  // true only for a segment ending at x = 1
  std::int64_t k = 0;         // coefficient index supplying the value
  double psi = 0.0;
};

/// Segments covering [0, 1] in increasing order.
std::vector<CurveSegment> curve_segments(const CountTable& table);

struct DeviationReport {
  int n = 0;
  Statistic stat = Statistic::rec;
  double sup_dev = 0.0;
  double tau = 0.0;  // sup_dev * ln n
  double argmax_x = 0.0;
};

/// Exact supremum of |curve - target| over [0, 1]. On each constant segment
/// the target is monotone, so the supremum sits at an endpoint (the right one
/// taken as a limit from the left).
DeviationReport sup_deviation(const CountTable& table);

DeviationReport sup_deviation(int n, Statistic stat);

inline constexpr int kMaxSrecSeriesSize = 300;

/// DeviationReport for each n in [n_min, n_max], building rows incrementally.
std::vector<DeviationReport> tau_series(Statistic stat, int n_min, int n_max);

struct ScaledPoint {
  double x = 0.0;
  double psi = 0.0;
  double target = 0.0;
};

struct ScaledCurve {
  int n = 0;
  Statistic stat = Statistic::rec;
  std::vector<ScaledPoint> samples;
};

enum class Sampling { breakpoints, grid };

/// Breakpoint sampling emits every segment start plus x = 1 and ignores
/// num_points; grid sampling uses num_points evenly spaced x in [0, 1].
ScaledCurve curve_samples(const CountTable& table, std::size_t num_points, Sampling sampling);

}  // namespace recstat
