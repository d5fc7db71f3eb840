#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace recstat {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Raised when (n, k) admits no record-position tuple, e.g. k = 2 for the
/// sum-of-positions statistic.
class InfeasibleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a request exceeds an enumeration or memory cap.
class SizeLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A pair of natural-log bounds [log_lower, log_upper].
struct LogBounds {
  double log_lower = 0.0;
  double log_upper = 0.0;

  bool brackets(double log_value, double slack = 0.0) const noexcept {
    return log_lower <= log_value + slack && log_value <= log_upper + slack;
  }
};

/// n(n+1)/2, the largest possible sum of record positions.
constexpr std::int64_t triangular(std::int64_t n) noexcept { return n * (n + 1) / 2; }

/// floor(scale * x), snapping products within a few ulps below an integer up
/// to it so that x = k / scale computed in floating point maps back to k.
inline std::int64_t floor_scaled(std::int64_t scale, double x) noexcept {
  const double product = static_cast<double>(scale) * x;
  auto k = static_cast<std::int64_t>(std::floor(product));
  const double next = static_cast<double>(k + 1);
  if (next - product <= 4.0 * std::numeric_limits<double>::epsilon() * next) ++k;
  return k;
}

inline std::string to_decimal(const BigInt& value) { return value.get_str(10); }

BigInt factorial(unsigned n);

}  // namespace recstat
