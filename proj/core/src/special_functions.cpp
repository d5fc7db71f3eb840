#include "recstat/special_functions.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace recstat {
namespace {

constexpr double kShiftThreshold = 10.0;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// B_{2k} / (2k (2k-1)), k = 1..8, for ln Gamma.
constexpr std::array<double, 8> kLogGammaCoeffs = {
    1.0 / 12.0,   -1.0 / 360.0,           1.0 / 1260.0, -1.0 / 1680.0,
    1.0 / 1188.0, -691.0 / 360360.0,      1.0 / 156.0,  -3617.0 / 122400.0};
// B_{2k} / (2k), for psi.
constexpr std::array<double, 8> kDigammaCoeffs = {
    1.0 / 12.0,  -1.0 / 120.0,        1.0 / 252.0, -1.0 / 240.0,
    1.0 / 132.0, -691.0 / 32760.0,    1.0 / 12.0,  -3617.0 / 8160.0};
// B_{2k}, for psi'.
constexpr std::array<double, 8> kTrigammaCoeffs = {
    1.0 / 6.0,   -1.0 / 30.0,       1.0 / 42.0, -1.0 / 30.0,
    5.0 / 66.0,  -691.0 / 2730.0,   7.0 / 6.0,  -3617.0 / 510.0};
// |B_18| scaled for each series: first omitted term.
constexpr double kLogGammaTail = 43867.0 / 798.0 / (18.0 * 17.0);
constexpr double kDigammaTail = 43867.0 / 798.0 / 18.0;
constexpr double kTrigammaTail = 43867.0 / 798.0;

void require_positive(double x, const char* name) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw std::domain_error(std::string(name) + " requires a finite argument > 0");
  }
}

// sum_k coeffs[k] * inv_sq^k, k = 0..7, by Horner.
double series_in_inverse_square(const std::array<double, 8>& coeffs, double inv_sq) {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * inv_sq + *it;
  return acc;
}

double pow_int(double base, int exponent) {
  double out = 1.0;
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

}  // namespace

SpecialFunctionValue evaluate_log_gamma(double x) {
  require_positive(x, "log_gamma");
  double shifted = x;
  double product = 1.0;
  while (shifted < kShiftThreshold) {
    product *= shifted;
    shifted += 1.0;
  }
  const double inv = 1.0 / shifted;
  const double log_x = std::log(shifted);
  const double series = inv * series_in_inverse_square(kLogGammaCoeffs, inv * inv);
  const double main = (shifted - 0.5) * log_x - shifted;
  const double log_product = std::log(product);
  const double value = main + 0.5 * std::log(2.0 * std::numbers::pi) + series - log_product;

  const double truncation = kLogGammaTail * pow_int(inv, 17);
  const double rounding =
      4.0 * kEps * (std::abs((shifted - 0.5) * log_x) + shifted + std::abs(log_product) + 1.0);
  return {x, value, truncation + rounding};
}

SpecialFunctionValue evaluate_digamma(double x) {
  require_positive(x, "digamma");
  double shifted = x;
  double reciprocal_sum = 0.0;
  while (shifted < kShiftThreshold) {
    reciprocal_sum += 1.0 / shifted;
    shifted += 1.0;
  }
  const double inv_sq = 1.0 / (shifted * shifted);
  const double series = inv_sq * series_in_inverse_square(kDigammaCoeffs, inv_sq);
  const double value = std::log(shifted) - 0.5 / shifted - series - reciprocal_sum;

  const double truncation = kDigammaTail * pow_int(1.0 / shifted, 18);
  const double rounding = 4.0 * kEps * (std::abs(std::log(shifted)) + reciprocal_sum + 1.0);
  return {x, value, truncation + rounding};
}

SpecialFunctionValue evaluate_trigamma(double x) {
  require_positive(x, "trigamma");
  double shifted = x;
  double square_sum = 0.0;
  while (shifted < kShiftThreshold) {
    square_sum += 1.0 / (shifted * shifted);
    shifted += 1.0;
  }
  const double inv = 1.0 / shifted;
  const double inv_sq = inv * inv;
  const double series = inv_sq * inv * series_in_inverse_square(kTrigammaCoeffs, inv_sq);
  const double value = inv + 0.5 * inv_sq + series + square_sum;

  const double truncation = kTrigammaTail * pow_int(inv, 19);
  const double rounding = 4.0 * kEps * (inv + square_sum);
  return {x, value, truncation + rounding};
}

double log_gamma(double x) { return evaluate_log_gamma(x).value; }
double digamma(double x) { return evaluate_digamma(x).value; }
double trigamma(double x) { return evaluate_trigamma(x).value; }

double digamma_shift_difference(double a, int steps) {
  require_positive(a, "digamma_shift_difference");
  if (steps < 0) throw std::invalid_argument("digamma_shift_difference needs steps >= 0");
  double acc = 0.0;
  while (steps > 0 && a < kShiftThreshold) {
    acc += 1.0 / a;
    a += 1.0;
    --steps;
  }
  if (steps == 0) return acc;

  // Both a and b = a + steps are past the threshold: difference the
  // asymptotic expansions term by term.
  const double s = steps;
  const double b = a + s;
  double diff = std::log1p(s / a) + s / (2.0 * a * b);
  const double inv_a_sq = 1.0 / (a * a);
  const double inv_b_sq = 1.0 / (b * b);
  diff -= inv_b_sq * series_in_inverse_square(kDigammaCoeffs, inv_b_sq) -
          inv_a_sq * series_in_inverse_square(kDigammaCoeffs, inv_a_sq);
  return acc + diff;
}

double trigamma_shift_difference(double a, int steps) {
  require_positive(a, "trigamma_shift_difference");
  if (steps < 0) throw std::invalid_argument("trigamma_shift_difference needs steps >= 0");
  double acc = 0.0;
  while (steps > 0 && a < kShiftThreshold) {
    acc -= 1.0 / (a * a);
    a += 1.0;
    --steps;
  }
  if (steps == 0) return acc;

  const double s = steps;
  const double b = a + s;
  // 1/b - 1/a and (1/b^2 - 1/a^2)/2 in cancellation-free form.
  double diff = -s / (a * b) - s * (a + b) / (2.0 * a * a * b * b);
  const double inv_a = 1.0 / a;
  const double inv_b = 1.0 / b;
  diff += inv_b * inv_b * inv_b * series_in_inverse_square(kTrigammaCoeffs, inv_b * inv_b) -
          inv_a * inv_a * inv_a * series_in_inverse_square(kTrigammaCoeffs, inv_a * inv_a);
  return acc + diff;
}

}  // namespace recstat
