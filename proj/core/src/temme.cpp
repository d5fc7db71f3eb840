#include "recstat/temme.hpp"

#include "recstat/special_functions.hpp"
#include "recstat/types.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace recstat {
namespace {

constexpr double kResidualTolerance = 1e-12;

void require_interior(int n, int m) {
  if (n < 2 || m < 1 || m > n - 1) {
    throw std::invalid_argument("saddle point requires 1 <= m <= n - 1, got n = " +
                                std::to_string(n) + ", m = " + std::to_string(m));
  }
}

void require_positive_u(double u) {
  if (!(u > 0.0) || !std::isfinite(u)) throw std::domain_error("phi requires u > 0");
}

}  // namespace

double phi_prime(double u, int n, int m) {
  require_positive_u(u);
  return digamma_shift_difference(u + 1.0, n) - m / u;
}

double phi_prime_direct(double u, int n, int m) {
  require_positive_u(u);
  double sum = 0.0;
  for (int j = n; j >= 1; --j) sum += 1.0 / (u + j);
  return sum - m / u;
}

double phi_second(double u, int n, int m) {
  require_positive_u(u);
  return trigamma_shift_difference(u + 1.0, n) + m / (u * u);
}

SaddleBracket saddle_bracket(int n, int m) {
  require_interior(n, m);
  const double x = static_cast<double>(m) / n;
  return {n * x * x / (6.0 * (4.0 / 3.0 - x)), n * x / (1.0 - x) + 1.0};
}

double solve_u1(int n, int m) {
  const auto bracket = saddle_bracket(n, m);
  auto f = [&](double u) { return phi_prime(u, n, m); };
  auto converged = [&](double u, double value) {
    return std::abs(value) <= kResidualTolerance * m / u;
  };

  // phi' < 0 near 0 and > 0 for large u; the bracket only holds for large n,
  // so widen until the signs are right.
  double lo = std::max(bracket.lower, std::numeric_limits<double>::min());
  double hi = bracket.upper;
  while (f(lo) >= 0.0) {
    lo /= 2.0;
    if (lo < std::numeric_limits<double>::min()) throw std::runtime_error("saddle bracket collapsed");
  }
  while (f(hi) <= 0.0) {
    hi *= 2.0;
    if (!std::isfinite(hi)) throw std::runtime_error("saddle bracket diverged");
  }

  for (int iter = 0; iter < 200 && hi - lo > 1e-6 * hi; ++iter) {
    const double mid = lo + (hi - lo) / 2.0;
    const double value = f(mid);
    if (converged(mid, value)) return mid;
    (value < 0.0 ? lo : hi) = mid;
  }

  // Newton polish, falling back to bisection whenever a step leaves [lo, hi].
  double u = lo + (hi - lo) / 2.0;
  for (int iter = 0; iter < 200; ++iter) {
    const double value = f(u);
    if (converged(u, value)) return u;
    (value < 0.0 ? lo : hi) = u;
    double next = u - value / phi_second(u, n, m);
    if (!(next > lo && next < hi)) next = lo + (hi - lo) / 2.0;
    if (next == u) break;
    u = next;
  }
  throw std::runtime_error("saddle point did not converge for n = " + std::to_string(n) +
                           ", m = " + std::to_string(m));
}

TemmeEstimate temme_estimate(int n, int m) {
  require_interior(n, m);
  const double nd = n;
  const double md = m;
  const double u1 = solve_u1(n, m);
  const double t1 = md / (nd - md);
  const double phi = log_gamma(u1 + nd + 1.0) - log_gamma(u1 + 1.0) - md * std::log(u1);
  const double B = phi - nd * std::log1p(t1) + md * std::log(t1);
  const double g = std::sqrt(md * (nd - md) / (nd * phi_second(u1, n, m))) / u1;
  const double log_binomial = log_gamma(nd + 1.0) - log_gamma(md + 1.0) - log_gamma(nd - md + 1.0);
  return {n, m, u1, t1, B, g, B + std::log(g) + log_binomial};
}

TemmeEstimate stirling_estimate(int n, int m) {
  if (n < 3 || m < 2 || m > n - 1) {
    throw std::invalid_argument("stirling_estimate requires 2 <= m <= n - 1, got n = " +
                                std::to_string(n) + ", m = " + std::to_string(m));
  }
  return temme_estimate(n - 1, m - 1);
}

ScaledLimitTable scaled_limit_table(double x, std::span<const int> ns) {
  if (!(x > 0.0 && x < 1.0)) throw std::invalid_argument("x must lie in (0, 1)");
  ScaledLimitTable table{x, {}, {}};
  for (int n : ns) {
    if (n < 2) throw std::invalid_argument("n must be >= 2");
    const auto m = static_cast<int>(floor_scaled(n, x));
    if (m < 1 || m > n - 1) {
      table.skipped.push_back(n);
      continue;
    }
    const double value = temme_estimate(n, m).log_estimate / (n * std::log(static_cast<double>(n)));
    table.points.push_back({n, m, value});
  }
  return table;
}

}  // namespace recstat
