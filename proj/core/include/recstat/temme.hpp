#pragma once

#include <span>
#include <vector>

namespace recstat {

/// Saddle-point estimate for the coefficient of u^m in (u+1)(u+2)...(u+n).
///
/// With phi(u) = ln((u+1)...(u+n)) - m ln u and u1 the positive root of
/// phi'(u) = 0:
///   t1 = m/(n-m),  B = phi(u1) - n ln(1+t1) + m ln t1,
///   g  = u1^-1 sqrt(m(n-m) / (n phi''(u1))),
///   log_estimate = B + ln g + ln binom(n, m).
///
/// The polynomial is q(q+1)...(q+n) divided by q, so this coefficient is
/// c(n+1, m+1). Use stirling_estimate() to target c(n, m) itself.
struct TemmeEstimate {
  int n = 0;
  int m = 0;
  double u1 = 0.0;
  double t1 = 0.0;
  double B = 0.0;
  double g = 0.0;
  double log_estimate = 0.0;
};

/// phi'(u) = psi(u+n+1) - psi(u+1) - m/u.
double phi_prime(double u, int n, int m);

/// phi'(u) by summing 1/(u+1) + ... + 1/(u+n) term by term. O(n); kept as a
/// cross-check on phi_prime.
double phi_prime_direct(double u, int n, int m);

/// phi''(u) = psi'(u+n+1) - psi'(u+1) + m/u^2.
double phi_second(double u, int n, int m);

/// Bracketing interval [lower, upper] for u1 before any widening:
/// n x^2/(6(4/3-x)) and n x/(1-x) + 1 with x = m/n.
struct SaddleBracket {
  double lower = 0.0;
  double upper = 0.0;
};

SaddleBracket saddle_bracket(int n, int m);

/// Positive root of phi'. Bisection on the (widened) bracket, then Newton
/// until |phi'(u)| <= 1e-12 m/u. Requires 1 <= m <= n-1.
double solve_u1(int n, int m);

TemmeEstimate temme_estimate(int n, int m);

/// Estimate of ln c(n, m) for 2 <= m <= n-1: since
/// c(n,m) = [u^(m-1)] (u+1)...(u+n-1), this is temme_estimate(n-1, m-1).
TemmeEstimate stirling_estimate(int n, int m);

struct ScaledLimitPoint {
  int n = 0;
  int m = 0;
  double value = 0.0;  // log_estimate / (n ln n)
};

struct ScaledLimitTable {
  double x = 0.0;
  std::vector<ScaledLimitPoint> points;
  std::vector<int> skipped;  // n with [nx] outside [1, n-1]
};

/// log_estimate/(n ln n) at m = [nx] for each listed n; tends to 1 - x.
ScaledLimitTable scaled_limit_table(double x, std::span<const int> ns);

}  // namespace recstat
