#pragma once

namespace recstat {

/// A special-function evaluation together with an estimate of its absolute
/// error (series truncation plus accumulated rounding).
struct SpecialFunctionValue {
  double argument = 0.0;
  double value = 0.0;
  double abs_error_bound = 0.0;
};

// All three functions shift the argument upward by recurrence until it is at
// least 10, then sum the Bernoulli asymptotic series. Arguments must be > 0.

double log_gamma(double x);
double digamma(double x);
double trigamma(double x);

SpecialFunctionValue evaluate_log_gamma(double x);
SpecialFunctionValue evaluate_digamma(double x);
SpecialFunctionValue evaluate_trigamma(double x);

/// psi(a + steps) - psi(a) = sum_{j=0}^{steps-1} 1/(a+j), without the
/// cancellation of subtracting two digamma values.
double digamma_shift_difference(double a, int steps);

/// psi'(a + steps) - psi'(a) = -sum_{j=0}^{steps-1} 1/(a+j)^2.
double trigamma_shift_difference(double a, int steps);

}  // namespace recstat
