#pragma once

namespace dmv::specfun {

// Supported argument range of the power-series evaluations. Beyond this the
// alternating J series would need asymptotic expansions; callers get a
// domain_error instead.
inline constexpr double kTMax = 30.0;

// Series truncation: stop once |term| < kSeriesRelCutoff * |partial sum|.
inline constexpr double kSeriesRelCutoff = 1e-17;
inline constexpr int kSeriesMaxTerms = 120;

// Modified Bessel functions of the first kind, orders 0 and 1.
// Relative error <= 1e-14 for |t| <= kTMax.
double bessel_i0(double t);
double bessel_i1(double t);

// Bessel functions of the first kind, orders 0 and 1. The series is summed
// in double-double arithmetic because cancellation removes ~t/ln10 digits;
// relative error <= 1e-12 for |t| <= kTMax.
double bessel_j0(double t);
double bessel_j1(double t);

// Circle-mean and disc-mean coefficients: a_circ(t) = I0(t),
// a_bullet(t) = 2 I1(t)/t with a_bullet(0) = 1.
double coeff_a_circ(double t);
double coeff_a_bullet(double t);

// Log-weighted disc-mean coefficients: a(t) = 2[I0(t) - 1]/t^2 and
// a_tilde(t) = 2[1 - J0(t)]/t^2, both equal to 1/2 at t = 0. Below t = 1 a
// division-free series is used; the quotient form loses all digits as t -> 0.
double coeff_a(double t);
double coeff_a_tilde(double t);

// (2/pi) Integral_0^{pi/2} cosh(t cos(theta)) dtheta, an independent
// integral representation of I0. Midpoint rule, doubled until two successive
// levels agree to 1e-13 relative.
double poisson_i0(double t);

// First positive zero of J1 (bisection on (3, 4.5) to 1e-12).
double first_zero_j1();

namespace detail {
// Both branches of the coefficient functions, exposed so the hand-off at
// t = 1 can be checked for continuity.
double coeff_a_series(double t);
double coeff_a_direct(double t);
double coeff_a_tilde_series(double t);
double coeff_a_tilde_direct(double t);
}  // namespace detail

}  // namespace dmv::specfun
