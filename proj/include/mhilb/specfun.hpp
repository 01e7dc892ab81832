#ifndef MHILB_SPECFUN_HPP
#define MHILB_SPECFUN_HPP

// Self-contained real special functions on the positive axis. Everything
// routes through log_gamma so that quotients of large Gamma values never
// overflow before the final exponentiation.

namespace mhilb {

/// Natural log of Gamma(x), x > 0. Relative accuracy ~1e-14 of the value.
double log_gamma(double x);

/// Gamma(x), x > 0. Returns +infinity once the true value exceeds the
/// double range (x >~ 171.62). Relative error <= 1e-12 on (0, 170].
double gamma_fn(double x);

/// Euler Beta B(u, v) = Gamma(u)Gamma(v)/Gamma(u+v), u, v > 0.
double beta_fn(double u, double v);

/// log B(u, v), u, v > 0.
double log_beta(double u, double v);

/// Regularized incomplete Beta I_x(u, v), 0 <= x <= 1, u, v > 0.
/// Continued fraction with the symmetry switch at x = (u+1)/(u+v+2);
/// absolute error <= 1e-10 (typically ~1e-14). Monotone nondecreasing in x.
double reg_inc_beta(double x, double u, double v);

/// Checks the Stirling remainder bound
///   r(x) = Gamma(x) / (sqrt(2 pi) x^{x-1/2} e^{-x}) - 1,
///   |r(x)| <= e^{1/(12x)} - 1,
/// with 1e-13 slack for roundoff. x > 0.
bool stirling_remainder_ok(double x);

} // namespace mhilb

#endif
