#pragma once
// Scalar special functions used by the closed-form bound constants.
// All routines are deterministic; accuracy targets are pinned by the unit tests.

#include <stdexcept>

namespace fracineq::specfun {

// Result of an iteratively computed special function.  `est_abs_error` is an
// a-posteriori bound on the truncation + rounding error of `value`; `converged`
// is false when the iteration budget ran out before the tolerance was met.
struct SpecFunResult {
  double value = 0.0;
  double est_abs_error = 0.0;
  bool converged = false;
};

// log(Gamma(x)) for x > 0.  Throws std::domain_error otherwise.
// Absolute error <= 1e-13 over [0.5, 200] (Lanczos sum evaluated in extended
// precision; std::lgamma misses that target near x = 200 by about one ulp).
double log_gamma(double x);

// Gamma(x) = exp(log_gamma(x)) for x > 0.
double gamma(double x);

// Euler beta function B(a, b), a > 0, b > 0.
double beta(double a, double b);

// Unregularized incomplete beta B_x(a, b) = integral_0^x t^(a-1) (1-t)^(b-1) dt
// for x in [0, 1], a > 0, b > 0.  Continued-fraction evaluation of the
// regularized function scaled back by B(a, b); relative error <= 1e-10.
SpecFunResult incomplete_beta(double x, double a, double b);

// Gauss hypergeometric 2F1(a, b; c; z) by direct series summation with the
// term-ratio recurrence.  Requires |z| < 1 and c not a nonpositive integer
// (std::domain_error otherwise).  Stops once the geometric tail bound
// 2 |term| |z| / (1 - |z|) drops below tol * |partial sum| for three
// consecutive terms; `est_abs_error` combines that tail bound with the
// rounding accumulated over the summed magnitudes.  If the term cap is hit
// first the result is returned with converged = false.
SpecFunResult gauss_2f1(double a, double b, double c, double z,
                        double tol = 1e-14);

}  // namespace fracineq::specfun
