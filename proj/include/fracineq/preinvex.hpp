#pragma once
// Grid certification of generalized-convexity envelopes and the two scalar
// inequality steps used when majorizing kernel integrals.

#include "fracineq/function_library.hpp"

namespace fracineq {

// Certification grid: u and v sweep [lo, hi] inclusive with n_u / n_v uniform
// points; t sweeps the open interval as j/(n_t + 1), j = 1..n_t (the envelope
// coefficients blow up at t = 0 and t = 1).
struct CertGrid {
  int n_u = 21;
  int n_v = 21;
  int n_t = 99;
  double tol = 1e-12;
};

struct CertificationReport {
  bool passed = false;
  double max_violation = 0.0;  // max of f(w) - envelope over the grid (signed)
  double argmax_u = 0.0;
  double argmax_v = 0.0;
  double argmax_t = 0.0;
  int grid_u = 0;
  int grid_v = 0;
  int grid_t = 0;
  long points = 0;
};

// Checks  f(u + t*eta(v, u)) <= sqrt(t)/(2 sqrt(1-t)) * f(v)
//                             + (1-lambda) sqrt(1-t) / (2 lambda sqrt(t)) * f(u)
// over the grid, for lambda in (0, 1/2].  Requires fn.nonneg (the envelope
// notion applies to nonnegative functions); the claim itself is verified at
// every evaluated point and a violation raises std::domain_error.  Evaluation
// points leaving the function domain raise std::domain_error naming (u, v, t).
// Ties in the violation maximum keep the lexicographically smallest (u, v, t).
CertificationReport certify_lambda_preinvex(const FunctionSpec& fn,
                                            const InvexityMap& map,
                                            double lambda, double lo, double hi,
                                            const CertGrid& grid = {});

// Same sweep with the symmetric envelope
//   sqrt(t)/(2 sqrt(1-t)) * f(v) + sqrt(1-t)/(2 sqrt(t)) * f(u),
// i.e. the lambda = 1/2 special case.
CertificationReport certify_mt(const FunctionSpec& fn, const InvexityMap& map,
                               double lo, double hi, const CertGrid& grid = {});

// Scalar step used to majorize first-kernel power integrals:
//   for a1 >= a2 >= 0 and p >= 1,  (a1 - a2)^p <= a1^p - a2^p.
// Returns whether the inequality holds within a scale-relative rounding slack
// (equality at p = 1 and at a2 = 0).  Precondition violations throw.
bool check_power_difference(double a1, double a2, double p);

// Scalar step used to majorize the second kernel:
//   for t in [0, 1] and m >= 1,  1 - (1-t)^m - t^m <= 1 - 2^(1-m),
// with equality at t = 1/2 (any m) and at m = 1 (any t).
bool check_one_minus_t_bound(double t, double m);

}  // namespace fracineq
