#pragma once
// The trapezoid-vs-fractional-mean gap and the two integral identities that
// rewrite it through first and second derivatives.

#include "fracineq/function_library.hpp"
#include "fracineq/quadrature.hpp"

namespace fracineq {

struct GapResult {
  double value = 0.0;       // (f(a) + f(a+eta))/2 - fractional mean
  double quad_error = 0.0;  // propagated quadrature error estimate
  long evaluations = 0;
  bool converged = false;
};

// Left side of the trapezoid comparison:
//   (f(a) + f(a+eta))/2
//     - Gamma(alpha+1) / (2 eta^alpha) * [ (J^alpha_{a+} f)(a+eta)
//                                        + (J^alpha_{(a+eta)-} f)(a) ]
// with eta = eta(b, a).
GapResult hh_left_side(const Instance& inst,
                       const quad::QuadratureConfig& cfg = {});

struct IdentityResidual {
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;      // |lhs - rhs|
  double abs_residual = 0.0;  // ||lhs| - |rhs||, for the magnitude-form reading
  double combined_quadrature_error = 0.0;
  long evaluations = 0;
  bool converged = false;
  bool passed = false;  // residual <= max(10 * quad error, 1e-8)
};

// First-derivative identity: the gap equals
//   (eta/2) * integral_0^1 [ (1-t)^alpha - t^alpha ] f'(a + (1-t) eta) dt.
// Throws CapabilityError when f' is unavailable.
IdentityResidual lemma1_residual(const Instance& inst,
                                 const quad::QuadratureConfig& cfg = {});

// Second-derivative identity: the gap equals
//   eta^2 / (2 (alpha+1)) *
//     integral_0^1 [ 1 - (1-t)^(alpha+1) - t^(alpha+1) ] f''(a + t eta) dt.
// The right side is signed; `abs_residual` additionally records the
// magnitude-level discrepancy.  Throws CapabilityError when f'' is missing.
IdentityResidual lemma2_residual(const Instance& inst,
                                 const quad::QuadratureConfig& cfg = {});

}  // namespace fracineq
