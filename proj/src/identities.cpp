#include "fracineq/identities.hpp"

#include <cmath>

#include "fracineq/specfun.hpp"

namespace fracineq {

namespace {

double identity_tolerance(double quad_error) {
  return std::max(10.0 * quad_error, 1e-8);
}

}  // namespace

GapResult hh_left_side(const Instance& inst, const quad::QuadratureConfig& cfg) {
  validate_instance(inst);
  const double eta = eta_of(inst);
  const double a = inst.a;
  const double upper = a + eta;
  const auto& f = inst.fn.f;

  const quad::QuadResult jl = quad::rl_left(f, a, upper, inst.alpha, cfg);
  const quad::QuadResult jr = quad::rl_right(f, a, upper, inst.alpha, cfg);
  const double scale =
      specfun::gamma(inst.alpha + 1.0) / (2.0 * std::pow(eta, inst.alpha));

  GapResult out;
  out.value = 0.5 * (f(a) + f(upper)) - scale * (jl.value + jr.value);
  out.quad_error = scale * (jl.est_abs_error + jr.est_abs_error);
  out.evaluations = jl.evaluations + jr.evaluations;
  out.converged = jl.converged && jr.converged;
  return out;
}

IdentityResidual lemma1_residual(const Instance& inst,
                                 const quad::QuadratureConfig& cfg) {
  validate_instance(inst);
  if (!inst.fn.has_first()) {
    throw CapabilityError("first-derivative identity needs f' for function '" +
                          inst.fn.id + "'");
  }
  const double eta = eta_of(inst);
  const double a = inst.a;
  const double alpha = inst.alpha;
  const auto& fp = inst.fn.f_prime;

  const GapResult gap = hh_left_side(inst, cfg);
  const auto integrand = [&](double t) {
    return (std::pow(1.0 - t, alpha) - std::pow(t, alpha)) *
           fp(a + (1.0 - t) * eta);
  };
  const quad::QuadResult rhs_q = quad::integrate(integrand, 0.0, 1.0,
                                                 quad::WeightKind::none(), cfg);

  IdentityResidual out;
  out.lhs = gap.value;
  out.rhs = 0.5 * eta * rhs_q.value;
  out.residual = std::fabs(out.lhs - out.rhs);
  out.abs_residual = std::fabs(std::fabs(out.lhs) - std::fabs(out.rhs));
  out.combined_quadrature_error =
      gap.quad_error + 0.5 * eta * rhs_q.est_abs_error;
  out.evaluations = gap.evaluations + rhs_q.evaluations;
  out.converged = gap.converged && rhs_q.converged;
  out.passed = out.residual <= identity_tolerance(out.combined_quadrature_error);
  return out;
}

IdentityResidual lemma2_residual(const Instance& inst,
                                 const quad::QuadratureConfig& cfg) {
  validate_instance(inst);
  if (!inst.fn.has_second()) {
    throw CapabilityError("second-derivative identity needs f'' for function '" +
                          inst.fn.id + "'");
  }
  const double eta = eta_of(inst);
  const double a = inst.a;
  const double alpha = inst.alpha;
  const auto& fpp = inst.fn.f_second;

  const GapResult gap = hh_left_side(inst, cfg);
  const auto integrand = [&](double t) {
    return (1.0 - std::pow(1.0 - t, alpha + 1.0) - std::pow(t, alpha + 1.0)) *
           fpp(a + t * eta);
  };
  const quad::QuadResult rhs_q = quad::integrate(integrand, 0.0, 1.0,
                                                 quad::WeightKind::none(), cfg);
  const double scale = eta * eta / (2.0 * (alpha + 1.0));

  IdentityResidual out;
  out.lhs = gap.value;
  out.rhs = scale * rhs_q.value;
  out.residual = std::fabs(out.lhs - out.rhs);
  out.abs_residual = std::fabs(std::fabs(out.lhs) - std::fabs(out.rhs));
  out.combined_quadrature_error = gap.quad_error + scale * rhs_q.est_abs_error;
  out.evaluations = gap.evaluations + rhs_q.evaluations;
  out.converged = gap.converged && rhs_q.converged;
  out.passed = out.residual <= identity_tolerance(out.combined_quadrature_error);
  return out;
}

}  // namespace fracineq
