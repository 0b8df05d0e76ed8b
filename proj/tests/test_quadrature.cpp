#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "fracineq/quadrature.hpp"
#include "oracle.hpp"

using namespace fracineq;
using quad::QuadratureConfig;
using quad::WeightKind;

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrtPi = 1.7724538509055160;
}

TEST_CASE("plain integrals of smooth functions") {
  const auto r1 = quad::integrate([](double x) { return x * x; }, 0.0, 1.0);
  CHECK(r1.converged);
  CHECK(r1.value == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(r1.est_abs_error <= 1e-10);

  const auto r2 = quad::integrate([](double x) { return std::sin(x); }, 0.0,
                                  kPi);
  CHECK(r2.converged);
  CHECK(r2.value == doctest::Approx(2.0).epsilon(1e-12));

  // Empty interval is exactly zero.
  const auto r3 = quad::integrate([](double) { return 5.0; }, 0.7, 0.7);
  CHECK(r3.value == 0.0);
  CHECK(r3.converged);
}

TEST_CASE("power weights reproduce closed forms") {
  const auto one = [](double) { return 1.0; };

  // integral_0^1 (1-t)^(-1/2) dt = 2  (singular side handled by substitution)
  auto r = quad::integrate(one, 0.0, 1.0, WeightKind::left_power(0.5));
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-12));

  r = quad::integrate(one, 0.0, 1.0, WeightKind::right_power(0.5));
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-12));

  // alpha > 1 goes through the direct product path.
  r = quad::integrate(one, 0.0, 1.0, WeightKind::left_power(1.5));
  CHECK(r.value == doctest::Approx(2.0 / 3.0).epsilon(1e-12));

  // Scaling: integral_2^5 (5-t)^(0.25-1) dt = 3^0.25 / 0.25
  r = quad::integrate(one, 2.0, 5.0, WeightKind::left_power(0.25));
  CHECK(r.value ==
        doctest::Approx(std::pow(3.0, 0.25) / 0.25).epsilon(1e-11));

  // Nontrivial integrand against the test-side reference.
  const auto f = [](double t) { return std::exp(t) * std::cos(2.0 * t); };
  r = quad::integrate(f, 0.0, 1.0, WeightKind::right_power(0.3));
  const double ref = testoracle::ref_integrate_endpoints(
      [&](double t, double dlo, double) {
        return std::pow(dlo, 0.3 - 1.0) * f(t);
      },
      0.0, 1.0);
  CHECK(r.value == doctest::Approx(ref).epsilon(1e-10));
}

TEST_CASE("square-root weights reproduce closed forms") {
  const auto one = [](double) { return 1.0; };

  // integral_0^1 sqrt(s/(1-s)) ds = pi/2, both orientations by symmetry.
  auto r = quad::integrate(one, 0.0, 1.0, WeightKind::sqrt_left());
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(kPi / 2.0).epsilon(1e-11));

  r = quad::integrate(one, 0.0, 1.0, WeightKind::sqrt_right());
  CHECK(r.value == doctest::Approx(kPi / 2.0).epsilon(1e-11));

  // The weight lives on the normalized coordinate, so [2, 5] scales by h = 3.
  r = quad::integrate(one, 2.0, 5.0, WeightKind::sqrt_left());
  CHECK(r.value == doctest::Approx(3.0 * kPi / 2.0).epsilon(1e-11));

  // f(s) = s against sqrt_left: integral_0^1 s^(3/2) (1-s)^(-1/2) ds = 3 pi/8.
  r = quad::integrate([](double s) { return s; }, 0.0, 1.0,
                      WeightKind::sqrt_left());
  CHECK(r.value == doctest::Approx(3.0 * kPi / 8.0).epsilon(1e-11));
}

TEST_CASE("integration is linear in the integrand") {
  const auto f = [](double x) { return std::sin(x); };
  const auto g = [](double x) { return std::exp(x); };
  const auto w = WeightKind::left_power(0.75);
  const double lhs =
      quad::integrate([&](double x) { return 2.0 * f(x) + 3.0 * g(x); }, 0.0,
                      1.0, w)
          .value;
  const double rhs = 2.0 * quad::integrate(f, 0.0, 1.0, w).value +
                     3.0 * quad::integrate(g, 0.0, 1.0, w).value;
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
}

TEST_CASE("fractional integrals of constants follow the power law") {
  const auto one = [](double) { return 1.0; };
  for (double alpha : {0.25, 0.5, 1.0, 1.5, 2.0, 3.0}) {
    for (double x : {0.5, 1.0, 1.7}) {
      CAPTURE(alpha);
      CAPTURE(x);
      const double expected =
          std::pow(x, alpha) / std::exp(std::lgamma(alpha + 1.0));
      const auto left = quad::rl_left(one, 0.0, x, alpha);
      CHECK(left.converged);
      CHECK(left.value == doctest::Approx(expected).epsilon(1e-10));
      // Mirror image: right integral at b - x over [0, b].
      const auto right = quad::rl_right(one, 2.0 - x, 2.0, alpha);
      CHECK(right.value == doctest::Approx(expected).epsilon(1e-10));
    }
  }
}

TEST_CASE("fractional integral of t follows the shifted power law") {
  // J^0.5 applied to f(t) = t, at x = 1 from a = 0:
  //   Gamma(2)/Gamma(2.5) * x^1.5 = 4 / (3 sqrt(pi))
  const auto r = quad::rl_left([](double t) { return t; }, 0.0, 1.0, 0.5);
  CHECK(r.value == doctest::Approx(0.75225277806367505).epsilon(1e-11));
  CHECK(std::fabs(r.value - 4.0 / (3.0 * kSqrtPi)) <= 1e-11);
}

TEST_CASE("fractional integrals agree with the test-side reference") {
  const auto f = [](double t) { return std::exp(t); };
  for (double alpha : {0.4, 1.0, 2.5}) {
    CAPTURE(alpha);
    const auto l = quad::rl_left(f, 0.2, 0.9, alpha);
    CHECK(l.value ==
          doctest::Approx(testoracle::ref_rl_left(f, 0.2, 0.9, alpha))
              .epsilon(1e-9));
    const auto r = quad::rl_right(f, 0.2, 0.9, alpha);
    CHECK(r.value ==
          doctest::Approx(testoracle::ref_rl_right(f, 0.2, 0.9, alpha))
              .epsilon(1e-9));
  }
}

TEST_CASE("order-one fractional integral equals the plain integral") {
  const auto f = [](double t) { return std::cos(3.0 * t) + t * t; };
  const auto frac = quad::rl_left(f, 0.0, 1.3, 1.0);
  const auto plain = quad::integrate(f, 0.0, 1.3);
  CHECK(std::fabs(frac.value - plain.value) <= 1e-10);
}

TEST_CASE("half-order semigroup composes to a single integration") {
  // J^{1/2} (J^{1/2} 1) = J^1 1, i.e. x itself.
  const auto one = [](double) { return 1.0; };
  const auto inner = [&](double t) {
    return quad::rl_left(one, 0.0, t, 0.5).value;
  };
  const auto composed = quad::rl_left(inner, 0.0, 1.0, 0.5);
  CHECK(std::fabs(composed.value - 1.0) <= 1e-8);
}

TEST_CASE("doubling the node count tightens the error estimate") {
  // One forced panel isolates the embedded coarse/refined estimate.
  const auto f = [](double x) { return std::sin(10.0 * x) * std::exp(2.0 * x); };
  QuadratureConfig cfg;
  cfg.max_panels = 1;
  cfg.nodes_per_panel = 8;
  const auto e8 = quad::integrate(f, 0.0, 2.0, WeightKind::none(), cfg);
  cfg.nodes_per_panel = 16;
  const auto e16 = quad::integrate(f, 0.0, 2.0, WeightKind::none(), cfg);
  cfg.nodes_per_panel = 32;
  const auto e32 = quad::integrate(f, 0.0, 2.0, WeightKind::none(), cfg);
  CHECK(e8.est_abs_error > 0.0);
  CHECK(e16.est_abs_error <= 1e-3 * e8.est_abs_error);
  CHECK(e32.est_abs_error <= 1.5 * e16.est_abs_error + 1e-13);
}

TEST_CASE("non-finite integrand values raise EvaluationError with location") {
  const auto f = [](double x) { return std::sqrt(x - 0.5); };  // NaN below 0.5
  bool thrown = false;
  try {
    quad::integrate(f, 0.0, 1.0);
  } catch (const quad::EvaluationError& e) {
    thrown = true;
    CHECK(e.abscissa() >= 0.0);
    CHECK(e.abscissa() < 0.5);
  }
  CHECK(thrown);

  // Under the singularity substitution the abscissa is still reported in the
  // original variable.
  thrown = false;
  try {
    quad::integrate(f, 0.0, 1.0, WeightKind::right_power(0.5));
  } catch (const quad::EvaluationError& e) {
    thrown = true;
    CHECK(e.abscissa() >= 0.0);
    CHECK(e.abscissa() < 0.5);
  }
  CHECK(thrown);
}

TEST_CASE("invalid inputs are rejected") {
  const auto one = [](double) { return 1.0; };
  CHECK_THROWS_AS(quad::integrate(one, 1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(quad::integrate(one, 0.0, 1.0, WeightKind::left_power(0.0)),
                  std::domain_error);
  CHECK_THROWS_AS(quad::integrate(one, 0.0, 1.0, WeightKind::left_power(-1.0)),
                  std::domain_error);
  QuadratureConfig bad;
  bad.nodes_per_panel = 1;
  CHECK_THROWS_AS(quad::integrate(one, 0.0, 1.0, WeightKind::none(), bad),
                  std::domain_error);
  bad = {};
  bad.rel_tol = 0.0;
  CHECK_THROWS_AS(quad::integrate(one, 0.0, 1.0, WeightKind::none(), bad),
                  std::domain_error);
  bad = {};
  bad.max_panels = 0;
  CHECK_THROWS_AS(quad::integrate(one, 0.0, 1.0, WeightKind::none(), bad),
                  std::domain_error);
  CHECK_THROWS_AS(quad::rl_left(one, 1.0, 0.5, 0.5), std::domain_error);
  CHECK_THROWS_AS(quad::rl_left(one, 0.0, 1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(quad::rl_right(one, 1.0, 0.5, 0.5), std::domain_error);
}

TEST_CASE("panel-refinement policy agrees with substitution on mild weights") {
  QuadratureConfig pr;
  pr.singularity_policy = quad::SingularityPolicy::panel_refinement;

  // Smooth weight (alpha = 2): both policies integrate the same product.
  const auto f = [](double t) { return std::exp(t); };
  const auto a = quad::integrate(f, 0.0, 1.0, WeightKind::left_power(2.0));
  const auto b = quad::integrate(f, 0.0, 1.0, WeightKind::left_power(2.0), pr);
  CHECK(a.value == doctest::Approx(b.value).epsilon(1e-10));

  // Singular sqrt weight: bisection alone still lands close (nodes never touch
  // the endpoints), just with more panels and a coarser estimate.
  const auto one = [](double) { return 1.0; };
  const auto c = quad::integrate(one, 0.0, 1.0, WeightKind::sqrt_left(), pr);
  CHECK(std::fabs(c.value - kPi / 2.0) <= 1e-6);
}

TEST_CASE("identical inputs produce bit-identical results") {
  const auto f = [](double t) { return std::exp(std::sin(5.0 * t)); };
  const auto r1 = quad::integrate(f, 0.0, 2.0, WeightKind::left_power(0.6));
  const auto r2 = quad::integrate(f, 0.0, 2.0, WeightKind::left_power(0.6));
  CHECK(r1.value == r2.value);
  CHECK(r1.est_abs_error == r2.est_abs_error);
  CHECK(r1.evaluations == r2.evaluations);
}
