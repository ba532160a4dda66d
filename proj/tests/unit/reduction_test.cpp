#include "ecodyn/reduction.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "generators.hpp"

namespace ecodyn::fredholm {
namespace {

double sup_error(const Trajectory& t, const std::function<double(double)>& exact) {
  const std::size_t z = t.index_of("z");
  double worst = 0.0;
  for (std::size_t k = 0; k < t.size(); ++k) worst = std::max(worst, std::abs(t.at(k, z) - exact(t.time(k))));
  return worst;
}

TEST(Reduction, FirstOrderKernelAndFreeTerm) {
  const double init[] = {2.0};
  const auto p = ode_to_integral(OdeSpec{{1.0, 3.0}, {}}, init);
  EXPECT_EQ(p.order, 1u);
  EXPECT_TRUE(p.volterra);
  // phi = z': kernel -a0, free term -a0 z(0).
  EXPECT_DOUBLE_EQ(p.kernel(0.7, 0.2), -3.0);
  EXPECT_DOUBLE_EQ(p.kernel(0.2, 0.7), 0.0);
  EXPECT_DOUBLE_EQ(p.free_term(0.4), -6.0);
}

TEST(Reduction, SecondOrderKernelIsPolynomialInLag) {
  const double init[] = {1.0, 0.5};
  const auto p = ode_to_integral(OdeSpec{{2.0, 2.0, 4.0}, {}}, init);
  ASSERT_EQ(p.monic.size(), 2u);
  EXPECT_DOUBLE_EQ(p.monic[0], 2.0);
  EXPECT_DOUBLE_EQ(p.monic[1], 1.0);
  // -(a1 + a0 (t - eta)).
  EXPECT_DOUBLE_EQ(p.kernel(0.9, 0.4), -(1.0 + 2.0 * 0.5));
  // -(a0 (c0 + c1 t) + a1 c1).
  EXPECT_DOUBLE_EQ(p.free_term(0.5), -(2.0 * (1.0 + 0.25) + 0.5));
}

TEST(Reduction, DecayingExponential) {
  for (double a : {0.5, 1.0, 3.0}) {
    const double init[] = {1.0};
    const auto sol = solve_initial_value(ode_to_integral(OdeSpec{{1.0, a}, {}}, init), TimeGrid(0.0, 1.0, 200));
    EXPECT_LE(sup_error(sol.trajectory, [a](double t) { return std::exp(-a * t); }), 1e-6) << a;
  }
}

TEST(Reduction, Cosine) {
  const double init[] = {1.0, 0.0};
  const auto sol = solve_initial_value(ode_to_integral(OdeSpec{{1.0, 0.0, 1.0}, {}}, init), TimeGrid(0.0, 1.0, 200));
  EXPECT_LE(sup_error(sol.trajectory, [](double t) { return std::cos(t); }), 1e-6);
  EXPECT_LE(sol.error_estimate, 1e-6);
}

TEST(Reduction, ForcedFirstOrder) {
  // z' + z = 1, z(0) = 0: z = 1 - e^-t.
  const double init[] = {0.0};
  const auto sol = solve_initial_value(ode_to_integral(OdeSpec{{1.0, 1.0}, [](double) { return 1.0; }}, init),
                                       TimeGrid(0.0, 1.0, 200));
  EXPECT_LE(sup_error(sol.trajectory, [](double t) { return 1.0 - std::exp(-t); }), 1e-6);
}

TEST(Reduction, MatchesAnalyticOnRandomStableSpecs) {
  testing::Gen gen(81);
  for (int i = 0; i < 10; ++i) {
    const double r1 = gen.uniform(-3.0, -0.2), r2 = gen.uniform(-3.0, -0.2);
    if (std::abs(r1 - r2) < 0.1) continue;
    const OdeSpec spec{{1.0, -(r1 + r2), r1 * r2}, {}};
    const double init[] = {gen.uniform(-1, 1), gen.uniform(-1, 1)};
    const auto exact = analytic_solution(spec, init, TimeGrid(0.0, 1.0, 200));
    const auto sol = solve_initial_value(ode_to_integral(spec, init), TimeGrid(0.0, 1.0, 200));
    const auto z = sol.trajectory.component("z");
    EXPECT_LE(sup_relative_deviation(z, exact.component(0), 1.0), 1e-6);
  }
}

TEST(Reduction, TwoPointCosine) {
  const double zero[] = {1.0};
  const double one[] = {std::cos(1.0)};
  const auto p = ode_to_integral(OdeSpec{{1.0, 0.0, 1.0}, {}}, default_placement(2, zero, one));
  EXPECT_FALSE(p.volterra);
  const auto sol = solve_boundary_value(p, simpson_rule(201), TimeGrid(0.0, 1.0, 100));
  EXPECT_LE(sup_error(sol.trajectory, [](double t) { return std::cos(t); }), 1e-6);
}

TEST(Reduction, TwoPointDerivativeAtRightEnd) {
  // z'' - z = 0, z(0) = 1, z'(1) = sinh(1): z = cosh t.
  const std::vector<BoundaryCondition> bc{{0, 0.0, 1.0}, {1, 1.0, std::sinh(1.0)}};
  const auto p = ode_to_integral(OdeSpec{{1.0, 0.0, -1.0}, {}}, bc);
  auto err = [&](std::size_t n) {
    return sup_error(solve_boundary_value(p, simpson_rule(n), TimeGrid(0.0, 1.0, 50)).trajectory,
                     [](double t) { return std::cosh(t); });
  };
  // The kernel has a kink on t = eta, so the rule converges at second order.
  const double coarse = err(401), fine = err(801);
  EXPECT_LE(fine, 1e-6);
  EXPECT_GE(coarse / fine, 3.5);
}

TEST(Reduction, BadPlacementsRejected) {
  const OdeSpec spec{{1.0, 0.0, 1.0}, {}};
  EXPECT_THROW(ode_to_integral(spec, std::vector<BoundaryCondition>{{0, 0.0, 1.0}, {0, 0.0, 2.0}}), ValidationError);
  EXPECT_THROW(ode_to_integral(spec, std::vector<BoundaryCondition>{{0, 0.0, 1.0}, {2, 1.0, 2.0}}), ValidationError);
  const double init[] = {1.0};
  EXPECT_THROW(ode_to_integral(spec, init), ValidationError);
}

TEST(Reduction, DefaultPlacementSplitsOrders) {
  const double z[] = {1.0, 2.0};
  const double o[] = {3.0};
  const auto bc = default_placement(3, z, o);
  ASSERT_EQ(bc.size(), 3u);
  EXPECT_EQ(bc[1].order, 1u);
  EXPECT_EQ(bc[1].at, 0.0);
  EXPECT_EQ(bc[2].order, 0u);
  EXPECT_EQ(bc[2].at, 1.0);
}

}  // namespace
}  // namespace ecodyn::fredholm
