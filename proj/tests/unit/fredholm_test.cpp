#include "ecodyn/fredholm.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "generators.hpp"

namespace ecodyn::fredholm {
namespace {

// The product term carries lambda; without it the bracket does not satisfy
// H = K + lambda K H.
double resolvent_t_plus_eta(double t, double eta, double lambda) {
  return (6.0 * (lambda - 2.0) * (t + eta) - 12.0 * lambda * t * eta - 4.0 * lambda) /
         (lambda * lambda + 12.0 * lambda - 12.0);
}

TEST(Kernels, CatalogueValues) {
  EXPECT_EQ(kernel_t_plus_eta()(0.25, 0.5), 0.75);
  EXPECT_NEAR(kernel_exp_diff()(1.0, 0.0), std::numbers::e, 1e-15);
  EXPECT_EQ(kernel_zero()(0.3, 0.7), 0.0);
  const auto d = kernel_degenerate([](double) { return 1.0; }, [](double t) { return t - 0.5; }, 2.0);
  EXPECT_NEAR(d(0.75, 0.1), 1.0 + 2.0 * 0.25, 1e-15);
  EXPECT_NO_THROW(d.validate());
}

TEST(Kernels, NonFiniteRejected) {
  const auto k = kernel_product("bad", [](double t) { return 1.0 / (t - 0.5); }, [](double) { return 1.0; });
  EXPECT_THROW(k.validate(), ValidationError);
}

TEST(Kernels, SumCombines) {
  const auto k = kernel_sum(kernel_t_plus_eta(), kernel_exp_diff(), 3.0);
  EXPECT_NEAR(k(0.2, 0.4), 0.6 + 3.0 * std::exp(-0.2), 1e-15);
}

TEST(Nystrom, MatricesMatchKernel) {
  const NystromDiscretization d(kernel_t_plus_eta(), Rule::simpson, 5);
  EXPECT_EQ(d.size(), 5u);
  EXPECT_EQ(d.K()(1, 3), d.nodes()[1] + d.nodes()[3]);
  EXPECT_DOUBLE_EQ(d.weighted()(1, 3), d.K()(1, 3) * d.weights()[3]);
}

TEST(Spectrum, TPlusEtaCharacteristicNumbers) {
  const NystromDiscretization d(kernel_t_plus_eta(), Rule::simpson, 201);
  const auto rep = char_numbers(d);
  ASSERT_EQ(rep.characteristic_numbers.size(), 2u);
  EXPECT_NEAR(rep.characteristic_numbers[0].real(), -6.0 + 4.0 * std::sqrt(3.0), 1e-4);
  EXPECT_NEAR(rep.characteristic_numbers[1].real(), -6.0 - 4.0 * std::sqrt(3.0), 1e-4);
  EXPECT_LT(eigen_residual(d, rep), 1e-10);
}

TEST(Spectrum, ExpDiffSingleCharacteristicNumber) {
  for (auto rule : {Rule::simpson, Rule::gauss_legendre}) {
    const NystromDiscretization d(kernel_exp_diff(), rule, rule == Rule::simpson ? 201 : 20);
    const auto rep = char_numbers(d);
    ASSERT_EQ(rep.characteristic_numbers.size(), 1u);
    EXPECT_NEAR(rep.characteristic_numbers[0].real(), 1.0, 1e-8);
  }
}

TEST(Spectrum, ZeroKernelHasNone) {
  const NystromDiscretization d(kernel_zero(), Rule::simpson, 11);
  EXPECT_TRUE(char_numbers(d).characteristic_numbers.empty());
}

TEST(Solve, TPlusEtaClosedForm) {
  const NystromDiscretization d(kernel_t_plus_eta(), Rule::simpson, 201);
  const auto sol = nystrom_solve(d, 0.5, [](double) { return 1.0; });
  for (double t : {0.0, 0.1, 0.37, 0.5, 0.9, 1.0}) {
    // 1 + lambda int H(t, eta) deta with the bracket integrated in eta.
    const double phi = 1.0 + 0.5 * (6.0 * (0.5 - 2.0) * (t + 0.5) - 0.5 * 6.0 * t - 2.0) / (0.25 + 6.0 - 12.0);
    EXPECT_NEAR(sol(t), phi, 1e-5);
  }
  EXPECT_NEAR(sol(0.0), 36.0 / 23.0, 1e-5);
  EXPECT_NEAR(sol(1.0) - sol(0.0), 24.0 / 23.0, 1e-5);
}

// phi = a + b t must satisfy b = lambda (a + b / 2) and a = 1 + lambda (a / 2 + b / 3).
TEST(Solve, TPlusEtaLinearSolutionSatisfiesMomentEquations) {
  const NystromDiscretization d(kernel_t_plus_eta(), Rule::gauss_legendre, 8);
  const double lambda = 0.5;
  const auto sol = nystrom_solve(d, lambda, [](double) { return 1.0; });
  const double a = sol(0.0), b = sol(1.0) - sol(0.0);
  EXPECT_NEAR(b, lambda * (a + b / 2.0), 1e-12);
  EXPECT_NEAR(a, 1.0 + lambda * (a / 2.0 + b / 3.0), 1e-12);
  // Dropping lambda from the product term gives slope 30/23, which fails the first relation.
  EXPECT_GT(std::abs(30.0 / 23.0 - lambda * (a + 30.0 / 23.0 / 2.0)), 0.1);
}

TEST(Resolvent, ClosedFormSatisfiesResolventEquation) {
  const auto rule = gauss_legendre_rule(10);
  for (double lambda : {-3.0, 0.5, 0.9}) {
    for (double t : {0.1, 0.6}) {
      for (double eta : {0.2, 0.95}) {
        const double integral = rule.integrate([&](double s) { return (t + s) * resolvent_t_plus_eta(s, eta, lambda); });
        EXPECT_NEAR(resolvent_t_plus_eta(t, eta, lambda), t + eta + lambda * integral, 1e-12);
      }
    }
  }
}

TEST(Solve, ExpDiffSeparableClosedForm) {
  const NystromDiscretization d(kernel_exp_diff(), Rule::simpson, 201);
  for (double lambda : {0.5, -2.0, 3.0}) {
    const auto sol = nystrom_solve(d, lambda, [](double t) { return t; });
    const double moment = 1.0 - 2.0 / std::numbers::e;  // int_0^1 eta e^-eta
    for (double t : {0.0, 0.25, 0.8, 1.0}) {
      EXPECT_NEAR(sol(t), t + lambda / (1.0 - lambda) * std::exp(t) * moment, 1e-8) << lambda;
    }
  }
}

TEST(Solve, NearCharacteristicNumberRefused) {
  const NystromDiscretization d(kernel_exp_diff(), Rule::gauss_legendre, 20);
  const double lambda = char_numbers(d).characteristic_numbers[0].real();
  EXPECT_THROW(nystrom_solve(d, lambda, [](double) { return 1.0; }), SpectrumProximityError);
}

TEST(Solve, SolutionSatisfiesDiscreteEquation) {
  testing::Gen gen(71);
  const NystromDiscretization d(kernel_t_plus_eta(), Rule::gauss_legendre, 16);
  for (int i = 0; i < 10; ++i) {
    const double lambda = gen.uniform(-5.0, 0.8);
    const double a = gen.uniform(-1, 1), b = gen.uniform(-3, 3);
    const auto sol = nystrom_solve(d, lambda, [&](double t) { return std::sin(b * t) + a; });
    for (std::size_t j = 0; j < d.size(); ++j) {
      const double t = d.nodes()[j];
      EXPECT_NEAR(sol.at_nodes()[j], std::sin(b * t) + a + lambda * d.apply_at(t, sol.at_nodes()), 1e-10);
      EXPECT_NEAR(sol(t), sol.at_nodes()[j], 1e-10);
    }
  }
}

TEST(Resolvent, TPlusEtaClosedForm) {
  const NystromDiscretization d(kernel_t_plus_eta(), Rule::simpson, 201);
  const auto H = resolvent(d, 0.5);
  double worst = 0.0;
  for (std::size_t i = 0; i < d.size(); i += 10) {
    for (std::size_t j = 0; j < d.size(); j += 10) {
      worst = std::max(worst, std::abs(H(i, j) - resolvent_t_plus_eta(d.nodes()[i], d.nodes()[j], 0.5)));
    }
  }
  EXPECT_LT(worst, 1e-6);
}

TEST(Resolvent, AtZeroIsKernel) {
  const NystromDiscretization d(kernel_t_plus_eta(), Rule::simpson, 11);
  EXPECT_EQ((resolvent(d, 0.0) - d.K()).norm(), 0.0);
}

TEST(Resolvent, MatchesDirectSolveForRandomFreeTerms) {
  testing::Gen gen(72);
  const NystromDiscretization d(kernel_exp_diff(), Rule::simpson, 101);
  const double lambda = 0.3;
  const auto H = resolvent(d, lambda);
  for (int i = 0; i < 10; ++i) {
    const double a = gen.uniform(-2, 2), b = gen.uniform(-4, 4), c = gen.uniform(-1, 1);
    const Sampler q = [=](double t) { return a + c * std::cos(b * t); };
    const auto direct = nystrom_solve(d, lambda, q);
    const auto via = apply_resolvent(d, H, lambda, q);
    EXPECT_LT((direct.at_nodes() - via).lpNorm<Eigen::Infinity>(), 1e-10);
  }
}

TEST(Degenerate, ResidualVanishesForAnyMu) {
  const auto rule = simpson_rule(201);
  const Sampler rho = [](double) { return 1.0; };
  const Sampler sigma = [](double t) { return t - 0.5; };
  for (double mu : {0.0, 1.0, 10.0, 100.0, -37.5}) EXPECT_LE(degenerate_residual(rho, sigma, mu, rule), 1e-8) << mu;
}

TEST(Degenerate, SideConditionsChecked) {
  const auto rule = simpson_rule(21);
  EXPECT_THROW(degenerate_residual([](double) { return 1.0; }, [](double t) { return t; }, 1.0, rule),
               PreconditionError);
  EXPECT_THROW(degenerate_residual([](double) { return 2.0; }, [](double t) { return t - 0.5; }, 1.0, rule),
               PreconditionError);
}

TEST(Sweep, DegenerateFamilyFlaggedEverywhere) {
  const auto one = [](double) { return 1.0; };
  const NystromDiscretization k0(kernel_product("rho rho", one, one), Rule::simpson, 101);
  const NystromDiscretization k1(kernel_product("sigma rho", [](double t) { return t - 0.5; }, one), Rule::simpson,
                                 101);
  const std::vector<double> grid{0.0, 1.0, 10.0, 100.0};
  const auto rep = param_singularity_sweep(k0, k1, grid);
  ASSERT_EQ(rep.points.size(), 4u);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    EXPECT_EQ(rep.points[i].mu, grid[i]);
    EXPECT_TRUE(rep.points[i].flagged) << grid[i];
  }
  EXPECT_EQ(rep.classification, KernelClass::exceptional);
  EXPECT_EQ(to_string(rep.classification), "exceptional");
}

TEST(Sweep, RegularFamilyNotFlagged) {
  const NystromDiscretization k0(kernel_t_plus_eta(), Rule::simpson, 51);
  const NystromDiscretization k1(kernel_exp_diff(), Rule::simpson, 51);
  const auto rep = param_singularity_sweep(k0, k1, {-0.3, 0.1, 0.2, 0.35});
  for (const auto& p : rep.points) EXPECT_FALSE(p.flagged);
  EXPECT_EQ(rep.classification, KernelClass::non_exceptional);
  EXPECT_EQ(to_string(KernelClass::non_exceptional), "non-exceptional");
}

TEST(Sweep, MismatchedNodesRejected) {
  const NystromDiscretization k0(kernel_t_plus_eta(), Rule::simpson, 11);
  const NystromDiscretization k1(kernel_t_plus_eta(), Rule::simpson, 21);
  EXPECT_THROW(param_singularity_sweep(k0, k1, {0.0}), ValidationError);
}

TEST(NamedFunctions, Catalogue) {
  EXPECT_EQ(named_function("one")(0.3), 1.0);
  EXPECT_EQ(named_function("t-half")(0.75), 0.25);
  EXPECT_NEAR(named_function("exp-neg")(1.0), std::exp(-1.0), 1e-15);
  EXPECT_THROW(named_function("tan"), ValidationError);
}

}  // namespace
}  // namespace ecodyn::fredholm
