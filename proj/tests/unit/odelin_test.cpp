#include "ecodyn/odelin.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "generators.hpp"

namespace ecodyn {
namespace {

TEST(TimeGrid, NodesAndValidation) {
  const TimeGrid g(0.0, 1.0, 4);
  EXPECT_EQ(g.size(), 5u);
  EXPECT_DOUBLE_EQ(g.node(2), 0.5);
  EXPECT_EQ(g.node(4), 1.0);
  EXPECT_THROW(TimeGrid(1.0, 1.0, 4), ValidationError);
  EXPECT_THROW(TimeGrid(0.0, 1.0, 0), ValidationError);
}

TEST(CharRoots, FactorsExactly) {
  const auto r = char_roots({{1.0, 3.0, 2.0}, {}});
  ASSERT_EQ(r.size(), 2u);
  EXPECT_NEAR(r[0].value.real(), -1.0, 1e-12);
  EXPECT_NEAR(r[1].value.real(), -2.0, 1e-12);
}

TEST(CharRoots, ComplexPair) {
  const auto r = char_roots({{1.0, 2.1, 2.4}, {}});
  ASSERT_EQ(r.size(), 2u);
  const double im = std::sqrt(2.4 - 1.1025);
  EXPECT_NEAR(r[0].value.real(), -1.05, 1e-12);
  EXPECT_NEAR(r[0].value.imag(), im, 1e-12);
  EXPECT_NEAR(r[1].value.imag(), -im, 1e-12);
}

TEST(CharRoots, CubicWithoutConstantTermHasZeroRoot) {
  const auto r = char_roots({{1.0, 2.1, 2.4, 0.0}, {}});
  const auto q = char_roots({{1.0, 2.1, 2.4}, {}});
  bool zero = false;
  for (const auto& x : r) zero = zero || std::abs(x.value) < 1e-12;
  EXPECT_TRUE(zero);
  for (const auto& x : q) {
    bool found = false;
    for (const auto& y : r) found = found || std::abs(x.value - y.value) < 1e-10;
    EXPECT_TRUE(found);
  }
}

TEST(CharRoots, RepeatedRootMerged) {
  const auto r = char_roots({{1.0, 2.0, 1.0}, {}});
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].multiplicity, 2);
}

TEST(CharRoots, OrderZeroIsDomainError) {
  EXPECT_THROW(char_roots({{1.0}, {}}), DomainError);
  EXPECT_THROW(char_roots({{0.0, 1.0}, {}}), DomainError);
}

TEST(CharRoots, RealCoefficientsGiveConjugatePairs) {
  testing::Gen gen(11);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = gen.integer(1, 5);
    Vector c{1.0};
    for (int k = 0; k < n; ++k) c.push_back(gen.uniform(-3.0, 3.0));
    const auto roots = char_roots({c, {}});
    for (const auto& r : roots) {
      if (std::abs(r.value.imag()) < 1e-9) continue;
      bool has_conj = false;
      for (const auto& s : roots) has_conj = has_conj || std::abs(s.value - std::conj(r.value)) < 1e-7;
      EXPECT_TRUE(has_conj);
    }
  }
}

TEST(Analytic, Exponential) {
  const double init[] = {1.0};
  const auto traj = analytic_solution({{1.0, -1.0}, {}}, init, TimeGrid(0.0, 1.0, 10));
  EXPECT_NEAR(traj.at(10, 0), std::numbers::e, 1e-12);
}

TEST(Analytic, Cosine) {
  const double init[] = {1.0, 0.0};
  const auto traj = analytic_solution({{1.0, 0.0, 1.0}, {}}, init, TimeGrid(0.0, std::numbers::pi, 10));
  EXPECT_NEAR(traj.at(10, 0), -1.0, 1e-12);
}

TEST(Analytic, MatchesRk4ForIncomeEquation) {
  const double init[] = {1.0, 0.0};
  const TimeGrid g(0.0, 1.0, 1000);
  const auto a = analytic_solution({{1.0, 2.1, 2.4}, {}}, init, g);
  const auto n = rk4_integrate([](double, const Vector& x) { return Vector{x[1], -2.1 * x[1] - 2.4 * x[0]}; },
                               {1.0, 0.0}, g);
  EXPECT_NEAR(a.at(1000, 0), n.at(1000, 0), 1e-6);
}

TEST(Analytic, RepeatedRootRejected) {
  const double init[] = {1.0, 0.0};
  EXPECT_THROW(analytic_solution({{1.0, 2.0, 1.0}, {}}, init, TimeGrid(0, 1, 4)), RepeatedRootError);
}

TEST(Analytic, ForcedSpecRejected) {
  const double init[] = {1.0};
  EXPECT_THROW(analytic_solution({{1.0, 1.0}, [](double) { return 1.0; }}, init, TimeGrid(0, 1, 4)),
               ValidationError);
}

TEST(Analytic, AgreesWithRk4OnRandomSpecs) {
  testing::Gen gen(12);
  int checked = 0;
  while (checked < 30) {
    const int n = gen.integer(1, 3);
    // Build from roots so |roots| <= 5 and they stay simple.
    std::vector<std::complex<double>> roots;
    if (n >= 2 && gen.uniform(0, 1) < 0.5) {
      const std::complex<double> z(gen.uniform(-2, 1), gen.uniform(0.5, 3));
      roots = {z, std::conj(z)};
      if (n == 3) roots.emplace_back(gen.uniform(-3, 1), 0.0);
    } else {
      for (int k = 0; k < n; ++k) roots.emplace_back(gen.uniform(-3, 1.5), 0.0);
    }
    std::vector<std::complex<double>> poly{1.0};
    for (const auto& r : roots) {
      std::vector<std::complex<double>> next(poly.size() + 1, 0.0);
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i] += poly[i];
        next[i + 1] -= r * poly[i];
      }
      poly = next;
    }
    OdeSpec spec;
    for (const auto& c : poly) spec.coeffs.push_back(c.real());
    bool simple = true;
    for (const auto& r : char_roots(spec)) simple = simple && r.multiplicity == 1;
    if (!simple) continue;

    Vector init;
    for (int k = 0; k < n; ++k) init.push_back(gen.uniform(-1, 1));
    const TimeGrid g(0.0, 2.0, 2000);
    const auto a = analytic_solution(spec, init, g);
    const auto num = rk4_integrate(
        [&](double, const Vector& x) {
          Vector d(x.size());
          for (std::size_t i = 0; i + 1 < x.size(); ++i) d[i] = x[i + 1];
          double top = 0.0;
          for (std::size_t k = 0; k < x.size(); ++k) top -= spec.coeffs[spec.coeffs.size() - 1 - k] * x[k];
          d.back() = top;
          return d;
        },
        init, g);
    EXPECT_LE(sup_relative_deviation(a.component(0), num.component(0)), 1e-5);
    ++checked;
  }
}

TEST(Rk4, ZeroFieldKeepsConstant) {
  const auto t = rk4_integrate([](double, const Vector&) { return Vector{0.0}; }, {5.0}, TimeGrid(0, 1, 10));
  for (std::size_t k = 0; k < t.size(); ++k) EXPECT_EQ(t.at(k, 0), 5.0);
}

TEST(Rk4, ExponentialToHighAccuracy) {
  const auto t = rk4_integrate([](double, const Vector& x) { return x; }, {1.0}, TimeGrid(0, 1, 1000));
  EXPECT_LT(std::abs(t.at(1000, 0) - std::numbers::e), 1e-10);
}

TEST(Rk4, CorrectedHarrodFieldReachesFourFold) {
  const double sigma = 0.05;
  const auto t = rk4_integrate([&](double s, const Vector& y) { return Vector{2 * sigma / (1 - sigma * s) * y[0]}; },
                               {1.0}, TimeGrid(0, 10, 1000));
  EXPECT_NEAR(t.at(1000, 0), 4.0, 1e-6);
}

TEST(Rk4, HalvingStepShrinksErrorByTwelve) {
  auto err = [](std::size_t steps) {
    const auto t = rk4_integrate([](double, const Vector& x) { return x; }, {1.0}, TimeGrid(0, 1, steps));
    double e = 0.0;
    for (std::size_t k = 0; k < t.size(); ++k) e = std::max(e, std::abs(t.at(k, 0) - std::exp(t.time(k))));
    return e;
  };
  EXPECT_GE(err(20) / err(40), 12.0);
}

TEST(Rk4, BlowUpCarriesValidPrefix) {
  try {
    rk4_integrate([](double, const Vector& x) { return Vector{x[0] * x[0] * 1e150}; }, {1e100}, TimeGrid(0, 1, 10));
    FAIL();
  } catch (const BlowUpError& e) {
    EXPECT_GE(e.partial().size(), 1u);
    EXPECT_EQ(e.last_valid_time(), e.partial().time(e.partial().size() - 1));
  }
}

}  // namespace
}  // namespace ecodyn
