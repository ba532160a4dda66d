#include "ecodyn/quadrature.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "ecodyn/error.hpp"
#include "generators.hpp"

namespace ecodyn::fredholm {
namespace {

void expect_well_formed(const QuadratureRule& r) {
  EXPECT_NEAR(std::accumulate(r.weights.begin(), r.weights.end(), 0.0), 1.0, 1e-13);
  for (std::size_t i = 0; i < r.size(); ++i) {
    EXPECT_GT(r.weights[i], 0.0);
    EXPECT_GE(r.nodes[i], 0.0);
    EXPECT_LE(r.nodes[i], 1.0);
    if (i > 0) EXPECT_GT(r.nodes[i], r.nodes[i - 1]);
  }
}

TEST(Simpson, WeightsAndNodes) {
  const auto r = simpson_rule(5);
  expect_well_formed(r);
  EXPECT_DOUBLE_EQ(r.weights[0], 1.0 / 12.0);
  EXPECT_DOUBLE_EQ(r.weights[1], 4.0 / 12.0);
  EXPECT_DOUBLE_EQ(r.weights[2], 2.0 / 12.0);
  EXPECT_EQ(r.nodes.back(), 1.0);
}

TEST(Simpson, EvenOrTooSmallRejected) {
  EXPECT_THROW(simpson_rule(4), ValidationError);
  EXPECT_THROW(simpson_rule(1), ValidationError);
}

TEST(Simpson, ExactForCubics) {
  testing::Gen gen(61);
  const auto r = simpson_rule(3);
  for (int i = 0; i < 20; ++i) {
    const double a = gen.uniform(-2, 2), b = gen.uniform(-2, 2), c = gen.uniform(-2, 2), d = gen.uniform(-2, 2);
    const double exact = a / 4 + b / 3 + c / 2 + d;
    EXPECT_NEAR(r.integrate([&](double t) { return ((a * t + b) * t + c) * t + d; }), exact, 1e-14);
  }
}

TEST(GaussLegendre, ExactToDegreeTwoNMinusOne) {
  for (std::size_t n = 1; n <= 12; ++n) {
    const auto r = gauss_legendre_rule(n);
    expect_well_formed(r);
    for (std::size_t deg = 0; deg < 2 * n; ++deg) {
      const double got = r.integrate([&](double t) { return std::pow(t, static_cast<double>(deg)); });
      EXPECT_NEAR(got, 1.0 / static_cast<double>(deg + 1), 1e-13) << n << " " << deg;
    }
  }
}

TEST(GaussLegendre, SymmetricAboutMidpoint) {
  const auto r = gauss_legendre_rule(7);
  for (std::size_t i = 0; i < r.size(); ++i) {
    EXPECT_NEAR(r.nodes[i] + r.nodes[r.size() - 1 - i], 1.0, 1e-14);
    EXPECT_NEAR(r.weights[i], r.weights[r.size() - 1 - i], 1e-14);
  }
}

TEST(Rules, ParseNames) {
  EXPECT_EQ(parse_rule("simpson"), Rule::simpson);
  EXPECT_EQ(parse_rule("gauss-legendre"), Rule::gauss_legendre);
  EXPECT_EQ(parse_rule(to_string(Rule::gauss_legendre)), Rule::gauss_legendre);
  EXPECT_THROW(parse_rule("midpoint"), ValidationError);
}

TEST(Uniform, CumulativeTrapezoidOfLine) {
  const std::vector<double> s{0.0, 1.0, 2.0, 3.0};
  const auto c = cumulative_trapezoid(s, 1.0);
  ASSERT_EQ(c.size(), 4u);
  EXPECT_DOUBLE_EQ(c[0], 0.0);
  EXPECT_DOUBLE_EQ(c[3], 4.5);
}

TEST(Uniform, SimpsonWhenEvenIntervals) {
  std::vector<double> s;
  for (int k = 0; k <= 4; ++k) s.push_back(std::pow(k * 0.25, 3));
  EXPECT_NEAR(uniform_integral(s, 0.25), 0.25, 1e-15);
}

}  // namespace
}  // namespace ecodyn::fredholm
