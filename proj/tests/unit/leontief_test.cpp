#include "ecodyn/leontief.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "generators.hpp"

namespace ecodyn::leontief {
namespace {

MatrixXd two_by_two() {
  MatrixXd A(2, 2);
  A << 0.2, 0.3, 0.1, 0.4;
  return A;
}

TEST(Metzler, RowSums) {
  const auto r = metzler_check(two_by_two());
  EXPECT_TRUE(r.holds);
  EXPECT_TRUE(r.strict_row_exists);
  EXPECT_NEAR(r.row_sums[0], 0.5, 1e-15);
  MatrixXd bad(2, 2);
  bad << 0.6, 0.5, 0.1, 0.1;
  const auto b = metzler_check(bad);
  EXPECT_FALSE(b.holds);
  ASSERT_TRUE(b.offending_row.has_value());
  EXPECT_EQ(*b.offending_row, 0u);
}

TEST(Metzler, AllRowsEqualToOneFails) {
  MatrixXd A(2, 2);
  A << 0.5, 0.5, 0.5, 0.5;
  const auto r = metzler_check(A);
  EXPECT_FALSE(r.holds);
  EXPECT_FALSE(r.strict_row_exists);
}

TEST(Metzler, NegativeEntryRejected) {
  MatrixXd A(2, 2);
  A << 0.2, -0.1, 0.1, 0.4;
  EXPECT_THROW(metzler_check(A), ValidationError);
  EXPECT_THROW(metzler_check(MatrixXd::Zero(2, 3)), ValidationError);
}

TEST(Static, ExactTwoByTwo) {
  VectorXd c(2);
  c << 10.0, 20.0;
  // (E - A) X = c: 0.8 x - 0.3 y = 10, -0.1 x + 0.6 y = 20; det = 0.45.
  const double x = (10.0 * 0.6 + 0.3 * 20.0) / 0.45, y = (0.8 * 20.0 + 0.1 * 10.0) / 0.45;
  for (auto m : {Method::direct, Method::iterate}) {
    const auto r = static_solve(two_by_two(), c, m);
    EXPECT_NEAR(r.X[0], x, 1e-10);
    EXPECT_NEAR(r.X[1], y, 1e-10);
  }
}

TEST(Static, DirectAndIterateAgreeOnRandomMetzler) {
  testing::Gen gen(51);
  for (int i = 0; i < 20; ++i) {
    const int n = gen.integer(2, 8);
    const MatrixXd A = gen.metzler(n);
    const VectorXd c = gen.vector(n, 0.0, 10.0);
    const auto d = static_solve(A, c, Method::direct);
    const auto it = static_solve(A, c, Method::iterate);
    EXPECT_LE((d.X - it.X).lpNorm<Eigen::Infinity>(), 1e-8 * std::max(1.0, d.X.lpNorm<Eigen::Infinity>()));
    EXPECT_LE(d.residual, 1e-10 * std::max(1.0, c.lpNorm<Eigen::Infinity>()));
  }
}

TEST(Static, IterationContractsByRowSumBound) {
  testing::Gen gen(52);
  for (int i = 0; i < 20; ++i) {
    const int n = gen.integer(2, 6);
    const MatrixXd A = gen.metzler(n);
    const VectorXd c = gen.vector(n, 1.0, 10.0);
    const double bound = A.rowwise().sum().maxCoeff();
    const auto r = static_solve(A, c, Method::iterate);
    ASSERT_TRUE(r.log.has_value());
    const auto& res = r.log->residuals;
    for (std::size_t s = 5; s + 1 < res.size(); ++s) {
      if (res[s] < 1e-13) break;
      EXPECT_LE(res[s + 1] / res[s], bound + 0.05);
    }
  }
}

TEST(Static, NonNegativeOutputForNonNegativeDemand) {
  testing::Gen gen(53);
  for (int i = 0; i < 20; ++i) {
    const int n = gen.integer(2, 6);
    const auto r = static_solve(gen.metzler(n), gen.vector(n, 0.0, 5.0), Method::direct);
    EXPECT_GE(r.X.minCoeff(), -1e-12);
  }
}

TEST(Static, IterationRequiresMetzler) {
  MatrixXd A(2, 2);
  A << 0.6, 0.5, 0.1, 0.1;
  EXPECT_THROW(static_solve(A, VectorXd::Ones(2), Method::iterate), PreconditionError);
}

TEST(Static, SingularRejected) {
  MatrixXd A(2, 2);
  A << 0.5, 0.5, 0.5, 0.5;
  EXPECT_THROW(static_solve(A, VectorXd::Ones(2), Method::direct), SingularityError);
}

LeontiefModel model_for(const MatrixXd& A, const VectorXd& c, const VectorXd& x0, const VectorXd& xd0,
                        std::size_t order = 2) {
  LeontiefModel m;
  m.A = A;
  m.demand = constant_demand(c);
  m.X0 = x0;
  m.Xdot0 = xd0;
  m.order = order;
  return m;
}

TEST(Taylor, Coefficients) {
  const auto t = taylor_reduce(model_for(two_by_two(), VectorXd::Ones(2), VectorXd::Zero(2), VectorXd::Zero(2)));
  ASSERT_EQ(t.coefficients.size(), 2u);
  EXPECT_DOUBLE_EQ(t.coefficients[0], 1.0);
  EXPECT_DOUBLE_EQ(t.coefficients[1], 0.5);
  EXPECT_NEAR((t.B - (MatrixXd::Identity(2, 2) - two_by_two())).norm(), 0.0, 1e-15);
}

TEST(Dynamic, OrderOneRelaxesTowardStatic) {
  const VectorXd c = VectorXd::Constant(2, 10.0);
  const auto m = model_for(two_by_two(), c, VectorXd::Zero(2), VectorXd::Zero(2), 1);
  const auto t = dynamic_solve(m);
  // X' = C - B X: X = X_s (1 - exp(-B t)) with B diagonalisable; check by matrix exponential series.
  const MatrixXd B = m.B();
  const VectorXd Xs = B.lu().solve(c);
  MatrixXd expm = MatrixXd::Identity(2, 2), term = MatrixXd::Identity(2, 2);
  for (int k = 1; k < 30; ++k) {
    term = term * (-B) / k;
    expm += term;
  }
  const VectorXd X1 = Xs - expm * Xs;
  EXPECT_NEAR(t.at(t.size() - 1, 0), X1[0], 1e-10);
  EXPECT_NEAR(t.at(t.size() - 1, 1), X1[1], 1e-10);
}

TEST(Dynamic, HigherOrderUnsupported) {
  auto m = model_for(two_by_two(), VectorXd::Ones(2), VectorXd::Zero(2), VectorXd::Zero(2), 3);
  EXPECT_THROW(dynamic_solve(m), UnsupportedError);
}

TEST(Volterra, AgreesWithRk4OnRandomInstances) {
  testing::Gen gen(54);
  for (int i = 0; i < 10; ++i) {
    const int n = gen.integer(2, 3);
    const auto m = model_for(gen.metzler(n), gen.vector(n, 0.0, 5.0), gen.vector(n, 0.0, 2.0),
                             gen.vector(n, -1.0, 1.0));
    const auto rk = dynamic_solve(m, 400);
    const auto vo = volterra_solve(m, TimeGrid(0.0, 1.0, 400));
    double worst = 0.0, scale = 0.0;
    for (std::size_t k = 0; k < rk.size(); ++k) {
      for (int j = 0; j < n; ++j) {
        worst = std::max(worst, std::abs(rk.at(k, j) - vo.at(k, j)));
        scale = std::max(scale, std::abs(rk.at(k, j)));
      }
    }
    EXPECT_LE(worst, 1e-4 * std::max(1.0, scale)) << "instance " << i;
  }
}

TEST(DemandScale, RecoversKnownAlpha) {
  const auto m = model_for(two_by_two(), VectorXd::Constant(2, 10.0), VectorXd::Ones(2), VectorXd::Zero(2));
  // Target built from alpha = 0.4 exactly.
  auto scaled = m;
  scaled.demand = constant_demand(VectorXd::Constant(2, 4.0));
  const auto traj = dynamic_solve(scaled);
  VectorXd target(2);
  for (int j = 0; j < 2; ++j) {
    const Vector col = traj.component(static_cast<std::size_t>(j));
    double s = 0.0;
    for (std::size_t k = 0; k + 1 < col.size(); ++k) s += 0.5 * (col[k] + col[k + 1]) / (col.size() - 1);
    target[j] = s;
  }
  const auto d = demand_scale(m, target);
  EXPECT_NEAR(d.alpha, 0.4, 1e-5);
}

TEST(DemandScale, InfeasibleTargetCarriesUnclamped) {
  const auto m = model_for(two_by_two(), VectorXd::Constant(2, 1.0), VectorXd::Ones(2), VectorXd::Zero(2));
  try {
    demand_scale(m, VectorXd::Constant(2, 100.0));
    FAIL();
  } catch (const InfeasibleError& e) {
    EXPECT_GT(e.unclamped(), 1.0);
  }
}

TEST(DemandScale, ZeroDemandDegenerate) {
  const auto m = model_for(two_by_two(), VectorXd::Zero(2), VectorXd::Ones(2), VectorXd::Zero(2));
  EXPECT_THROW(demand_scale(m, VectorXd::Constant(2, 2.0)), DegenerateError);
}

}  // namespace
}  // namespace ecodyn::leontief
