#pragma once

// Leontief expenses-output balance X = A X + C: static solves, the Metzler
// condition, the Taylor-truncated dynamic model on the normalised clock
// t_bar = t / t0 and its Volterra form, and demand scaling.

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <vector>

#include "ecodyn/odelin.hpp"

namespace ecodyn::leontief {

using Eigen::MatrixXd;
using Eigen::VectorXd;

struct MetzlerReport {
  bool holds = false;
  std::vector<double> row_sums;
  bool strict_row_exists = false;
  std::optional<std::size_t> offending_row;  ///< first row whose sum exceeds 1
};

/// All row sums <= 1 with at least one strictly below. Throws ValidationError
/// for non-square input or a negative entry.
MetzlerReport metzler_check(const MatrixXd& A);

enum class Method { direct, iterate };

struct IterationLog {
  std::size_t iterations = 0;
  std::vector<double> residuals;  ///< ||X_{s+1} - X_s||_inf per step
};

struct StaticResult {
  VectorXd X;
  double residual = 0.0;  ///< ||X - A X - c||_inf
  std::optional<IterationLog> log;
};

/// Pivots below this fraction of ||E - A||_inf count as singular.
inline constexpr double kPivotThreshold = 1e-12;

/// direct: LU of E - A, SingularityError on a tiny pivot.
/// iterate: X_{s+1} = A X_s + c from X_0 = c until the residual is <= tol;
/// requires the Metzler condition; NonConvergenceError past max_iter.
StaticResult static_solve(const MatrixXd& A, const VectorXd& c, Method method, double tol = 1e-12,
                          std::size_t max_iter = 100000);

using Demand = std::function<VectorXd(double t_bar)>;

struct LeontiefModel {
  MatrixXd A;
  Demand demand;
  VectorXd X0;
  VectorXd Xdot0;
  double t0 = 1.0;
  std::size_t order = 2;

  std::size_t size() const { return static_cast<std::size_t>(A.rows()); }
  /// E - A.
  MatrixXd B() const;
  void validate() const;
};

/// Constant demand vector.
Demand constant_demand(VectorXd c);

struct TaylorReduction {
  std::vector<double> coefficients;  ///< 1/k! for X^(k), k = 1..m
  MatrixXd B;
};

/// sum_{k=1..m} X^(k) / k! = -B X + C on t_bar in [0, 1].
TaylorReduction taylor_reduce(const LeontiefModel& model);

inline constexpr std::size_t kDefaultDynamicSteps = 400;

/// RK4 on the first-order form (dimension m n); columns x1..xn. Orders 1 and 2.
Trajectory dynamic_solve(const LeontiefModel& model, std::size_t steps = kDefaultDynamicSteps);

/// Order 2 only: U = X'' solves
/// U = 2 [C - B (Xdot0 t + X0) - Xdot0] - 2 int_0^t [E + B (t - eta)] U deta,
/// marched with the trapezoid rule plus Richardson; X is rebuilt from U.
Trajectory volterra_solve(const LeontiefModel& model, const TimeGrid& grid);

struct DemandScale {
  double alpha = 1.0;
  double unclamped = 1.0;
  double aggregate_base = 0.0;      ///< sum_i int x_i at alpha = 0
  double aggregate_full = 0.0;      ///< sum_i int x_i at alpha = 1
  std::vector<double> component_residuals;  ///< int x_i(alpha) - x*_i
};

/// alpha in (0, 1] matching sum_i int_0^1 x_i = sum_i x*_i, using affinity in alpha.
/// DegenerateError for zero response, InfeasibleError (carrying the
/// unclamped value) when the match needs alpha outside (0, 1].
DemandScale demand_scale(const LeontiefModel& model, const VectorXd& X_star, double tol = 1e-9,
                         std::size_t steps = kDefaultDynamicSteps);

}  // namespace ecodyn::leontief
