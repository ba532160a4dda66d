#pragma once

// Harrod growth model: the classical exponential law, the corrected model in
// which capital tracks the time-averaged income intensity, the discrete
// year-by-year model and the residuals that show the two disagree.
//
// All operations run on the dimensionless clock t^ = t / t*.

#include <cstddef>
#include <utility>
#include <vector>

#include "ecodyn/odelin.hpp"

namespace ecodyn::harrod {

struct HarrodParams {
  double mu = 0.5;        ///< accumulation share, dimensionless
  double nu_star = 10.0;  ///< base capital/income ratio, years
  double t_star = 1.0;    ///< length of the year in physical time units
  double Y0 = 1.0;        ///< initial income intensity, $/s
  double K0 = 1.0;        ///< initial capital, $

  double sigma() const { return mu / nu_star; }

  /// 0 <= mu < 1 (mu = 0 is the no-investment limit), positive scales.
  void validate() const;
};

/// Capital/income ratio over an interval of length t^ years: nu* / t^.
double scaled_ratio(const HarrodParams& p, double t_hat);

/// Y = C + S, S = I, S = mu Y applied to an income sample.
struct FlowSplit {
  double Y, C, S, I;
};
FlowSplit split_flows(double mu, double income);

struct ClassicalRun {
  Trajectory trajectory;  ///< Y, C, S, I
  double rk4_deviation;   ///< sup relative gap to RK4 of Y' = (mu/nu) Y
};

/// Y(t^) = Y0 exp(mu t^ / nu). Throws ConsistencyError if the RK4 cross-check
/// exceeds 1e-8.
ClassicalRun classical_trajectory(const HarrodParams& params, double nu, const TimeGrid& grid);

struct CorrectedRun {
  Trajectory trajectory;   ///< Y, C, S, I, K
  double blowup_time;      ///< 1 / sigma (infinity when mu = 0)
  double forecast_horizon; ///< 0.5 / sigma
  double rk4_deviation;
};

/// Y(t^) = Y0 / (1 - sigma t^)^2 and K(t^) = nu* t* Y0 / (1 - sigma t^).
/// Throws PoleError when the grid reaches (1 - 1e-6) / sigma, and
/// ConsistencyError if the RK4 cross-check exceeds 1e-6.
CorrectedRun corrected_trajectory(const HarrodParams& params, const TimeGrid& grid);

struct DiscretePath {
  double alpha = 0.0;
  std::vector<double> K;        ///< capital at years 0..n
  std::vector<double> Y_tilde;  ///< yearly income volume K_n / nu
  std::vector<double> I_tilde;  ///< yearly investment volume K_n mu / nu
  /// (year, jump K_i - K_{i-1}) for i = 1..n: the impulse train of dK/dt^.
  std::vector<std::pair<std::size_t, double>> impulses;
};

/// K_n = K0 + alpha K_{n-1}, i.e. K_n = K0 sum_{i<=n} alpha^i, computed by
/// recursion and checked against the geometric closed form to 1e-12.
/// Requires 0 < alpha = mu / nu <= 1.
DiscretePath discrete_path(const HarrodParams& params, double nu, std::size_t years);

/// Y~_n / Y~_0 in closed form: (1 - alpha^{n+1}) / (1 - alpha), or n + 1 at alpha = 1.
double geometric_income_ratio(double alpha, std::size_t n);

struct AdequacyResidual {
  double lhs_exp;        ///< exp(alpha n)
  double rhs_rational;   ///< (1 - alpha^{n+1}) / (1 - alpha)
  double residual_growth;   ///< |alpha n - ln rhs_rational|
  double residual_step;   ///< |alpha - ln((1 - alpha^{n+1}) / (1 - alpha^n))|
  double mismatch_ratio; ///< lhs_exp / rhs_rational
};

/// Gap between the exponential law and the discrete geometric sum.
/// Requires 0 < alpha < 1 and n >= 1; the endpoints are the trivial cases.
AdequacyResidual adequacy_residual(double alpha, std::size_t n);

}  // namespace ecodyn::harrod
