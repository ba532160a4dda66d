#pragma once

// Harrod-Domar, Phillips (accelerator-multiplier, in the Allen and Bergstrom
// forms) and the pure multiplier model, written in dimensional form so that
// the arbitrary time scale t0 is visible, plus a checker that reruns a model
// under two time scales and measures how much the physical trajectory moves.

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "ecodyn/odelin.hpp"

namespace ecodyn::allen {

/// Reference scales of the dimensionless formulation.
struct AllenScaling {
  double t0 = 1.0;      ///< arbitrary time scale (physical units)
  double t_star = 1.0;  ///< one year (physical units)
  double Y0 = 1.0;      ///< reference intensities, $/s
  double C0 = 1.0;
  double I0 = 1.0;
  double Z0 = 1.0;

  double k1() const { return Y0 / C0; }
  double k2() const { return Y0 / I0; }
  double k3() const { return Y0 / Z0; }
  double rho() const { return t0 / t_star; }

  void validate() const;
};

/// Harrod-Domar: nu t0 Y' = mu Y, Y(t) = Y0 exp(mu t / (nu t0)).
/// Columns Y, C, I. RK4 cross-check to 1e-8.
Trajectory harrod_domar_trajectory(const AllenScaling& scaling, double mu, double nu,
                                   const TimeGrid& grid);

struct PhillipsParams {
  double kappa = 4.0;   ///< rate of reaction of investment
  double nu = 0.6;      ///< accelerator power
  double mu = 0.5;      ///< multiplier
  double lambda = 1.0;  ///< demand reaction rate

  void validate() const;
};

/// Which stiffness coefficient the reduced second-order equation uses.
/// `printed` is kappa*nu*lambda as published; `from_system` is
/// kappa*mu*lambda, which is what eliminating I and Z actually produces.
enum class Stiffness { printed, from_system };

double damping_a1(const PhillipsParams& p);
double stiffness_b1(const PhillipsParams& p, Stiffness convention = Stiffness::printed);

struct PhillipsRun {
  Trajectory trajectory;  ///< Y, dY, I, Z on the t^ grid
  double a = 0.0;         ///< a1 / rho
  double b = 0.0;         ///< b1 / rho^2
  std::vector<std::complex<double>> roots;
  std::optional<double> period;  ///< 2 pi / |Im p| in t^ units when oscillatory
};

/// Y'' + a Y' + b Y = 0 on the t^ = t / t* clock with Y(0), Y'(0) given.
/// I and Z are recovered algebraically from the demand and supply relations.
PhillipsRun phillips_solve(const PhillipsParams& params, const AllenScaling& scaling,
                           double y_init, double dy_init, const TimeGrid& grid,
                           Stiffness convention = Stiffness::printed);

struct CapitalRoots {
  std::vector<std::complex<double>> roots;    ///< all three, zero included
  std::vector<std::complex<double>> nonzero;  ///< the two away from the origin
  std::vector<std::complex<double>> income_roots;  ///< income-equation roots at rho = t0 / t*
  double max_deviation = 0.0;  ///< between `nonzero` and `income_roots`
};

/// Roots of t0^2 p^3 + t0 a1 p^2 + b1 p (t* = 1).
CapitalRoots phillips_capital_roots(const PhillipsParams& params, double t0,
                                    Stiffness convention = Stiffness::printed);

struct BergstromParams {
  double mu = 0.5;
  double nu = 0.6;
  double gamma = 4.0;
  double lambda = 1.0;

  void validate() const;
};

struct BergstromRun {
  Trajectory trajectory;  ///< K, dK
  double damping = 0.0;   ///< gamma + mu lambda - nu gamma lambda
  double stiffness = 0.0; ///< mu gamma lambda
  double equivalent_kappa = 0.0;  ///< gamma plays the role of kappa
  std::vector<std::complex<double>> roots;
};

/// K'' + (gamma + mu lambda - nu gamma lambda) K' + mu gamma lambda K = 0.
BergstromRun bergstrom_capital_solve(const BergstromParams& params, double k_init, double dk_init,
                                     const TimeGrid& grid);

/// Multiplier model Z = (1 - mu) Y, Y' = -lambda (Y - Z): Y = Y0 exp(-lambda mu t).
/// Columns Y, Z.
Trajectory multiplier_trajectory(double mu, double lambda, double Y0, const TimeGrid& grid);

enum class ScaleModel { harrod_domar, phillips, multiplier, corrected_harrod };

std::string to_string(ScaleModel m);
ScaleModel parse_scale_model(const std::string& name);

/// Union of the parameters the four models need.
struct ScaleCheckParams {
  double mu = 0.5;
  double nu = 1.0;
  double kappa = 4.0;
  double lambda = 1.0;
  double nu_star = 10.0;
  double t_star = 1.0;
  double y_init = 1.0;
  double dy_init = 0.0;
  Stiffness stiffness = Stiffness::printed;
};

enum class ScaleVerdict { scale_dependent, scale_invariant };

struct ScaleInvarianceReport {
  ScaleModel model;
  double t0_a = 0.0;
  double t0_b = 0.0;
  double max_rel_deviation = 0.0;
  ScaleVerdict verdict = ScaleVerdict::scale_invariant;
  bool trivially_invariant = false;  ///< the model has no t0 parameter at all
};

inline constexpr double kScaleThreshold = 1e-6;

/// Physical-time income of `model` with time scale t0 on `grid`.
Vector physical_income(ScaleModel model, const ScaleCheckParams& params, double t0,
                       const TimeGrid& grid);

/// Runs the model under t0_a and t0_b on the same physical grid and reports
/// sup |Y_a - Y_b| / sup |Y_a|.
ScaleInvarianceReport scale_invariance_check(ScaleModel model, const ScaleCheckParams& params,
                                             double t0_a, double t0_b, const TimeGrid& grid);

}  // namespace ecodyn::allen
