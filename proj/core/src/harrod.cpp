#include "ecodyn/harrod.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace ecodyn::harrod {

namespace {

constexpr double kPoleGuard = 1e-6;

// Enough RK4 substeps that h * rate stays near 1e-3; the cross-check then sits
// far below its tolerance regardless of how coarse the caller's grid is.
std::size_t substeps_for(const TimeGrid& grid, double rate) {
  const double h = grid.step() * std::abs(rate);
  if (h <= 1e-3) return 1;
  return static_cast<std::size_t>(std::ceil(h / 1e-3));
}

Trajectory flows_from_income(const TimeGrid& grid, double mu, const std::function<double(double)>& income) {
  Trajectory traj(grid, {"Y", "C", "S", "I"});
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const FlowSplit f = split_flows(mu, income(grid.node(k)));
    traj.push({f.Y, f.C, f.S, f.I});
  }
  return traj;
}

}  // namespace

void HarrodParams::validate() const {
  if (!(mu >= 0.0 && mu < 1.0)) throw ValidationError("mu must lie in [0, 1)");
  if (!(nu_star > 0.0) || !std::isfinite(nu_star)) throw ValidationError("nu_star must be positive");
  if (!(t_star > 0.0) || !std::isfinite(t_star)) throw ValidationError("t_star must be positive");
  if (!(Y0 > 0.0) || !std::isfinite(Y0)) throw ValidationError("Y0 must be positive");
  if (!(K0 > 0.0) || !std::isfinite(K0)) throw ValidationError("K0 must be positive");
}

double scaled_ratio(const HarrodParams& p, double t_hat) {
  if (!(t_hat > 0.0)) throw ValidationError("interval length must be positive");
  return p.nu_star / t_hat;
}

FlowSplit split_flows(double mu, double income) {
  const double S = mu * income;
  return {income, income - S, S, S};
}

ClassicalRun classical_trajectory(const HarrodParams& params, double nu, const TimeGrid& grid) {
  params.validate();
  if (!(nu > 0.0) || !std::isfinite(nu)) throw ValidationError("nu must be positive");
  const double rate = params.mu / nu;
  const double Y0 = params.Y0;

  Trajectory traj = flows_from_income(grid, params.mu, [&](double t) { return Y0 * std::exp(rate * t); });

  const Trajectory numeric = rk4_integrate_sampled(
      [rate](double, const Vector& y) { return Vector{rate * y[0]}; },
      {Y0 * std::exp(rate * grid.t_start())}, grid, substeps_for(grid, rate), {"Y"});
  const double dev = sup_relative_deviation(traj.component(0), numeric.component(0));
  if (dev > 1e-8) {
    throw ConsistencyError("classical Harrod closed form and RK4 disagree by " + std::to_string(dev));
  }
  return {std::move(traj), dev};
}

CorrectedRun corrected_trajectory(const HarrodParams& params, const TimeGrid& grid) {
  params.validate();
  const double sigma = params.sigma();
  if (grid.t_start() < 0.0) throw ValidationError("corrected model starts at t^ = 0 or later");

  const double pole = sigma > 0.0 ? 1.0 / sigma : std::numeric_limits<double>::infinity();
  if (sigma > 0.0 && grid.t_end() >= pole * (1.0 - kPoleGuard)) {
    std::ostringstream msg;
    msg << "corrected Harrod solution has a pole at t^ = " << pole
        << " (1/sigma); grid ends at t^ = " << grid.t_end();
    throw PoleError(msg.str(), pole);
  }

  const double Y0 = params.Y0;
  auto income = [&](double t) {
    const double d = 1.0 - sigma * t;
    return Y0 / (d * d);
  };
  Trajectory traj = flows_from_income(grid, params.mu, income);
  const double capital_scale = params.nu_star * params.t_star * Y0;
  traj.add_column("K", [&](double t, const Vector&) { return capital_scale / (1.0 - sigma * t); });

  // Y' = 2 sigma / (1 - sigma t) Y; stiffness grows toward the pole.
  const double worst_rate = 2.0 * sigma / (1.0 - sigma * grid.t_end());
  const Trajectory numeric = rk4_integrate_sampled(
      [sigma](double t, const Vector& y) { return Vector{2.0 * sigma / (1.0 - sigma * t) * y[0]}; },
      {income(grid.t_start())}, grid, substeps_for(grid, worst_rate), {"Y"});
  const double dev = sup_relative_deviation(traj.component(0), numeric.component(0));
  if (dev > 1e-6) {
    throw ConsistencyError("corrected Harrod closed form and RK4 disagree by " + std::to_string(dev));
  }
  return {std::move(traj), pole, 0.5 * pole, dev};
}

double geometric_income_ratio(double alpha, std::size_t n) {
  if (alpha == 1.0) return static_cast<double>(n + 1);
  return (1.0 - std::pow(alpha, static_cast<double>(n + 1))) / (1.0 - alpha);
}

DiscretePath discrete_path(const HarrodParams& params, double nu, std::size_t years) {
  params.validate();
  if (!(nu > 0.0) || !std::isfinite(nu)) throw ValidationError("nu must be positive");
  const double alpha = params.mu / nu;
  if (!(alpha > 0.0)) throw ValidationError("alpha = mu/nu must be positive");
  if (alpha > 1.0) {
    throw ValidationError("alpha = mu/nu = " + std::to_string(alpha) +
                          " exceeds 1; the discrete model requires alpha <= 1");
  }

  DiscretePath path;
  path.alpha = alpha;
  path.K.reserve(years + 1);
  double K = params.K0;
  for (std::size_t n = 0; n <= years; ++n) {
    if (n > 0) K = params.K0 + alpha * path.K.back();
    path.K.push_back(K);
    path.Y_tilde.push_back(K / nu);
    path.I_tilde.push_back(K * params.mu / nu);
    if (n > 0) path.impulses.emplace_back(n, K - path.K[n - 1]);
  }

  const double Y0 = path.Y_tilde.front();
  for (std::size_t n = 0; n <= years; ++n) {
    const double closed = Y0 * geometric_income_ratio(alpha, n);
    if (std::abs(path.Y_tilde[n] - closed) > 1e-12 * std::abs(closed)) {
      throw ConsistencyError("discrete Harrod recursion drifted from the geometric sum at year " +
                             std::to_string(n));
    }
  }
  return path;
}

AdequacyResidual adequacy_residual(double alpha, std::size_t n) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw ValidationError("alpha must lie strictly inside (0, 1); alpha = 0 and alpha = 1 are the trivial cases");
  }
  if (n < 1) throw ValidationError("n must be at least 1; n = 0 is the trivial case");

  const double nn = static_cast<double>(n);
  AdequacyResidual r{};
  r.lhs_exp = std::exp(alpha * nn);
  // 1 - alpha^k via expm1/log for accuracy when alpha is tiny or close to 1.
  const double one_minus_pow_n1 = -std::expm1((nn + 1.0) * std::log(alpha));
  const double one_minus_pow_n = -std::expm1(nn * std::log(alpha));
  r.rhs_rational = one_minus_pow_n1 / (1.0 - alpha);
  r.residual_growth = std::abs(alpha * nn - std::log(r.rhs_rational));
  r.residual_step = std::abs(alpha - std::log(one_minus_pow_n1 / one_minus_pow_n));
  r.mismatch_ratio = r.lhs_exp / r.rhs_rational;
  return r;
}

}  // namespace ecodyn::harrod
