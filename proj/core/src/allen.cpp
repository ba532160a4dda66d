#include "ecodyn/allen.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace ecodyn::allen {

namespace {

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) throw ValidationError(std::string(name) + " must be positive");
}

void require_unit_open(double v, const char* name) {
  if (!(v > 0.0 && v < 1.0)) throw ValidationError(std::string(name) + " must lie in (0, 1)");
}

std::size_t substeps_for(const TimeGrid& grid, double rate) {
  const double h = grid.step() * std::abs(rate);
  if (h <= 1e-3) return 1;
  return static_cast<std::size_t>(std::ceil(h / 1e-3));
}

std::vector<std::complex<double>> flatten(const std::vector<Root>& roots) {
  std::vector<std::complex<double>> out;
  for (const auto& r : roots) {
    for (int m = 0; m < r.multiplicity; ++m) out.push_back(r.value);
  }
  return out;
}

void sort_roots(std::vector<std::complex<double>>& v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    if (a.real() != b.real()) return a.real() > b.real();
    return a.imag() > b.imag();
  });
}

std::optional<double> period_of(const std::vector<std::complex<double>>& roots) {
  double im = 0.0;
  for (const auto& r : roots) im = std::max(im, std::abs(r.imag()));
  if (im <= 1e-12 * std::max(1.0, std::abs(roots.front()))) return std::nullopt;
  return 2.0 * std::numbers::pi / im;
}

}  // namespace

void AllenScaling::validate() const {
  require_positive(t0, "t0");
  require_positive(t_star, "t_star");
  require_positive(Y0, "Y0");
  require_positive(C0, "C0");
  require_positive(I0, "I0");
  require_positive(Z0, "Z0");
}

Trajectory harrod_domar_trajectory(const AllenScaling& scaling, double mu, double nu,
                                   const TimeGrid& grid) {
  scaling.validate();
  require_positive(mu, "mu");
  require_positive(nu, "nu");
  const double rate = mu / (nu * scaling.t0);
  const double Y0 = scaling.Y0;

  Trajectory traj(grid, {"Y", "C", "I"});
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double Y = Y0 * std::exp(rate * grid.node(k));
    traj.push({Y, (1.0 - mu) * Y / scaling.k1(), mu * Y / scaling.k2()});
  }

  const Trajectory numeric = rk4_integrate_sampled(
      [rate](double, const Vector& y) { return Vector{rate * y[0]}; },
      {Y0 * std::exp(rate * grid.t_start())}, grid, substeps_for(grid, rate), {"Y"});
  const double dev = sup_relative_deviation(traj.component(0), numeric.component(0));
  if (dev > 1e-8) {
    throw ConsistencyError("Harrod-Domar closed form and RK4 disagree by " + std::to_string(dev));
  }
  return traj;
}

void PhillipsParams::validate() const {
  require_positive(kappa, "kappa");
  if (!(nu >= 0.0) || !std::isfinite(nu)) throw ValidationError("nu must be non-negative");
  require_unit_open(mu, "mu");
  require_positive(lambda, "lambda");
}

double damping_a1(const PhillipsParams& p) { return p.kappa + p.mu * p.lambda - p.kappa * p.nu * p.lambda; }

double stiffness_b1(const PhillipsParams& p, Stiffness convention) {
  const double share = convention == Stiffness::printed ? p.nu : p.mu;
  return p.kappa * share * p.lambda;
}

PhillipsRun phillips_solve(const PhillipsParams& params, const AllenScaling& scaling,
                           double y_init, double dy_init, const TimeGrid& grid,
                           Stiffness convention) {
  params.validate();
  scaling.validate();
  if (!std::isfinite(y_init) || !std::isfinite(dy_init)) {
    throw ValidationError("initial income and its derivative must be finite");
  }
  const double rho = scaling.rho();

  PhillipsRun run{Trajectory(grid, {"Y", "dY"}), damping_a1(params) / rho,
                  stiffness_b1(params, convention) / (rho * rho), {}, std::nullopt};
  const OdeSpec spec{{1.0, run.a, run.b}, {}};
  run.roots = flatten(char_roots(spec));
  run.period = period_of(run.roots);

  const double init[2] = {y_init, dy_init};
  const Trajectory z = analytic_solution(spec, init, grid);
  for (std::size_t k = 0; k < z.size(); ++k) run.trajectory.push(z.at(k));

  // k2 I = mu Y + rho Y' / lambda and k3 Z = Y + rho Y' / lambda.
  const double mu = params.mu, lambda = params.lambda;
  const double k2 = scaling.k2(), k3 = scaling.k3();
  run.trajectory.add_column("I", [=](double, const Vector& x) {
    return (mu * x[0] + rho * x[1] / lambda) / k2;
  });
  run.trajectory.add_column("Z", [=](double, const Vector& x) {
    return (x[0] + rho * x[1] / lambda) / k3;
  });
  return run;
}

CapitalRoots phillips_capital_roots(const PhillipsParams& params, double t0, Stiffness convention) {
  params.validate();
  require_positive(t0, "t0");
  const double a1 = damping_a1(params);
  const double b1 = stiffness_b1(params, convention);

  CapitalRoots out;
  out.roots = flatten(char_roots(OdeSpec{{t0 * t0, t0 * a1, b1, 0.0}, {}}));
  sort_roots(out.roots);

  out.nonzero = out.roots;
  const auto smallest = std::min_element(out.nonzero.begin(), out.nonzero.end(),
                                         [](const auto& a, const auto& b) { return std::abs(a) < std::abs(b); });
  out.nonzero.erase(smallest);

  out.income_roots = flatten(char_roots(OdeSpec{{1.0, a1 / t0, b1 / (t0 * t0)}, {}}));
  sort_roots(out.income_roots);

  for (std::size_t i = 0; i < out.nonzero.size(); ++i) {
    out.max_deviation = std::max(out.max_deviation, std::abs(out.nonzero[i] - out.income_roots[i]));
  }
  return out;
}

void BergstromParams::validate() const {
  require_unit_open(mu, "mu");
  if (!(nu >= 0.0) || !std::isfinite(nu)) throw ValidationError("nu must be non-negative");
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) throw ValidationError("gamma must be non-negative");
  require_positive(lambda, "lambda");
}

BergstromRun bergstrom_capital_solve(const BergstromParams& params, double k_init, double dk_init,
                                     const TimeGrid& grid) {
  params.validate();
  if (!std::isfinite(k_init) || !std::isfinite(dk_init)) {
    throw ValidationError("initial capital and its derivative must be finite");
  }
  BergstromRun run{Trajectory(grid, {"K", "dK"}), 0.0, 0.0, params.gamma, {}};
  run.damping = params.gamma + params.mu * params.lambda - params.nu * params.gamma * params.lambda;
  run.stiffness = params.mu * params.gamma * params.lambda;

  const OdeSpec spec{{1.0, run.damping, run.stiffness}, {}};
  run.roots = flatten(char_roots(spec));
  const double init[2] = {k_init, dk_init};
  const Trajectory z = analytic_solution(spec, init, grid);
  for (std::size_t k = 0; k < z.size(); ++k) run.trajectory.push(z.at(k));
  return run;
}

Trajectory multiplier_trajectory(double mu, double lambda, double Y0, const TimeGrid& grid) {
  require_unit_open(mu, "mu");
  require_positive(lambda, "lambda");
  if (!std::isfinite(Y0)) throw ValidationError("Y0 must be finite");
  Trajectory traj(grid, {"Y", "Z"});
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double Y = Y0 * std::exp(-lambda * mu * grid.node(k));
    traj.push({Y, (1.0 - mu) * Y});
  }
  return traj;
}

std::string to_string(ScaleModel m) {
  switch (m) {
    case ScaleModel::harrod_domar: return "harrod_domar";
    case ScaleModel::phillips: return "phillips";
    case ScaleModel::multiplier: return "multiplier";
    case ScaleModel::corrected_harrod: return "corrected_harrod";
  }
  return "unknown";
}

ScaleModel parse_scale_model(const std::string& name) {
  for (auto m : {ScaleModel::harrod_domar, ScaleModel::phillips, ScaleModel::multiplier,
                 ScaleModel::corrected_harrod}) {
    if (to_string(m) == name) return m;
  }
  throw ValidationError("unknown model '" + name +
                        "' (expected harrod_domar, phillips, multiplier or corrected_harrod)");
}

Vector physical_income(ScaleModel model, const ScaleCheckParams& p, double t0, const TimeGrid& grid) {
  require_positive(t0, "t0");
  Vector out;
  out.reserve(grid.size());
  switch (model) {
    case ScaleModel::harrod_domar: {
      AllenScaling s;
      s.t0 = t0;
      s.t_star = p.t_star;
      s.Y0 = p.y_init;
      return harrod_domar_trajectory(s, p.mu, p.nu, grid).component("Y");
    }
    case ScaleModel::phillips: {
      AllenScaling s;
      s.t0 = t0;
      s.t_star = p.t_star;
      const TimeGrid hat(grid.t_start() / p.t_star, grid.t_end() / p.t_star, grid.steps());
      const PhillipsParams pp{p.kappa, p.nu, p.mu, p.lambda};
      return phillips_solve(pp, s, p.y_init, p.dy_init, hat, p.stiffness).trajectory.component("Y");
    }
    case ScaleModel::multiplier: {
      const TimeGrid bar(grid.t_start() / t0, grid.t_end() / t0, grid.steps());
      return multiplier_trajectory(p.mu, p.lambda, p.y_init, bar).component("Y");
    }
    case ScaleModel::corrected_harrod: {
      require_positive(p.nu_star, "nu_star");
      const double sigma = p.mu / p.nu_star;
      for (std::size_t k = 0; k < grid.size(); ++k) {
        const double d = 1.0 - sigma * grid.node(k) / p.t_star;
        if (!(d > 0.0)) throw PoleError("corrected Harrod pole inside the grid", p.t_star / sigma);
        out.push_back(p.y_init / (d * d));
      }
      return out;
    }
  }
  return out;
}

ScaleInvarianceReport scale_invariance_check(ScaleModel model, const ScaleCheckParams& params,
                                             double t0_a, double t0_b, const TimeGrid& grid) {
  require_positive(t0_a, "t0_a");
  require_positive(t0_b, "t0_b");
  if (t0_a == t0_b) throw ValidationError("t0_a and t0_b must differ");

  ScaleInvarianceReport report{model, t0_a, t0_b, 0.0, ScaleVerdict::scale_invariant, false};
  report.trivially_invariant = model == ScaleModel::corrected_harrod;
  const Vector a = physical_income(model, params, t0_a, grid);
  const Vector b = physical_income(model, params, t0_b, grid);
  report.max_rel_deviation = sup_relative_deviation(a, b);
  report.verdict = report.max_rel_deviation > kScaleThreshold ? ScaleVerdict::scale_dependent
                                                              : ScaleVerdict::scale_invariant;
  return report;
}

}  // namespace ecodyn::allen
