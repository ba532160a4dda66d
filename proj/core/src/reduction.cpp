#include "ecodyn/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "ecodyn/volterra.hpp"

namespace ecodyn::fredholm {

namespace {

double factorial(std::size_t k) {
  double f = 1.0;
  for (std::size_t i = 2; i <= k; ++i) f *= static_cast<double>(i);
  return f;
}

// t^k / k!, zero for negative powers.
double power_term(double t, long k) {
  if (k < 0) return 0.0;
  return std::pow(t, static_cast<double>(k)) / factorial(static_cast<std::size_t>(k));
}

Vector monic_coefficients(const OdeSpec& spec) {
  spec.validate();
  const std::size_t n = spec.order();
  Vector a(n);
  for (std::size_t k = 0; k < n; ++k) a[k] = spec.coeffs[n - k] / spec.coeffs.front();
  return a;
}

// -sum_k a_k d^{n-1-k} / (n-1-k)!: the Volterra kernel as a function of d = t - eta.
Sampler convolution_kernel(const Vector& a) {
  const std::size_t n = a.size();
  return [a, n](double d) {
    double s = 0.0;
    for (std::size_t k = 0; k < n; ++k) s -= a[k] * power_term(d, static_cast<long>(n - 1 - k));
    return s;
  };
}

Sampler forcing_over_lead(const OdeSpec& spec) {
  if (spec.homogeneous()) return [](double) { return 0.0; };
  return [f = spec.forcing, lead = spec.coeffs.front()](double t) { return f(t) / lead; };
}

// Free term f/c_n - sum_k a_k sum_{i >= k} alpha_i t^{i-k} / (i-k)!.
Sampler polynomial_free_term(const Vector& a, const Vector& alpha, Sampler f) {
  return [a, alpha, f = std::move(f)](double t) {
    double s = f(t);
    for (std::size_t k = 0; k < a.size(); ++k) {
      for (std::size_t i = k; i < alpha.size(); ++i) s -= a[k] * alpha[i] * power_term(t, static_cast<long>(i - k));
    }
    return s;
  };
}

}  // namespace

IntegralProblem ode_to_integral(const OdeSpec& spec, std::span<const double> init) {
  const Vector a = monic_coefficients(spec);
  const std::size_t n = a.size();
  if (init.size() != n) {
    throw ValidationError("initial data needs " + std::to_string(n) + " values, got " + std::to_string(init.size()));
  }
  IntegralProblem p;
  p.order = n;
  p.volterra = true;
  p.monic = a;
  p.alpha.assign(init.begin(), init.end());
  p.beta.assign(n, Sampler{});
  const Sampler conv = convolution_kernel(a);
  p.convolution = conv;
  p.kernel.name = "ode-reduced";
  p.kernel.evaluator = [conv](double t, double eta) { return eta <= t ? conv(t - eta) : 0.0; };
  p.free_term = polynomial_free_term(a, p.alpha, forcing_over_lead(spec));
  return p;
}

IntegralProblem ode_to_integral(const OdeSpec& spec, const std::vector<BoundaryCondition>& conditions) {
  const Vector a = monic_coefficients(spec);
  const std::size_t n = a.size();
  if (conditions.size() != n) {
    throw ValidationError("boundary set needs " + std::to_string(n) + " conditions, got " +
                          std::to_string(conditions.size()));
  }
  std::set<std::size_t> at_zero, at_one;
  for (const auto& c : conditions) {
    if (c.order >= n) throw ValidationError("boundary condition order " + std::to_string(c.order) + " must be below " + std::to_string(n));
    if (!std::isfinite(c.value)) throw ValidationError("boundary values must be finite");
    auto& bucket = c.at == 0.0 ? at_zero : c.at == 1.0 ? at_one : throw ValidationError("boundary conditions sit at t = 0 or t = 1");
    if (!bucket.insert(c.order).second) {
      throw ValidationError("derivative order " + std::to_string(c.order) + " appears twice at t = " +
                            (c.at == 0.0 ? "0" : "1"));
    }
  }

  IntegralProblem p;
  p.order = n;
  p.volterra = at_one.empty();
  p.monic = a;
  p.alpha.assign(n, 0.0);
  p.beta.assign(n, Sampler{});

  std::vector<std::size_t> unknown;
  for (std::size_t i = 0; i < n; ++i) {
    if (!at_zero.count(i)) unknown.push_back(i);
  }
  for (const auto& c : conditions) {
    if (c.at == 0.0) p.alpha[c.order] = c.value;
  }

  std::vector<BoundaryCondition> right;
  for (const auto& c : conditions) {
    if (c.at == 1.0) right.push_back(c);
  }
  const auto m = static_cast<Eigen::Index>(unknown.size());
  if (m > 0) {
    // z^(d)(1) = int_0^1 g_d(eta) phi + sum_{i >= d} c_i / (i-d)!, g_d = (1-eta)^{n-1-d} / (n-1-d)!.
    Eigen::MatrixXd M(m, m);
    Eigen::VectorXd known(m);
    for (Eigen::Index r = 0; r < m; ++r) {
      const std::size_t d = right[static_cast<std::size_t>(r)].order;
      for (Eigen::Index u = 0; u < m; ++u) {
        M(r, u) = power_term(1.0, static_cast<long>(unknown[static_cast<std::size_t>(u)]) - static_cast<long>(d));
      }
      double rhs = right[static_cast<std::size_t>(r)].value;
      for (std::size_t i : at_zero) rhs -= p.alpha[i] * power_term(1.0, static_cast<long>(i) - static_cast<long>(d));
      known(r) = rhs;
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(M);
    if (!lu.isInvertible()) {
      throw ValidationError("boundary placement does not determine the integration constants");
    }
    const Eigen::MatrixXd inv = lu.inverse();
    const Eigen::VectorXd base = inv * known;
    for (Eigen::Index u = 0; u < m; ++u) {
      const std::size_t i = unknown[static_cast<std::size_t>(u)];
      p.alpha[i] = base(u);
      std::vector<std::pair<double, std::size_t>> parts;
      for (Eigen::Index r = 0; r < m; ++r) {
        parts.emplace_back(inv(u, r), right[static_cast<std::size_t>(r)].order);
      }
      p.beta[i] = [parts, n](double eta) {
        double s = 0.0;
        for (const auto& [coef, d] : parts) s -= coef * power_term(1.0 - eta, static_cast<long>(n - 1 - d));
        return s;
      };
    }
  }

  const Sampler conv = convolution_kernel(a);
  if (p.volterra) p.convolution = conv;
  p.kernel.name = "ode-reduced";
  p.kernel.evaluator = [conv, a, beta = p.beta](double t, double eta) {
    double s = eta <= t ? conv(t - eta) : 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
      for (std::size_t i = k; i < beta.size(); ++i) {
        if (beta[i]) s -= a[k] * beta[i](eta) * power_term(t, static_cast<long>(i - k));
      }
    }
    return s;
  };
  p.free_term = polynomial_free_term(a, p.alpha, forcing_over_lead(spec));
  return p;
}

std::vector<BoundaryCondition> default_placement(std::size_t order, std::span<const double> at_zero,
                                                 std::span<const double> at_one) {
  const std::size_t left = (order + 1) / 2, right = order / 2;
  if (at_zero.size() != left || at_one.size() != right) {
    throw ValidationError("order " + std::to_string(order) + " needs " + std::to_string(left) +
                          " value(s) at t = 0 and " + std::to_string(right) + " at t = 1");
  }
  std::vector<BoundaryCondition> out;
  for (std::size_t i = 0; i < left; ++i) out.push_back({i, 0.0, at_zero[i]});
  for (std::size_t i = 0; i < right; ++i) out.push_back({i, 1.0, at_one[i]});
  return out;
}

namespace {

Samples scalar_samples(const std::function<double(double)>& f, const TimeGrid& grid) {
  Samples s;
  for (std::size_t k = 0; k < grid.size(); ++k) s.push_back(Eigen::VectorXd::Constant(1, f(grid.node(k))));
  return s;
}

// z on `grid` from phi samples on the same grid and known constants c.
Samples rebuild_z(const Samples& phi, const TimeGrid& grid, std::size_t n, const Vector& c) {
  Samples z = nested_integral(phi, grid.step(), n);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double t = grid.node(k);
    for (std::size_t i = 0; i < n; ++i) z[k](0) += c[i] * power_term(t, static_cast<long>(i));
  }
  return z;
}

Trajectory pack(const TimeGrid& grid, const Samples& phi, const Samples& z) {
  Trajectory traj(grid, {"phi", "z"});
  for (std::size_t k = 0; k < grid.size(); ++k) traj.push({phi[k](0), z[k](0)});
  return traj;
}

}  // namespace

ReducedSolution solve_initial_value(const IntegralProblem& problem, const TimeGrid& grid) {
  if (!problem.volterra || !problem.convolution) {
    throw PreconditionError("solve_initial_value needs an initial-data reduction");
  }
  if (grid.t_start() != 0.0) throw ValidationError("reduced problems are posed from t = 0");
  const Sampler conv = *problem.convolution;
  const double lambda = problem.lambda;
  const MatrixKernel K = [conv, lambda](double t, double s) {
    return Eigen::MatrixXd::Constant(1, 1, lambda * conv(t - s));
  };
  const Sampler q = problem.free_term;
  const VectorFree f = [q](double t) { return Eigen::VectorXd::Constant(1, q(t)); };

  const VolterraResult r = volterra_solve_richardson(K, f, 1, grid);
  const Samples z_coarse = rebuild_z(r.u_coarse, grid, problem.order, problem.alpha);
  const Samples z_fine = rebuild_z(r.u_fine, grid.refined(2), problem.order, problem.alpha);
  return {pack(grid, r.u, richardson(z_coarse, z_fine)), r.error_estimate};
}

ReducedSolution solve_boundary_value(const IntegralProblem& problem, const QuadratureRule& rule,
                                     const TimeGrid& grid) {
  if (grid.t_start() != 0.0 || grid.t_end() > 1.0) {
    throw ValidationError("two-point reductions need a grid from 0 to at most 1");
  }
  const NystromDiscretization disc(problem.kernel, rule);
  const NystromSolution sol = nystrom_solve(disc, problem.lambda, problem.free_term);

  Vector c = problem.alpha;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!problem.beta[i]) continue;
    for (std::size_t j = 0; j < rule.size(); ++j) {
      c[i] += rule.weights[j] * problem.beta[i](rule.nodes[j]) * sol.at_nodes()(static_cast<Eigen::Index>(j));
    }
  }

  const auto phi_fn = [&](double t) { return sol(t); };
  const Samples phi = scalar_samples(phi_fn, grid);
  const Samples z_coarse = rebuild_z(phi, grid, problem.order, c);
  const Samples z_fine = rebuild_z(scalar_samples(phi_fn, grid.refined(2)), grid.refined(2), problem.order, c);

  double estimate = 0.0;
  const Samples zf = restrict_to_coarse(z_fine);
  for (std::size_t k = 0; k < zf.size(); ++k) estimate = std::max(estimate, std::abs(zf[k](0) - z_coarse[k](0)) / 3.0);
  return {pack(grid, phi, richardson(z_coarse, z_fine)), estimate};
}

}  // namespace ecodyn::fredholm
