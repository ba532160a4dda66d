#pragma once

// Reduction of a constant-coefficient ODE to a second-kind integral equation
// for phi = z^(n): z is rebuilt as the n-fold integral of phi plus a
// polynomial in the integration constants c_i = z^(i)(0).

#include <optional>
#include <span>
#include <vector>

#include "ecodyn/fredholm.hpp"
#include "ecodyn/odelin.hpp"

namespace ecodyn::fredholm {

/// z^(order)(at) = value with `at` either 0 or 1.
struct BoundaryCondition {
  std::size_t order = 0;
  double at = 0.0;
  double value = 0.0;
};

struct IntegralProblem {
  std::size_t order = 0;
  bool volterra = true;           ///< initial-data case
  double lambda = 1.0;
  Vector monic;                   ///< a_0 .. a_{n-1} of z^(n) + sum a_k z^(k) = f / c_n
  KernelSpec kernel;              ///< on [0,1]^2; the Volterra part vanishes for eta > t
  std::optional<Sampler> convolution;  ///< initial-data case: kernel as a function of t - eta
  Sampler free_term;
  /// c_i = alpha_i + int_0^1 beta_i(eta) phi(eta) deta; beta_i empty when c_i is given directly.
  Vector alpha;
  std::vector<Sampler> beta;
};

/// Initial-data reduction: n values z(0), ..., z^(n-1)(0).
IntegralProblem ode_to_integral(const OdeSpec& spec, std::span<const double> init);

/// Two-point reduction with an explicit placement of derivative orders at
/// t = 0 and t = 1. Orders at one end must be distinct and below n; the
/// conditions at t = 1 must determine the constants left open at t = 0.
IntegralProblem ode_to_integral(const OdeSpec& spec, const std::vector<BoundaryCondition>& conditions);

/// Default placement: orders 0 .. ceil(n/2)-1 at t = 0, 0 .. floor(n/2)-1 at t = 1.
std::vector<BoundaryCondition> default_placement(std::size_t order, std::span<const double> at_zero,
                                                 std::span<const double> at_one);

struct ReducedSolution {
  Trajectory trajectory;  ///< phi, z
  double error_estimate = 0.0;
};

/// Initial-data problems: Volterra marching on `grid` (which must start at
/// 0) with Richardson extrapolation of phi and of the rebuilt z.
ReducedSolution solve_initial_value(const IntegralProblem& problem, const TimeGrid& grid);

/// Two-point problems: Nystrom on `rule`, z rebuilt on `grid` (from 0, within [0, 1]).
ReducedSolution solve_boundary_value(const IntegralProblem& problem, const QuadratureRule& rule,
                                     const TimeGrid& grid);

}  // namespace ecodyn::fredholm
