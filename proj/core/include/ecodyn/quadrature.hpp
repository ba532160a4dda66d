#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace ecodyn::fredholm {

enum class Rule { simpson, gauss_legendre };

std::string to_string(Rule r);
Rule parse_rule(const std::string& name);

/// Nodes strictly increasing in [0, 1], weights positive and summing to 1.
struct QuadratureRule {
  Rule rule = Rule::simpson;
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const noexcept { return nodes.size(); }
  double integrate(const std::function<double(double)>& f) const;
};

/// Composite Simpson on [0, 1]; n must be odd and >= 3.
QuadratureRule simpson_rule(std::size_t n);

/// n-point Gauss-Legendre mapped to [0, 1].
QuadratureRule gauss_legendre_rule(std::size_t n);

QuadratureRule make_rule(Rule rule, std::size_t n);

/// Running trapezoid integrals of uniformly spaced samples: out[k] = int_{t_0}^{t_k}.
std::vector<double> cumulative_trapezoid(const std::vector<double>& samples, double h);

/// Integral over a uniform sample set: Simpson when the interval count is
/// even, trapezoid otherwise.
double uniform_integral(const std::vector<double>& samples, double h);

}  // namespace ecodyn::fredholm
