#include "ecodyn/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "ecodyn/error.hpp"

namespace ecodyn::fredholm {

std::string to_string(Rule r) { return r == Rule::simpson ? "simpson" : "gauss-legendre"; }

Rule parse_rule(const std::string& name) {
  if (name == "simpson") return Rule::simpson;
  if (name == "gauss-legendre" || name == "gauss") return Rule::gauss_legendre;
  throw ValidationError("unknown quadrature rule '" + name + "' (expected simpson or gauss-legendre)");
}

double QuadratureRule::integrate(const std::function<double(double)>& f) const {
  double sum = 0.0;
  for (std::size_t j = 0; j < nodes.size(); ++j) sum += weights[j] * f(nodes[j]);
  return sum;
}

QuadratureRule simpson_rule(std::size_t n) {
  if (n < 3 || n % 2 == 0) {
    throw ValidationError("Simpson rule needs an odd node count >= 3 (got " + std::to_string(n) + ")");
  }
  QuadratureRule q;
  q.rule = Rule::simpson;
  const std::size_t intervals = n - 1;
  const double h = 1.0 / static_cast<double>(intervals);
  for (std::size_t j = 0; j < n; ++j) {
    q.nodes.push_back(j == intervals ? 1.0 : static_cast<double>(j) * h);
    double w = (j == 0 || j == intervals) ? 1.0 : (j % 2 == 1 ? 4.0 : 2.0);
    q.weights.push_back(w * h / 3.0);
  }
  return q;
}

QuadratureRule gauss_legendre_rule(std::size_t n) {
  if (n < 1) throw ValidationError("Gauss-Legendre rule needs at least one node");
  QuadratureRule q;
  q.rule = Rule::gauss_legendre;
  q.nodes.resize(n);
  q.weights.resize(n);
  const std::size_t half = (n + 1) / 2;
  const double dn = static_cast<double>(n);
  for (std::size_t i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (dn + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        const double dk = static_cast<double>(k);
        const double p2 = ((2.0 * dk - 1.0) * x * p1 - (dk - 1.0) * p0) / dk;
        p0 = p1;
        p1 = p2;
      }
      dp = dn * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    // x is the i-th largest root; map [-1, 1] onto [0, 1].
    q.nodes[n - 1 - i] = 0.5 * (1.0 + x);
    q.nodes[i] = 0.5 * (1.0 - x);
    q.weights[n - 1 - i] = 0.5 * w;
    q.weights[i] = 0.5 * w;
  }
  return q;
}

QuadratureRule make_rule(Rule rule, std::size_t n) {
  return rule == Rule::simpson ? simpson_rule(n) : gauss_legendre_rule(n);
}

std::vector<double> cumulative_trapezoid(const std::vector<double>& samples, double h) {
  std::vector<double> out(samples.size(), 0.0);
  for (std::size_t k = 1; k < samples.size(); ++k) {
    out[k] = out[k - 1] + 0.5 * h * (samples[k - 1] + samples[k]);
  }
  return out;
}

double uniform_integral(const std::vector<double>& samples, double h) {
  const std::size_t n = samples.size();
  if (n < 2) return 0.0;
  const std::size_t intervals = n - 1;
  if (intervals % 2 == 1) return cumulative_trapezoid(samples, h).back();
  double sum = samples.front() + samples.back();
  for (std::size_t k = 1; k < intervals; ++k) sum += (k % 2 == 1 ? 4.0 : 2.0) * samples[k];
  return sum * h / 3.0;
}

}  // namespace ecodyn::fredholm
