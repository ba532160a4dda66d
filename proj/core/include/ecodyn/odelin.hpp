#pragma once

// Shared linear-ODE core: uniform time grids, sampled trajectories,
// characteristic roots, closed-form exponential solutions and a fixed-step
// classical Runge-Kutta integrator.

#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ecodyn/error.hpp"

namespace ecodyn {

using Vector = std::vector<double>;

/// Uniform grid: node k sits at t_start + k (t_end - t_start) / steps.
class TimeGrid {
 public:
  TimeGrid(double t_start, double t_end, std::size_t steps);

  double t_start() const noexcept { return t_start_; }
  double t_end() const noexcept { return t_end_; }
  std::size_t steps() const noexcept { return steps_; }
  std::size_t size() const noexcept { return steps_ + 1; }
  double step() const noexcept { return (t_end_ - t_start_) / static_cast<double>(steps_); }
  double node(std::size_t k) const noexcept;

  /// Same interval, `factor` times as many steps.
  TimeGrid refined(std::size_t factor) const;

 private:
  double t_start_;
  double t_end_;
  std::size_t steps_;
};

/// Per-node sample of a (possibly vector-valued) function on a TimeGrid.
class Trajectory {
 public:
  Trajectory(TimeGrid grid, std::vector<std::string> labels);

  const TimeGrid& grid() const noexcept { return grid_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::size_t dimension() const noexcept { return labels_.size(); }
  std::size_t size() const noexcept { return values_.size(); }

  /// Appends the next node. Dimension must match labels.
  void push(Vector x);

  const Vector& at(std::size_t node) const { return values_.at(node); }
  double at(std::size_t node, std::size_t component) const { return values_.at(node).at(component); }
  double time(std::size_t node) const { return grid_.node(node); }

  /// Column by index or label.
  Vector component(std::size_t index) const;
  Vector component(const std::string& label) const;
  std::size_t index_of(const std::string& label) const;

  /// Appends a derived column computed from each node's current values.
  void add_column(std::string label, const std::function<double(double t, const Vector&)>& f);

  bool complete() const noexcept { return values_.size() == grid_.size(); }

 private:
  TimeGrid grid_;
  std::vector<std::string> labels_;
  std::vector<Vector> values_;
};

/// Thrown by rk4_integrate when a non-finite state appears.
class BlowUpError : public NumericalError {
 public:
  BlowUpError(const std::string& what, Trajectory partial)
      : NumericalError(what), partial_(std::move(partial)) {}
  const Trajectory& partial() const noexcept { return partial_; }
  double last_valid_time() const { return partial_.time(partial_.size() - 1); }

 private:
  Trajectory partial_;
};

/// c_n z^(n) + ... + c_1 z' + c_0 z = f(t); coefficients stored highest first.
struct OdeSpec {
  Vector coeffs;
  std::function<double(double)> forcing;

  std::size_t order() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  bool homogeneous() const { return !forcing; }

  /// Throws DomainError unless order >= 1 and c_n != 0.
  void validate() const;
};

struct Root {
  std::complex<double> value;
  int multiplicity = 1;
};

/// Roots of sum c_k p^k via companion-matrix eigenvalues. Roots closer than
/// 1e-8 (relative) are merged into one entry with multiplicity. Sorted by
/// descending real part, then descending imaginary part.
std::vector<Root> char_roots(const OdeSpec& spec);

/// sum_i c_i exp(p_i t): the general homogeneous solution for simple roots.
class ExponentialSum {
 public:
  ExponentialSum(std::vector<std::complex<double>> roots,
                 std::vector<std::complex<double>> coefficients);

  /// d^k/dt^k evaluated at t; imaginary residue is discarded.
  double value(double t, int derivative = 0) const;
  std::complex<double> complex_value(double t, int derivative = 0) const;

  const std::vector<std::complex<double>>& roots() const noexcept { return roots_; }
  const std::vector<std::complex<double>>& coefficients() const noexcept { return coeffs_; }

 private:
  std::vector<std::complex<double>> roots_;
  std::vector<std::complex<double>> coeffs_;
};

/// Fits c_i to z(0), z'(0), ..., z^(n-1)(0) through the Vandermonde system.
/// Throws RepeatedRootError for multiple roots and DegenerateError when the
/// system is numerically singular.
ExponentialSum fit_exponential_sum(const OdeSpec& spec, std::span<const double> init);

/// Samples z, z', ..., z^(n-1) (labels "z", "dz", "d2z", ...) on the grid.
/// Rejects forced specs and checks the imaginary residue stays below 1e-10.
Trajectory analytic_solution(const OdeSpec& spec, std::span<const double> init,
                             const TimeGrid& grid);

using VectorField = std::function<Vector(double t, const Vector& x)>;

/// Classical fixed-step fourth-order Runge-Kutta. Throws BlowUpError with the
/// valid prefix when a non-finite value is produced.
Trajectory rk4_integrate(const VectorField& rhs, const Vector& x0, const TimeGrid& grid,
                         std::vector<std::string> labels = {});

/// RK4 on a grid `substeps` times finer, sampled back onto `grid`.
Trajectory rk4_integrate_sampled(const VectorField& rhs, const Vector& x0, const TimeGrid& grid,
                                 std::size_t substeps, std::vector<std::string> labels = {});

/// max_k |a_k - b_k| / max(max_k |a_k|, floor) over one component.
double sup_relative_deviation(std::span<const double> a, std::span<const double> b,
                              double floor = 1e-300);

}  // namespace ecodyn
