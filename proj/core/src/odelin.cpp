#include "ecodyn/odelin.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>

namespace ecodyn {

// ---------------------------------------------------------------------------
// TimeGrid / Trajectory

TimeGrid::TimeGrid(double t_start, double t_end, std::size_t steps)
    : t_start_(t_start), t_end_(t_end), steps_(steps) {
  if (!std::isfinite(t_start) || !std::isfinite(t_end) || !(t_end > t_start)) {
    throw ValidationError("time grid needs finite t_end > t_start");
  }
  if (steps == 0) throw ValidationError("time grid needs at least one step");
}

double TimeGrid::node(std::size_t k) const noexcept {
  if (k == steps_) return t_end_;
  return t_start_ + static_cast<double>(k) * (t_end_ - t_start_) / static_cast<double>(steps_);
}

TimeGrid TimeGrid::refined(std::size_t factor) const {
  return TimeGrid(t_start_, t_end_, steps_ * std::max<std::size_t>(factor, 1));
}

Trajectory::Trajectory(TimeGrid grid, std::vector<std::string> labels)
    : grid_(grid), labels_(std::move(labels)) {
  if (labels_.empty()) throw ValidationError("trajectory needs at least one component");
  values_.reserve(grid_.size());
}

void Trajectory::push(Vector x) {
  if (x.size() != labels_.size()) {
    throw ValidationError("trajectory node has " + std::to_string(x.size()) +
                          " components, expected " + std::to_string(labels_.size()));
  }
  if (values_.size() >= grid_.size()) throw ValidationError("trajectory already complete");
  values_.push_back(std::move(x));
}

Vector Trajectory::component(std::size_t index) const {
  Vector out;
  out.reserve(values_.size());
  for (const auto& v : values_) out.push_back(v.at(index));
  return out;
}

Vector Trajectory::component(const std::string& label) const { return component(index_of(label)); }

std::size_t Trajectory::index_of(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw ValidationError("trajectory has no component '" + label + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

void Trajectory::add_column(std::string label,
                            const std::function<double(double, const Vector&)>& f) {
  for (std::size_t k = 0; k < values_.size(); ++k) {
    values_[k].push_back(f(grid_.node(k), values_[k]));
  }
  labels_.push_back(std::move(label));
}

// ---------------------------------------------------------------------------
// Characteristic roots

void OdeSpec::validate() const {
  if (coeffs.size() < 2) {
    throw DomainError("ODE order must be at least 1 (got " +
                      std::to_string(coeffs.empty() ? 0 : coeffs.size() - 1) + ")");
  }
  if (coeffs.front() == 0.0) throw DomainError("leading ODE coefficient must be nonzero");
  for (double c : coeffs) {
    if (!std::isfinite(c)) throw DomainError("ODE coefficients must be finite");
  }
}

std::vector<Root> char_roots(const OdeSpec& spec) {
  spec.validate();
  const std::size_t n = spec.order();
  const double lead = spec.coeffs.front();

  // Companion matrix of the monic polynomial p^n + sum_{k<n} (c_k/c_n) p^k.
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n),
                                                    static_cast<Eigen::Index>(n));
  for (std::size_t j = 0; j < n; ++j) {
    companion(0, static_cast<Eigen::Index>(j)) = -spec.coeffs[j + 1] / lead;
  }
  for (std::size_t i = 1; i < n; ++i) {
    companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;
  }

  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("eigenvalue iteration failed for the companion matrix");
  }
  std::vector<std::complex<double>> raw(solver.eigenvalues().begin(), solver.eigenvalues().end());

  std::vector<Root> roots;
  for (const auto& r : raw) {
    auto same = std::find_if(roots.begin(), roots.end(), [&](const Root& existing) {
      const double scale = std::max(1.0, std::max(std::abs(existing.value), std::abs(r)));
      return std::abs(existing.value - r) <= 1e-8 * scale;
    });
    if (same != roots.end()) {
      same->value = (same->value * static_cast<double>(same->multiplicity) + r) /
                    static_cast<double>(same->multiplicity + 1);
      ++same->multiplicity;
    } else {
      roots.push_back({r, 1});
    }
  }
  std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) {
    if (a.value.real() != b.value.real()) return a.value.real() > b.value.real();
    return a.value.imag() > b.value.imag();
  });
  return roots;
}

// ---------------------------------------------------------------------------
// Closed-form homogeneous solution

ExponentialSum::ExponentialSum(std::vector<std::complex<double>> roots,
                               std::vector<std::complex<double>> coefficients)
    : roots_(std::move(roots)), coeffs_(std::move(coefficients)) {
  if (roots_.size() != coeffs_.size()) {
    throw ValidationError("exponential sum needs one coefficient per root");
  }
}

std::complex<double> ExponentialSum::complex_value(double t, int derivative) const {
  std::complex<double> sum = 0.0;
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    sum += coeffs_[i] * std::pow(roots_[i], derivative) * std::exp(roots_[i] * t);
  }
  return sum;
}

double ExponentialSum::value(double t, int derivative) const {
  return complex_value(t, derivative).real();
}

ExponentialSum fit_exponential_sum(const OdeSpec& spec, std::span<const double> init) {
  const auto roots = char_roots(spec);
  const std::size_t n = spec.order();
  if (init.size() != n) {
    throw ValidationError("initial data needs " + std::to_string(n) + " values, got " +
                          std::to_string(init.size()));
  }
  for (const auto& r : roots) {
    if (r.multiplicity > 1) {
      std::ostringstream msg;
      msg << "repeated characteristic root " << r.value.real();
      if (r.value.imag() != 0.0) msg << (r.value.imag() > 0 ? "+" : "") << r.value.imag() << "i";
      msg << " (multiplicity " << r.multiplicity << ") is not supported";
      throw RepeatedRootError(msg.str());
    }
  }

  const auto N = static_cast<Eigen::Index>(n);
  Eigen::MatrixXcd vandermonde(N, N);
  Eigen::VectorXcd rhs(N);
  for (Eigen::Index k = 0; k < N; ++k) {
    rhs(k) = init[static_cast<std::size_t>(k)];
    for (Eigen::Index i = 0; i < N; ++i) {
      vandermonde(k, i) = std::pow(roots[static_cast<std::size_t>(i)].value, static_cast<int>(k));
    }
  }
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(vandermonde);
  lu.setThreshold(1e-12);
  if (!lu.isInvertible()) {
    throw DegenerateError("Vandermonde system of the characteristic roots is singular");
  }
  const Eigen::VectorXcd c = lu.solve(rhs);

  std::vector<std::complex<double>> rs;
  for (const auto& r : roots) rs.push_back(r.value);
  return ExponentialSum(std::move(rs), std::vector<std::complex<double>>(c.begin(), c.end()));
}

Trajectory analytic_solution(const OdeSpec& spec, std::span<const double> init,
                             const TimeGrid& grid) {
  if (!spec.homogeneous()) {
    throw ValidationError("analytic_solution handles homogeneous equations only");
  }
  const ExponentialSum sol = fit_exponential_sum(spec, init);
  const std::size_t n = spec.order();

  std::vector<std::string> labels{"z"};
  for (std::size_t k = 1; k < n; ++k) {
    labels.push_back(k == 1 ? "dz" : "d" + std::to_string(k) + "z");
  }
  Trajectory traj(grid, labels);
  for (std::size_t node = 0; node < grid.size(); ++node) {
    const double t = grid.node(node);
    Vector x(n);
    for (std::size_t k = 0; k < n; ++k) {
      std::complex<double> sum = 0.0;
      double magnitude = 0.0;
      for (std::size_t i = 0; i < sol.roots().size(); ++i) {
        const auto term = sol.coefficients()[i] * std::pow(sol.roots()[i], static_cast<int>(k)) *
                          std::exp(sol.roots()[i] * t);
        sum += term;
        magnitude += std::abs(term);
      }
      if (std::abs(sum.imag()) > 1e-10 * std::max(magnitude, 1e-300)) {
        throw ConsistencyError("analytic solution has non-negligible imaginary part at t = " +
                               std::to_string(t));
      }
      x[k] = sum.real();
    }
    traj.push(std::move(x));
  }
  return traj;
}

// ---------------------------------------------------------------------------
// RK4

namespace {

bool all_finite(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

// y + h * k, into out.
void axpy(const Vector& y, double h, const Vector& k, Vector& out) {
  for (std::size_t i = 0; i < y.size(); ++i) out[i] = y[i] + h * k[i];
}

std::vector<std::string> default_labels(std::size_t d) {
  if (d == 1) return {"x"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < d; ++i) out.push_back("x" + std::to_string(i + 1));
  return out;
}

}  // namespace

Trajectory rk4_integrate_sampled(const VectorField& rhs, const Vector& x0, const TimeGrid& grid,
                                 std::size_t substeps, std::vector<std::string> labels) {
  if (x0.empty()) throw ValidationError("rk4_integrate needs a nonempty initial state");
  if (labels.empty()) labels = default_labels(x0.size());
  if (labels.size() != x0.size()) throw ValidationError("label count does not match state size");
  if (!all_finite(x0)) throw ValidationError("initial state must be finite");
  substeps = std::max<std::size_t>(substeps, 1);

  const TimeGrid fine = grid.refined(substeps);
  const double h = fine.step();
  const std::size_t d = x0.size();

  Trajectory traj(grid, labels);
  traj.push(x0);

  Vector y = x0, tmp(d), k1, k2, k3, k4;
  auto eval = [&](double t, const Vector& x) {
    Vector dx = rhs(t, x);
    if (dx.size() != d) throw ValidationError("vector field changed the state dimension");
    return dx;
  };

  for (std::size_t step = 0; step < fine.steps(); ++step) {
    const double t = fine.node(step);
    k1 = eval(t, y);
    axpy(y, 0.5 * h, k1, tmp);
    k2 = eval(t + 0.5 * h, tmp);
    axpy(y, 0.5 * h, k2, tmp);
    k3 = eval(t + 0.5 * h, tmp);
    axpy(y, h, k3, tmp);
    k4 = eval(t + h, tmp);
    for (std::size_t i = 0; i < d; ++i) {
      y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    if (!all_finite(y)) {
      std::ostringstream msg;
      msg << "integration blew up between t = " << t << " and t = " << fine.node(step + 1);
      throw BlowUpError(msg.str(), traj);
    }
    if ((step + 1) % substeps == 0) traj.push(y);
  }
  return traj;
}

Trajectory rk4_integrate(const VectorField& rhs, const Vector& x0, const TimeGrid& grid,
                         std::vector<std::string> labels) {
  return rk4_integrate_sampled(rhs, x0, grid, 1, std::move(labels));
}

double sup_relative_deviation(std::span<const double> a, std::span<const double> b, double floor) {
  if (a.size() != b.size()) throw ValidationError("deviation needs equally sized samples");
  double diff = 0.0, scale = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    diff = std::max(diff, std::abs(a[i] - b[i]));
    scale = std::max(scale, std::abs(a[i]));
  }
  return diff / std::max(scale, floor);
}

}  // namespace ecodyn
