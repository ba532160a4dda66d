#include "ecodyn/leontief.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ecodyn/quadrature.hpp"
#include "ecodyn/volterra.hpp"

namespace ecodyn::leontief {

namespace {

void require_square(const MatrixXd& A) {
  if (A.rows() == 0 || A.rows() != A.cols()) throw ValidationError("technology matrix must be square and nonempty");
  if (!A.allFinite()) throw ValidationError("technology matrix must be finite");
}

void require_nonnegative(const MatrixXd& A) {
  for (Eigen::Index i = 0; i < A.rows(); ++i) {
    for (Eigen::Index j = 0; j < A.cols(); ++j) {
      if (A(i, j) < 0.0) {
        std::ostringstream msg;
        msg << "technology coefficient a(" << i + 1 << "," << j + 1 << ") = " << A(i, j) << " is negative";
        throw ValidationError(msg.str());
      }
    }
  }
}

std::vector<std::string> labels_for(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("x" + std::to_string(i + 1));
  return out;
}

VectorXd demand_at(const LeontiefModel& m, double t) {
  VectorXd c = m.demand(t);
  if (c.size() != m.A.rows()) throw ValidationError("demand has the wrong dimension");
  if (!c.allFinite()) throw ValidationError("demand must be finite");
  return c;
}

}  // namespace

MetzlerReport metzler_check(const MatrixXd& A) {
  require_square(A);
  require_nonnegative(A);
  MetzlerReport r;
  bool all_bounded = true;
  for (Eigen::Index i = 0; i < A.rows(); ++i) {
    const double s = A.row(i).sum();
    r.row_sums.push_back(s);
    if (s > 1.0) {
      all_bounded = false;
      if (!r.offending_row) r.offending_row = static_cast<std::size_t>(i);
    }
    if (s < 1.0) r.strict_row_exists = true;
  }
  r.holds = all_bounded && r.strict_row_exists;
  return r;
}

StaticResult static_solve(const MatrixXd& A, const VectorXd& c, Method method, double tol,
                          std::size_t max_iter) {
  require_square(A);
  require_nonnegative(A);
  if (c.size() != A.rows()) throw ValidationError("demand vector has the wrong dimension");
  if (!c.allFinite()) throw ValidationError("demand vector must be finite");
  if (!(tol > 0.0)) throw ValidationError("tol must be positive");

  StaticResult r;
  if (method == Method::direct) {
    const MatrixXd EA = MatrixXd::Identity(A.rows(), A.cols()) - A;
    const Eigen::PartialPivLU<MatrixXd> lu(EA);
    const double norm = EA.cwiseAbs().rowwise().sum().maxCoeff();
    const double pivot = lu.matrixLU().diagonal().cwiseAbs().minCoeff();
    if (pivot < kPivotThreshold * norm) {
      std::ostringstream msg;
      msg << "E - A is singular (smallest pivot " << pivot << ")";
      throw SingularityError(msg.str());
    }
    r.X = lu.solve(c);
  } else {
    const MetzlerReport m = metzler_check(A);
    if (!m.holds) {
      std::ostringstream msg;
      msg << "simple iteration needs the Metzler condition";
      if (m.offending_row) msg << "; row " << *m.offending_row + 1 << " sums to " << m.row_sums[*m.offending_row];
      else msg << "; no row sum is below 1";
      throw PreconditionError(msg.str());
    }
    IterationLog log;
    VectorXd X = c;
    while (true) {
      const VectorXd next = A * X + c;
      log.residuals.push_back((next - X).cwiseAbs().maxCoeff());
      X = next;
      ++log.iterations;
      if ((X - A * X - c).cwiseAbs().maxCoeff() <= tol) break;
      if (log.iterations >= max_iter) {
        std::ostringstream msg;
        msg << "simple iteration did not reach residual " << tol << " within " << max_iter
            << " iterations (last step " << log.residuals.back() << ")";
        throw NonConvergenceError(msg.str());
      }
    }
    r.X = X;
    r.log = std::move(log);
  }
  r.residual = (r.X - A * r.X - c).cwiseAbs().maxCoeff();
  return r;
}

MatrixXd LeontiefModel::B() const { return MatrixXd::Identity(A.rows(), A.cols()) - A; }

void LeontiefModel::validate() const {
  require_square(A);
  require_nonnegative(A);
  if (!demand) throw ValidationError("model has no demand");
  const auto n = A.rows();
  if (X0.size() != n) throw ValidationError("X0 has the wrong dimension");
  if (!X0.allFinite()) throw ValidationError("X0 must be finite");
  if (order >= 2) {
    if (Xdot0.size() != n) throw ValidationError("Xdot0 is required for order 2 and must match the dimension");
    if (!Xdot0.allFinite()) throw ValidationError("Xdot0 must be finite");
  }
  if (!(t0 > 0.0) || !std::isfinite(t0)) throw ValidationError("t0 must be positive");
  if (order < 1) throw ValidationError("truncation order must be at least 1");
}

Demand constant_demand(VectorXd c) {
  return [c = std::move(c)](double) { return c; };
}

TaylorReduction taylor_reduce(const LeontiefModel& model) {
  if (model.order < 1) throw ValidationError("truncation order must be at least 1");
  TaylorReduction r;
  double f = 1.0;
  for (std::size_t k = 1; k <= model.order; ++k) {
    f *= static_cast<double>(k);
    r.coefficients.push_back(1.0 / f);
  }
  r.B = model.B();
  return r;
}

Trajectory dynamic_solve(const LeontiefModel& model, std::size_t steps) {
  model.validate();
  if (model.order > 2) {
    throw UnsupportedError("dynamic solve handles truncation orders 1 and 2 (got " + std::to_string(model.order) + ")");
  }
  const std::size_t n = model.size();
  const MatrixXd B = model.B();
  const TimeGrid grid(0.0, 1.0, steps);

  if (model.order == 1) {
    const auto rhs = [&](double t, const Vector& x) {
      const Eigen::Map<const VectorXd> X(x.data(), static_cast<Eigen::Index>(n));
      const VectorXd d = demand_at(model, t) - B * X;
      return Vector(d.begin(), d.end());
    };
    return rk4_integrate(rhs, Vector(model.X0.begin(), model.X0.end()), grid, labels_for(n));
  }

  // 0.5 X'' + X' + B X = C with state (X, X').
  const auto rhs = [&](double t, const Vector& s) {
    const auto N = static_cast<Eigen::Index>(n);
    const Eigen::Map<const VectorXd> X(s.data(), N), V(s.data() + n, N);
    const VectorXd acc = 2.0 * (demand_at(model, t) - B * X - V);
    Vector out(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      out[i] = s[n + i];
      out[n + i] = acc(static_cast<Eigen::Index>(i));
    }
    return out;
  };
  Vector s0(model.X0.begin(), model.X0.end());
  s0.insert(s0.end(), model.Xdot0.begin(), model.Xdot0.end());
  std::vector<std::string> state_labels = labels_for(n);
  for (std::size_t i = 0; i < n; ++i) state_labels.push_back("dx" + std::to_string(i + 1));
  const Trajectory full = rk4_integrate(rhs, s0, grid, state_labels);

  Trajectory out(grid, labels_for(n));
  for (std::size_t k = 0; k < full.size(); ++k) {
    const Vector& v = full.at(k);
    out.push(Vector(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n)));
  }
  return out;
}

Trajectory volterra_solve(const LeontiefModel& model, const TimeGrid& grid) {
  model.validate();
  if (model.order != 2) throw PreconditionError("the Volterra form needs truncation order 2");
  if (grid.t_start() != 0.0) throw ValidationError("the Volterra form is posed from t_bar = 0");
  const auto n = static_cast<Eigen::Index>(model.size());
  const MatrixXd B = model.B();
  const MatrixXd E = MatrixXd::Identity(n, n);
  const VectorXd c1 = model.X0, c0 = model.Xdot0;

  const fredholm::MatrixKernel K = [&](double t, double s) -> MatrixXd { return -2.0 * (E + B * (t - s)); };
  const fredholm::VectorFree f = [&](double t) -> VectorXd {
    return 2.0 * (demand_at(model, t) - B * (c0 * t + c1) - c0);
  };
  const fredholm::VolterraResult r = fredholm::volterra_solve_richardson(K, f, model.size(), grid);

  auto rebuild = [&](const fredholm::Samples& u, const TimeGrid& g) {
    fredholm::Samples X = fredholm::nested_integral(u, g.step(), 2);
    for (std::size_t k = 0; k < g.size(); ++k) X[k] += c0 * g.node(k) + c1;
    return X;
  };
  const fredholm::Samples X =
      fredholm::richardson(rebuild(r.u_coarse, grid), rebuild(r.u_fine, grid.refined(2)));

  Trajectory out(grid, labels_for(model.size()));
  for (const auto& x : X) out.push(Vector(x.begin(), x.end()));
  return out;
}

DemandScale demand_scale(const LeontiefModel& model, const VectorXd& X_star, double tol, std::size_t steps) {
  model.validate();
  if (X_star.size() != model.A.rows() || !X_star.allFinite()) {
    throw ValidationError("X_star must be a finite vector of the model's dimension");
  }
  if (!(tol > 0.0)) throw ValidationError("tol must be positive");

  LeontiefModel base = model;
  base.demand = constant_demand(VectorXd::Zero(model.A.rows()));
  const Trajectory x0 = dynamic_solve(base, steps);
  const Trajectory x1 = dynamic_solve(model, steps);
  const double h = x0.grid().step();

  const std::size_t n = model.size();
  std::vector<double> int0(n), int1(n);
  DemandScale r;
  for (std::size_t i = 0; i < n; ++i) {
    int0[i] = fredholm::uniform_integral(x0.component(i), h);
    int1[i] = fredholm::uniform_integral(x1.component(i), h);
    r.aggregate_base += int0[i];
    r.aggregate_full += int1[i];
  }
  const double response = r.aggregate_full - r.aggregate_base;
  const double target = X_star.sum();
  if (std::abs(response) <= 1e-14 * std::max({1.0, std::abs(r.aggregate_base), std::abs(r.aggregate_full)})) {
    throw DegenerateError("output does not respond to demand; alpha is undetermined");
  }
  r.unclamped = (target - r.aggregate_base) / response;
  if (!(r.unclamped > 0.0) || r.unclamped > 1.0 + tol) {
    std::ostringstream msg;
    msg.precision(12);
    msg << "demand scale alpha = " << r.unclamped << " is outside (0, 1]";
    throw InfeasibleError(msg.str(), r.unclamped);
  }
  r.alpha = std::min(r.unclamped, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    r.component_residuals.push_back(int0[i] + r.alpha * (int1[i] - int0[i]) - X_star(static_cast<Eigen::Index>(i)));
  }
  return r;
}

}  // namespace ecodyn::leontief
