#include "ecodyn/volterra.hpp"

#include <algorithm>
#include <sstream>

namespace ecodyn::fredholm {

Samples volterra_march(const MatrixKernel& kernel, const VectorFree& free, std::size_t dim,
                       const TimeGrid& grid) {
  if (dim == 0) throw ValidationError("Volterra system needs a positive dimension");
  const double h = grid.step();
  const auto d = static_cast<Eigen::Index>(dim);
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(d, d);

  Samples u;
  u.reserve(grid.size());
  u.push_back(free(grid.node(0)));
  if (u.front().size() != d) throw ValidationError("free term has the wrong dimension");

  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double t = grid.node(i);
    Eigen::VectorXd rhs = free(t) + 0.5 * h * kernel(t, grid.node(0)) * u[0];
    for (std::size_t j = 1; j < i; ++j) rhs += h * kernel(t, grid.node(j)) * u[j];
    Eigen::FullPivLU<Eigen::MatrixXd> lu(id - 0.5 * h * kernel(t, t));
    if (!lu.isInvertible()) {
      std::ostringstream msg;
      msg << "trapezoid step matrix is singular at t = " << t;
      throw SingularityError(msg.str());
    }
    u.push_back(lu.solve(rhs));
  }
  return u;
}

Samples restrict_to_coarse(const Samples& fine) {
  Samples out;
  for (std::size_t k = 0; k < fine.size(); k += 2) out.push_back(fine[k]);
  return out;
}

Samples richardson(const Samples& coarse, const Samples& fine) {
  const Samples f = restrict_to_coarse(fine);
  if (f.size() != coarse.size()) throw ValidationError("Richardson step needs a twice-refined grid");
  Samples out;
  out.reserve(coarse.size());
  for (std::size_t k = 0; k < coarse.size(); ++k) out.push_back((4.0 * f[k] - coarse[k]) / 3.0);
  return out;
}

namespace {

double sup_norm(const Samples& s) {
  double m = 0.0;
  for (const auto& v : s) m = std::max(m, v.cwiseAbs().maxCoeff());
  return m;
}

}  // namespace

VolterraResult volterra_solve_richardson(const MatrixKernel& kernel, const VectorFree& free,
                                         std::size_t dim, const TimeGrid& grid) {
  VolterraResult r;
  r.u_coarse = volterra_march(kernel, free, dim, grid);
  r.u_fine = volterra_march(kernel, free, dim, grid.refined(2));
  r.u = richardson(r.u_coarse, r.u_fine);

  const Samples f = restrict_to_coarse(r.u_fine);
  for (std::size_t k = 0; k < f.size(); ++k) {
    r.error_estimate = std::max(r.error_estimate, (f[k] - r.u_coarse[k]).cwiseAbs().maxCoeff() / 3.0);
  }
  r.scale = sup_norm(r.u);
  if (r.error_estimate > 0.1 * r.scale) {
    std::ostringstream msg;
    msg << "Volterra quadrature step " << grid.step() << " is too coarse: Richardson error estimate "
        << r.error_estimate << " exceeds 10% of the solution size " << r.scale;
    throw ResolutionError(msg.str());
  }
  return r;
}

Samples nested_integral(const Samples& u, double h, std::size_t times) {
  Samples cur = u;
  for (std::size_t m = 0; m < times; ++m) {
    Samples next(cur.size(), Eigen::VectorXd::Zero(cur.front().size()));
    for (std::size_t k = 1; k < cur.size(); ++k) next[k] = next[k - 1] + 0.5 * h * (cur[k - 1] + cur[k]);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace ecodyn::fredholm
