#pragma once

// Second-kind Volterra equations u(t) = f(t) + int_{t_0}^t K(t, s) u(s) ds for
// vector-valued u, by trapezoid marching with one Richardson step.

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "ecodyn/odelin.hpp"

namespace ecodyn::fredholm {

using MatrixKernel = std::function<Eigen::MatrixXd(double t, double s)>;
using VectorFree = std::function<Eigen::VectorXd(double t)>;
using Samples = std::vector<Eigen::VectorXd>;

/// Plain trapezoid marching on `grid`. Throws SingularityError when
/// Id - h/2 K(t, t) cannot be inverted.
Samples volterra_march(const MatrixKernel& kernel, const VectorFree& free, std::size_t dim,
                       const TimeGrid& grid);

struct VolterraResult {
  Samples u;           ///< extrapolated, on the caller's grid
  Samples u_coarse;    ///< trapezoid on the caller's grid
  Samples u_fine;      ///< trapezoid on the grid with twice the steps
  double error_estimate = 0.0;  ///< sup |u_fine - u_coarse| / 3
  double scale = 0.0;           ///< sup |u|
};

/// Marches on `grid` and on the twice-refined grid and combines them as
/// (4 fine - coarse) / 3. Throws ResolutionError when the estimate exceeds
/// 10% of sup |u|.
VolterraResult volterra_solve_richardson(const MatrixKernel& kernel, const VectorFree& free,
                                         std::size_t dim, const TimeGrid& grid);

/// `times`-fold running trapezoid integral from the first sample:
/// int_{t_0}^t (t - s)^{m-1} / (m-1)! u(s) ds with m = times.
Samples nested_integral(const Samples& u, double h, std::size_t times);

/// Every other sample of a twice-refined sequence.
Samples restrict_to_coarse(const Samples& fine);

/// (4 fine - coarse) / 3 at the coarse nodes.
Samples richardson(const Samples& coarse, const Samples& fine);

}  // namespace ecodyn::fredholm
