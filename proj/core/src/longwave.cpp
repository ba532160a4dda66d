#include "ecodyn/longwave.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace ecodyn::longwave {

void LongWaveParams::validate() const {
  for (double v : {p, q, r, s}) {
    if (!std::isfinite(v)) throw ValidationError("long-wave coefficients must be finite");
  }
  if (p < 0.0) throw ValidationError("p must be non-negative");
  if (r < 0.0) throw ValidationError("r must be non-negative");
}

Matrix2 lw_matrix(const LongWaveParams& prm) {
  return {{{-prm.p, prm.p * prm.q}, {prm.r * prm.s, -prm.r * (1.0 + prm.s)}}};
}

std::string to_string(Regime r) {
  switch (r) {
    case Regime::undamped_periodic: return "undamped_periodic";
    case Regime::damped_oscillatory: return "damped_oscillatory";
    case Regime::growing_oscillatory: return "growing_oscillatory";
    case Regime::non_oscillatory: return "non_oscillatory";
  }
  return "unknown";
}

CycleReport lw_classify(const LongWaveParams& params) {
  params.validate();
  const Matrix2 m = lw_matrix(params);
  const double tr = m[0][0] + m[1][1];
  const double det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  const double half = 0.5 * tr;
  const double disc = half * half - det;

  CycleReport report;
  if (disc < 0.0) {
    const double im = std::sqrt(-disc);
    report.eigenvalues = {std::complex<double>(half, im), std::complex<double>(half, -im)};
    report.period_years = 2.0 * std::numbers::pi / im;
    if (std::abs(half) <= kRealPartTolerance) {
      report.regime = Regime::undamped_periodic;
    } else {
      report.regime = half < 0.0 ? Regime::damped_oscillatory : Regime::growing_oscillatory;
    }
  } else {
    const double root = std::sqrt(disc);
    // Larger root first; the smaller via the product to avoid cancellation.
    const double big = half >= 0.0 ? half + root : half - root;
    const double other = big != 0.0 ? det / big : 0.0;
    report.eigenvalues = {std::complex<double>(std::max(big, other), 0.0),
                          std::complex<double>(std::min(big, other), 0.0)};
    report.regime = Regime::non_oscillatory;
  }
  return report;
}

Trajectory lw_simulate(const LongWaveParams& params, double x0, double y0, const TimeGrid& grid) {
  params.validate();
  if (!std::isfinite(x0) || !std::isfinite(y0)) throw ValidationError("initial state must be finite");
  const Matrix2 m = lw_matrix(params);
  Trajectory traj = rk4_integrate(
      [m](double, const Vector& v) {
        return Vector{m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]};
      },
      {x0, y0}, grid, {"x", "y"});
  traj.add_column("z", [](double, const Vector& v) { return v[0] - v[1]; });
  return traj;
}

std::optional<double> zero_crossing_period(const Trajectory& traj, const std::string& label) {
  const Vector x = traj.component(label);
  if (x.size() < 3) return std::nullopt;
  const double mean = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());

  std::vector<double> ups;
  for (std::size_t k = 0; k + 1 < x.size(); ++k) {
    const double a = x[k] - mean, b = x[k + 1] - mean;
    if (a < 0.0 && b >= 0.0) {
      const double ta = traj.time(k), tb = traj.time(k + 1);
      ups.push_back(ta + (tb - ta) * (-a) / (b - a));
    }
  }
  if (ups.size() < 2) return std::nullopt;
  return (ups.back() - ups.front()) / static_cast<double>(ups.size() - 1);
}

}  // namespace ecodyn::longwave
