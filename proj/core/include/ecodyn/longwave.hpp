#pragma once

// Simplified long-wave model: x' = -p (x - q y), y' = r (s z - y) with
// z = x - y eliminated, so (x, y)' = M (x, y).

#include <array>
#include <complex>
#include <optional>
#include <string>

#include "ecodyn/odelin.hpp"

namespace ecodyn::longwave {

struct LongWaveParams {
  double p = 0.1;
  double q = 1.0;
  double r = 0.1;
  double s = -2.0;

  /// Finite coefficients, p and r non-negative.
  void validate() const;
};

using Matrix2 = std::array<std::array<double, 2>, 2>;

/// [[-p, p q], [r s, -r (1 + s)]].
Matrix2 lw_matrix(const LongWaveParams& params);

enum class Regime { undamped_periodic, damped_oscillatory, growing_oscillatory, non_oscillatory };

std::string to_string(Regime r);

struct CycleReport {
  std::array<std::complex<double>, 2> eigenvalues;  ///< upper half-plane first
  Regime regime = Regime::non_oscillatory;
  std::optional<double> period_years;  ///< 2 pi / |Im|
};

/// |Re| <= 1e-10 counts as zero real part.
inline constexpr double kRealPartTolerance = 1e-10;

CycleReport lw_classify(const LongWaveParams& params);

/// RK4 on (x, y) with z = x - y appended.
Trajectory lw_simulate(const LongWaveParams& params, double x0, double y0, const TimeGrid& grid);

/// Mean spacing of upward zero crossings of x - mean(x), located by linear
/// interpolation. Empty when fewer than two upward crossings exist.
std::optional<double> zero_crossing_period(const Trajectory& traj, const std::string& label = "x");

}  // namespace ecodyn::longwave
