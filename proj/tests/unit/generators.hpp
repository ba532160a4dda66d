#pragma once

// Seeded random inputs for property tests.

#include <Eigen/Dense>
#include <cstdint>
#include <random>

namespace ecodyn::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  /// Nonnegative n x n matrix with every row sum in [lo_sum, hi_sum].
  Eigen::MatrixXd metzler(int n, double lo_sum = 0.2, double hi_sum = 0.9) {
    Eigen::MatrixXd A(n, n);
    for (int i = 0; i < n; ++i) {
      double s = 0.0;
      for (int j = 0; j < n; ++j) s += (A(i, j) = uniform(0.0, 1.0));
      A.row(i) *= uniform(lo_sum, hi_sum) / s;
    }
    return A;
  }

  Eigen::VectorXd vector(int n, double lo, double hi) {
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v(i) = uniform(lo, hi);
    return v;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace ecodyn::testing
