#pragma once

// Second-kind integral equations phi(t) = lambda int_0^1 k(t, eta) phi(eta) deta + q(t):
// Nystrom discretization, solves, resolvent, spectrum, parameter sweeps and
// the degenerate-kernel residual.

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ecodyn/error.hpp"
#include "ecodyn/quadrature.hpp"

namespace ecodyn::fredholm {

using Sampler = std::function<double(double)>;
using KernelFn = std::function<double(double t, double eta)>;

/// g(t) h(eta).
struct SeparableTerm {
  Sampler g;
  Sampler h;
};

struct KernelSpec {
  std::string name;
  KernelFn evaluator;
  std::map<std::string, double> params;  ///< embedded parameters, for reporting
  std::vector<SeparableTerm> separable;  ///< optional finite-rank form

  double operator()(double t, double eta) const { return evaluator(t, eta); }

  /// Checks finiteness on a coarse grid of [0,1]^2 and, when a separable form
  /// is present, that it reproduces the evaluator within 1e-12.
  void validate() const;
};

KernelSpec kernel_zero();
KernelSpec kernel_t_plus_eta();
KernelSpec kernel_exp_diff();                  ///< e^{t - eta}
KernelSpec kernel_product(std::string name, Sampler g, Sampler h);
/// rho(t) rho(eta) + mu sigma(t) rho(eta).
KernelSpec kernel_degenerate(Sampler rho, Sampler sigma, double mu);
KernelSpec kernel_sum(const KernelSpec& k0, const KernelSpec& k1, double mu);

/// Kernel sampled at the nodes of a quadrature rule. Immutable.
class NystromDiscretization {
 public:
  NystromDiscretization(KernelSpec kernel, QuadratureRule rule);
  NystromDiscretization(KernelSpec kernel, Rule rule = Rule::simpson, std::size_t n = 201);

  const KernelSpec& kernel() const noexcept { return kernel_; }
  const QuadratureRule& rule() const noexcept { return rule_; }
  const std::vector<double>& nodes() const noexcept { return rule_.nodes; }
  const std::vector<double>& weights() const noexcept { return rule_.weights; }
  std::size_t size() const noexcept { return rule_.size(); }

  /// K_ij = k(t_i, eta_j).
  const Eigen::MatrixXd& K() const noexcept { return K_; }
  /// K diag(w).
  const Eigen::MatrixXd& weighted() const noexcept { return KW_; }
  /// Eigenvalues of K diag(w), computed once at construction.
  const Eigen::VectorXcd& eigenvalues() const noexcept { return eig_; }

  /// sum_j w_j k(t, eta_j) f_j.
  double apply_at(double t, const Eigen::VectorXd& f) const;

 private:
  KernelSpec kernel_;
  QuadratureRule rule_;
  Eigen::MatrixXd K_;
  Eigen::MatrixXd KW_;
  Eigen::VectorXcd eig_;
};

/// 1/lambda within this (relative) distance of an eigenvalue is refused.
inline constexpr double kSpectrumProximity = 1e-8;

class NystromSolution {
 public:
  NystromSolution(const NystromDiscretization& disc, double lambda, Sampler q, Eigen::VectorXd phi);

  const Eigen::VectorXd& at_nodes() const noexcept { return phi_; }
  double lambda() const noexcept { return lambda_; }
  /// Nystrom interpolant q(t) + lambda sum_j w_j k(t, eta_j) phi_j.
  double operator()(double t) const;

 private:
  const NystromDiscretization* disc_;
  double lambda_;
  Sampler q_;
  Eigen::VectorXd phi_;
};

/// Throws SpectrumProximityError naming the nearest characteristic number.
void check_off_spectrum(const NystromDiscretization& disc, double lambda);

/// (Id - lambda K diag(w)) phi = q at the nodes. The solution keeps a pointer
/// to `disc`, which must outlive it.
NystromSolution nystrom_solve(const NystromDiscretization& disc, double lambda, const Sampler& q);

/// H = (Id - lambda K diag(w))^{-1} K on nodes x nodes.
Eigen::MatrixXd resolvent(const NystromDiscretization& disc, double lambda);

/// q + lambda H diag(w) q at the nodes.
Eigen::VectorXd apply_resolvent(const NystromDiscretization& disc, const Eigen::MatrixXd& H,
                                double lambda, const Sampler& q);

struct SpectralReport {
  std::vector<std::complex<double>> characteristic_numbers;  ///< ascending |lambda|
  std::vector<std::vector<std::complex<double>>> eigenfunctions;  ///< sup-norm 1 at the nodes
  double discard_threshold = 1e-10;
};

SpectralReport char_numbers(const NystromDiscretization& disc, double discard_threshold = 1e-10);

/// max over pairs of ||phi_i - lambda_i K diag(w) phi_i||_inf / ||phi_i||_inf.
double eigen_residual(const NystromDiscretization& disc, const SpectralReport& report);

enum class KernelClass { exceptional, non_exceptional, inconclusive };
std::string to_string(KernelClass c);

struct SweepPoint {
  double mu = 0.0;
  double sigma_min = 0.0;
  double norm = 0.0;  ///< largest singular value
  bool flagged = false;
};

struct SweepReport {
  std::vector<SweepPoint> points;
  KernelClass classification = KernelClass::non_exceptional;
};

inline constexpr double kSingularRatio = 1e-6;

/// Smallest singular value of Id - (K0 + mu K1) diag(w) per mu; flags
/// sigma_min < 1e-6 sigma_max. All flagged (two or more points) is
/// exceptional; none or only isolated flags is non-exceptional; adjacent
/// flags short of the whole grid is inconclusive. Evaluations fan out over
/// threads; output order follows mu_grid.
SweepReport param_singularity_sweep(const NystromDiscretization& k0, const NystromDiscretization& k1,
                                    const std::vector<double>& mu_grid);

/// Sup-norm residual of phi = rho + mu sigma in
/// phi(t) = int_0^1 [rho(t) rho(eta) + mu sigma(t) rho(eta)] phi(eta) deta at the
/// nodes of `rule`. Throws PreconditionError unless int rho^2 = 1 and
/// int rho sigma = 0 within 1e-8.
double degenerate_residual(const Sampler& rho, const Sampler& sigma, double mu, const QuadratureRule& rule);

/// Named free terms: zero, one, t, t-half, exp, exp-neg, cos, sin.
Sampler named_function(const std::string& name);

}  // namespace ecodyn::fredholm
