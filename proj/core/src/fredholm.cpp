#include "ecodyn/fredholm.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <sstream>
#include <thread>

namespace ecodyn::fredholm {

void KernelSpec::validate() const {
  if (!evaluator) throw ValidationError("kernel '" + name + "' has no evaluator");
  for (int i = 0; i <= 10; ++i) {
    for (int j = 0; j <= 10; ++j) {
      const double t = i / 10.0, eta = j / 10.0;
      const double v = evaluator(t, eta);
      if (!std::isfinite(v)) throw ValidationError("kernel '" + name + "' is not finite on [0,1]^2");
      if (separable.empty()) continue;
      double s = 0.0;
      for (const auto& term : separable) s += term.g(t) * term.h(eta);
      if (std::abs(s - v) > 1e-12 * std::max(1.0, std::abs(v))) {
        throw ValidationError("separable form of kernel '" + name + "' disagrees with its evaluator");
      }
    }
  }
}

KernelSpec kernel_zero() {
  return {"zero", [](double, double) { return 0.0; }, {}, {}};
}

KernelSpec kernel_t_plus_eta() {
  const Sampler one = [](double) { return 1.0; };
  const Sampler id = [](double x) { return x; };
  return {"t-plus-eta", [](double t, double eta) { return t + eta; }, {}, {{id, one}, {one, id}}};
}

KernelSpec kernel_exp_diff() {
  return {"exp-diff", [](double t, double eta) { return std::exp(t - eta); }, {},
          {{[](double t) { return std::exp(t); }, [](double eta) { return std::exp(-eta); }}}};
}

KernelSpec kernel_product(std::string name, Sampler g, Sampler h) {
  return {std::move(name), [g, h](double t, double eta) { return g(t) * h(eta); }, {}, {{g, h}}};
}

KernelSpec kernel_degenerate(Sampler rho, Sampler sigma, double mu) {
  KernelSpec k;
  k.name = "degenerate";
  k.evaluator = [=](double t, double eta) { return (rho(t) + mu * sigma(t)) * rho(eta); };
  k.params["mu"] = mu;
  k.separable = {{rho, rho}, {[=](double t) { return mu * sigma(t); }, rho}};
  return k;
}

KernelSpec kernel_sum(const KernelSpec& k0, const KernelSpec& k1, double mu) {
  KernelSpec k;
  k.name = k0.name + "+mu*" + k1.name;
  k.evaluator = [e0 = k0.evaluator, e1 = k1.evaluator, mu](double t, double eta) {
    return e0(t, eta) + mu * e1(t, eta);
  };
  k.params = k0.params;
  k.params["mu"] = mu;
  return k;
}

NystromDiscretization::NystromDiscretization(KernelSpec kernel, QuadratureRule rule)
    : kernel_(std::move(kernel)), rule_(std::move(rule)) {
  kernel_.validate();
  const auto n = static_cast<Eigen::Index>(rule_.size());
  if (n == 0) throw ValidationError("quadrature rule has no nodes");
  double wsum = 0.0;
  for (std::size_t j = 0; j < rule_.size(); ++j) {
    if (!(rule_.weights[j] > 0.0)) throw ValidationError("quadrature weights must be positive");
    if (j > 0 && !(rule_.nodes[j] > rule_.nodes[j - 1])) {
      throw ValidationError("quadrature nodes must be strictly increasing");
    }
    wsum += rule_.weights[j];
  }
  if (std::abs(wsum - 1.0) > 1e-12) throw ValidationError("quadrature weights must sum to 1");

  K_.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      K_(i, j) = kernel_(rule_.nodes[static_cast<std::size_t>(i)], rule_.nodes[static_cast<std::size_t>(j)]);
    }
  }
  const Eigen::Map<const Eigen::VectorXd> w(rule_.weights.data(), n);
  KW_ = K_ * w.asDiagonal();
  Eigen::EigenSolver<Eigen::MatrixXd> solver(KW_, false);
  if (solver.info() != Eigen::Success) throw NumericalError("eigenvalue iteration failed for the kernel matrix");
  eig_ = solver.eigenvalues();
}

NystromDiscretization::NystromDiscretization(KernelSpec kernel, Rule rule, std::size_t n)
    : NystromDiscretization(std::move(kernel), make_rule(rule, n)) {}

double NystromDiscretization::apply_at(double t, const Eigen::VectorXd& f) const {
  double sum = 0.0;
  for (std::size_t j = 0; j < rule_.size(); ++j) {
    sum += rule_.weights[j] * kernel_(t, rule_.nodes[j]) * f(static_cast<Eigen::Index>(j));
  }
  return sum;
}

NystromSolution::NystromSolution(const NystromDiscretization& disc, double lambda, Sampler q,
                                 Eigen::VectorXd phi)
    : disc_(&disc), lambda_(lambda), q_(std::move(q)), phi_(std::move(phi)) {}

double NystromSolution::operator()(double t) const { return q_(t) + lambda_ * disc_->apply_at(t, phi_); }

void check_off_spectrum(const NystromDiscretization& disc, double lambda) {
  if (lambda == 0.0) return;
  const double inv = 1.0 / lambda;
  const auto& eig = disc.eigenvalues();
  for (Eigen::Index i = 0; i < eig.size(); ++i) {
    const std::complex<double> m = eig(i);
    if (std::abs(inv - m) <= kSpectrumProximity * std::max(1.0, std::abs(m))) {
      const std::complex<double> nearest = 1.0 / m;
      std::ostringstream msg;
      msg.precision(12);
      msg << "lambda = " << lambda << " is within " << kSpectrumProximity
          << " of the characteristic number " << nearest.real();
      if (nearest.imag() != 0.0) msg << (nearest.imag() > 0 ? "+" : "") << nearest.imag() << "i";
      msg << " of kernel '" << disc.kernel().name << "'";
      throw SpectrumProximityError(msg.str(), nearest.real());
    }
  }
}

namespace {

Eigen::VectorXd sample(const Sampler& q, const std::vector<double>& nodes) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(nodes.size()));
  for (std::size_t i = 0; i < nodes.size(); ++i) v(static_cast<Eigen::Index>(i)) = q(nodes[i]);
  return v;
}

Eigen::PartialPivLU<Eigen::MatrixXd> factor(const NystromDiscretization& disc, double lambda) {
  check_off_spectrum(disc, lambda);
  const auto n = static_cast<Eigen::Index>(disc.size());
  return Eigen::PartialPivLU<Eigen::MatrixXd>(Eigen::MatrixXd::Identity(n, n) - lambda * disc.weighted());
}

}  // namespace

NystromSolution nystrom_solve(const NystromDiscretization& disc, double lambda, const Sampler& q) {
  if (!std::isfinite(lambda)) throw ValidationError("lambda must be finite");
  const Eigen::VectorXd rhs = sample(q, disc.nodes());
  if (lambda == 0.0) return NystromSolution(disc, lambda, q, rhs);
  return NystromSolution(disc, lambda, q, factor(disc, lambda).solve(rhs));
}

Eigen::MatrixXd resolvent(const NystromDiscretization& disc, double lambda) {
  if (!std::isfinite(lambda)) throw ValidationError("lambda must be finite");
  if (lambda == 0.0) return disc.K();
  return factor(disc, lambda).solve(disc.K());
}

Eigen::VectorXd apply_resolvent(const NystromDiscretization& disc, const Eigen::MatrixXd& H,
                                double lambda, const Sampler& q) {
  const Eigen::VectorXd qv = sample(q, disc.nodes());
  const Eigen::Map<const Eigen::VectorXd> w(disc.weights().data(), static_cast<Eigen::Index>(disc.size()));
  return qv + lambda * (H * w.asDiagonal() * qv);
}

SpectralReport char_numbers(const NystromDiscretization& disc, double discard_threshold) {
  Eigen::EigenSolver<Eigen::MatrixXd> solver(disc.weighted(), true);
  if (solver.info() != Eigen::Success) throw NumericalError("eigenvalue iteration failed for the kernel matrix");
  const Eigen::VectorXcd values = solver.eigenvalues();
  const Eigen::MatrixXcd vectors = solver.eigenvectors();

  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (std::abs(values(i)) > discard_threshold) keep.push_back(i);
  }
  std::sort(keep.begin(), keep.end(), [&](Eigen::Index a, Eigen::Index b) {
    const auto la = 1.0 / values(a), lb = 1.0 / values(b);
    if (std::abs(la) != std::abs(lb)) return std::abs(la) < std::abs(lb);
    if (la.real() != lb.real()) return la.real() < lb.real();
    return la.imag() > lb.imag();
  });

  SpectralReport report;
  report.discard_threshold = discard_threshold;
  for (Eigen::Index i : keep) {
    report.characteristic_numbers.push_back(1.0 / values(i));
    Eigen::VectorXcd v = vectors.col(i);
    // Scale so the largest-magnitude entry is exactly 1 (fixes sign and phase).
    Eigen::Index arg = 0;
    v.cwiseAbs().maxCoeff(&arg);
    v /= v(arg);
    report.eigenfunctions.emplace_back(v.begin(), v.end());
  }
  return report;
}

double eigen_residual(const NystromDiscretization& disc, const SpectralReport& report) {
  double worst = 0.0;
  for (std::size_t i = 0; i < report.characteristic_numbers.size(); ++i) {
    const auto& f = report.eigenfunctions[i];
    const Eigen::Map<const Eigen::VectorXcd> phi(f.data(), static_cast<Eigen::Index>(f.size()));
    const Eigen::VectorXcd r = phi - report.characteristic_numbers[i] * (disc.weighted().cast<std::complex<double>>() * phi);
    worst = std::max(worst, r.cwiseAbs().maxCoeff() / phi.cwiseAbs().maxCoeff());
  }
  return worst;
}

std::string to_string(KernelClass c) {
  switch (c) {
    case KernelClass::exceptional: return "exceptional";
    case KernelClass::non_exceptional: return "non-exceptional";
    case KernelClass::inconclusive: return "inconclusive";
  }
  return "unknown";
}

SweepReport param_singularity_sweep(const NystromDiscretization& k0, const NystromDiscretization& k1,
                                    const std::vector<double>& mu_grid) {
  if (k0.nodes() != k1.nodes() || k0.weights() != k1.weights()) {
    throw ValidationError("sweep kernels must share one discretization");
  }
  for (double mu : mu_grid) {
    if (!std::isfinite(mu)) throw ValidationError("mu grid values must be finite");
  }
  const auto n = static_cast<Eigen::Index>(k0.size());

  auto evaluate = [&](double mu) {
    const Eigen::MatrixXd M = Eigen::MatrixXd::Identity(n, n) - (k0.weighted() + mu * k1.weighted());
    Eigen::BDCSVD<Eigen::MatrixXd> svd(M);
    const auto& s = svd.singularValues();
    SweepPoint p;
    p.mu = mu;
    p.norm = s(0);
    p.sigma_min = s(s.size() - 1);
    p.flagged = p.sigma_min < kSingularRatio * p.norm;
    return p;
  };

  SweepReport report;
  report.points.resize(mu_grid.size());
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), mu_grid.size()));
  std::vector<std::future<void>> jobs;
  for (std::size_t w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < mu_grid.size(); i += workers) report.points[i] = evaluate(mu_grid[i]);
    }));
  }
  for (auto& j : jobs) j.get();

  std::size_t flagged = 0;
  bool adjacent = false;
  for (std::size_t i = 0; i < report.points.size(); ++i) {
    if (!report.points[i].flagged) continue;
    ++flagged;
    if (i > 0 && report.points[i - 1].flagged) adjacent = true;
  }
  if (flagged >= 2 && flagged == report.points.size()) {
    report.classification = KernelClass::exceptional;
  } else if (adjacent) {
    report.classification = KernelClass::inconclusive;
  } else {
    report.classification = KernelClass::non_exceptional;
  }
  return report;
}

double degenerate_residual(const Sampler& rho, const Sampler& sigma, double mu, const QuadratureRule& rule) {
  if (!std::isfinite(mu)) throw ValidationError("mu must be finite");
  const double rr = rule.integrate([&](double t) { return rho(t) * rho(t); });
  const double rs = rule.integrate([&](double t) { return rho(t) * sigma(t); });
  if (std::abs(rr - 1.0) > 1e-8 || std::abs(rs) > 1e-8) {
    std::ostringstream msg;
    msg.precision(12);
    msg << "degenerate kernel needs int rho^2 = 1 and int rho*sigma = 0; measured " << rr << " and " << rs;
    throw PreconditionError(msg.str());
  }
  const KernelSpec k = kernel_degenerate(rho, sigma, mu);
  const auto phi = [&](double t) { return rho(t) + mu * sigma(t); };
  double worst = 0.0;
  for (double t : rule.nodes) {
    double applied = 0.0;
    for (std::size_t j = 0; j < rule.size(); ++j) applied += rule.weights[j] * k(t, rule.nodes[j]) * phi(rule.nodes[j]);
    worst = std::max(worst, std::abs(phi(t) - applied));
  }
  return worst;
}

Sampler named_function(const std::string& name) {
  if (name == "zero") return [](double) { return 0.0; };
  if (name == "one") return [](double) { return 1.0; };
  if (name == "t") return [](double t) { return t; };
  if (name == "t-half") return [](double t) { return t - 0.5; };
  if (name == "exp") return [](double t) { return std::exp(t); };
  if (name == "exp-neg") return [](double t) { return std::exp(-t); };
  if (name == "cos") return [](double t) { return std::cos(t); };
  if (name == "sin") return [](double t) { return std::sin(t); };
  throw ValidationError("unknown function '" + name + "' (expected zero, one, t, t-half, exp, exp-neg, cos or sin)");
}

}  // namespace ecodyn::fredholm
