#include "ecodyn/cli/commands.hpp"

#include <complex>
#include <fstream>
#include <future>
#include <sstream>

#include "ecodyn/allen.hpp"
#include "ecodyn/dims.hpp"
#include "ecodyn/fredholm.hpp"
#include "ecodyn/harrod.hpp"
#include "ecodyn/leontief.hpp"
#include "ecodyn/longwave.hpp"
#include "ecodyn/reduction.hpp"

namespace ecodyn::cli {

namespace {

using io::Report;

KeySpec opt(std::string name, std::string def, std::string help) {
  return {std::move(name), std::move(def), std::move(help), false};
}
KeySpec req(std::string name, std::string help) { return {std::move(name), std::nullopt, std::move(help), true}; }
KeySpec maybe(std::string name, std::string help) { return {std::move(name), std::nullopt, std::move(help), false}; }

std::vector<KeySpec> grid_keys(const std::string& t_end, std::size_t steps) {
  return {opt("t_start", "0", "first grid node"), opt("t_end", t_end, "last grid node"),
          opt("steps", std::to_string(steps), "grid steps")};
}

std::vector<KeySpec> join(std::vector<KeySpec> a, const std::vector<KeySpec>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

TimeGrid grid_of(const Params& p) {
  return TimeGrid(p.number("t_start"), p.number("t_end"), p.count("steps"));
}

Report trajectory_report(const Trajectory& traj) {
  Report r;
  r.table = io::from_trajectory(traj);
  return r;
}

void put_roots(Report& r, const std::string& prefix, const std::vector<std::complex<double>>& roots) {
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const std::string k = prefix + std::to_string(i + 1);
    r.set(k + "_re", roots[i].real());
    r.set(k + "_im", roots[i].imag());
  }
}

allen::Stiffness stiffness_of(const Params& p) {
  const std::string s = p.text("stiffness");
  if (s == "printed") return allen::Stiffness::printed;
  if (s == "system") return allen::Stiffness::from_system;
  throw ValidationError("key 'stiffness': expected printed or system, got '" + s + "'");
}

// ---------------------------------------------------------------------------
// Harrod family

Report run_harrod(const Params& p) {
  harrod::HarrodParams hp;
  hp.mu = p.number("mu");
  hp.Y0 = p.number("Y0");
  const auto run = harrod::classical_trajectory(hp, p.number("nu"), grid_of(p));
  Report r = trajectory_report(run.trajectory);
  r.set("growth_rate", hp.mu / p.number("nu"));
  r.set("rk4_deviation", run.rk4_deviation);
  return r;
}

Report run_harrod_corrected(const Params& p) {
  harrod::HarrodParams hp;
  hp.mu = p.number("mu");
  hp.nu_star = p.number("nu_star");
  hp.t_star = p.number("t_star");
  hp.Y0 = p.number("Y0");
  const auto run = harrod::corrected_trajectory(hp, grid_of(p));
  Report r = trajectory_report(run.trajectory);
  r.set("sigma", hp.sigma());
  r.set("blowup_time", run.blowup_time);
  r.set("forecast_horizon", run.forecast_horizon);
  r.set("rk4_deviation", run.rk4_deviation);
  return r;
}

Report run_harrod_discrete(const Params& p) {
  harrod::HarrodParams hp;
  hp.mu = p.number("mu");
  hp.K0 = p.number("K0");
  const std::size_t years = p.count("years");
  const auto path = harrod::discrete_path(hp, p.number("nu"), years);

  Report r;
  std::vector<double> t, jump;
  std::vector<io::Cell> jumps{std::string()};
  for (std::size_t n = 0; n <= years; ++n) t.push_back(static_cast<double>(n));
  for (const auto& [year, j] : path.impulses) jumps.emplace_back(j);
  r.table.add("t", t);
  r.table.add("K", path.K);
  r.table.add("Y_tilde", path.Y_tilde);
  r.table.add("I_tilde", path.I_tilde);
  r.table.add("jump", jumps);
  r.set("alpha", path.alpha);
  r.set("income_ratio", harrod::geometric_income_ratio(path.alpha, years));
  if (path.alpha < 1.0) {
    const auto a = harrod::adequacy_residual(path.alpha, years);
    r.set("exp_growth", a.lhs_exp);
    r.set("geometric_growth", a.rhs_rational);
    r.set("residual_growth", a.residual_growth);
    r.set("residual_step", a.residual_step);
    r.set("mismatch_ratio", a.mismatch_ratio);
  }
  return r;
}

allen::AllenScaling scaling_of(const Params& p) {
  allen::AllenScaling s;
  s.t0 = p.number("t0");
  s.t_star = p.number("t_star");
  s.Y0 = p.number("Y_ref");
  s.C0 = p.number("C_ref");
  s.I0 = p.number("I_ref");
  s.Z0 = p.number("Z_ref");
  return s;
}

std::vector<KeySpec> scaling_keys() {
  return {opt("t0", "1", "arbitrary time scale"), opt("t_star", "1", "length of the year"),
          opt("Y_ref", "1", "reference income intensity"), opt("C_ref", "1", "reference consumption intensity"),
          opt("I_ref", "1", "reference investment intensity"), opt("Z_ref", "1", "reference demand intensity")};
}

Report run_harrod_domar(const Params& p) {
  const auto traj = allen::harrod_domar_trajectory(scaling_of(p), p.number("mu"), p.number("nu"), grid_of(p));
  Report r = trajectory_report(traj);
  r.set("growth_rate", p.number("mu") / (p.number("nu") * p.number("t0")));
  return r;
}

// ---------------------------------------------------------------------------
// Allen family

Report run_phillips(const Params& p) {
  const allen::PhillipsParams pp{p.number("kappa"), p.number("nu"), p.number("mu"), p.number("lambda")};
  const auto conv = stiffness_of(p);
  const auto scaling = scaling_of(p);
  const auto run = allen::phillips_solve(pp, scaling, p.number("y0"), p.number("dy0"), grid_of(p), conv);
  Report r = trajectory_report(run.trajectory);
  r.set("a1", allen::damping_a1(pp));
  r.set("b1", allen::stiffness_b1(pp, conv));
  r.set("a", run.a);
  r.set("b", run.b);
  put_roots(r, "root", run.roots);
  r.set("oscillatory", run.period.has_value());
  if (run.period) r.set("period", *run.period);
  const auto cubic = allen::phillips_capital_roots(pp, scaling.rho(), conv);
  r.set("capital_root_deviation", cubic.max_deviation);
  return r;
}

Report run_bergstrom(const Params& p) {
  const allen::BergstromParams bp{p.number("mu"), p.number("nu"), p.number("gamma"), p.number("lambda")};
  const auto run = allen::bergstrom_capital_solve(bp, p.number("k0"), p.number("dk0"), grid_of(p));
  Report r = trajectory_report(run.trajectory);
  r.set("damping", run.damping);
  r.set("stiffness", run.stiffness);
  r.set("equivalent_kappa", run.equivalent_kappa);
  put_roots(r, "root", run.roots);
  return r;
}

Report run_multiplier(const Params& p) {
  return trajectory_report(allen::multiplier_trajectory(p.number("mu"), p.number("lambda"), p.number("Y0"), grid_of(p)));
}

Report run_scale_check(const Params& p) {
  const auto model = allen::parse_scale_model(p.text("model"));
  allen::ScaleCheckParams sp;
  sp.mu = p.number("mu");
  sp.nu = p.number("nu");
  sp.kappa = p.number("kappa");
  sp.lambda = p.number("lambda");
  sp.nu_star = p.number("nu_star");
  sp.t_star = p.number("t_star");
  sp.y_init = p.number("y0");
  sp.dy_init = p.number("dy0");
  sp.stiffness = stiffness_of(p);
  const TimeGrid grid = grid_of(p);
  const double ta = p.number("t0_a"), tb = p.number("t0_b");

  const allen::ScaleInvarianceReport rep = allen::scale_invariance_check(model, sp, ta, tb, grid);
  // The two runs are independent; evaluate them side by side for the table.
  auto fa = std::async(std::launch::async, [&] { return allen::physical_income(model, sp, ta, grid); });
  auto fb = std::async(std::launch::async, [&] { return allen::physical_income(model, sp, tb, grid); });
  const Vector ya = fa.get(), yb = fb.get();

  Report r;
  std::vector<double> t;
  for (std::size_t k = 0; k < grid.size(); ++k) t.push_back(grid.node(k));
  r.table.add("t", t);
  r.table.add("Y_a", ya);
  r.table.add("Y_b", yb);
  r.set("model", allen::to_string(model));
  r.set("t0_a", ta);
  r.set("t0_b", tb);
  r.set("max_rel_deviation", rep.max_rel_deviation);
  r.set("verdict", rep.verdict == allen::ScaleVerdict::scale_dependent ? "scale_dependent" : "scale_invariant");
  r.set("trivially_invariant", rep.trivially_invariant);
  return r;
}

// ---------------------------------------------------------------------------
// Long waves

Report run_longwave(const Params& p) {
  const longwave::LongWaveParams lp{p.number("p"), p.number("q"), p.number("r"), p.number("s")};
  const auto report = longwave::lw_classify(lp);
  const auto traj = longwave::lw_simulate(lp, p.number("x0"), p.number("y0"), grid_of(p));
  Report r = trajectory_report(traj);
  r.set("regime", longwave::to_string(report.regime));
  put_roots(r, "eigenvalue", {report.eigenvalues.begin(), report.eigenvalues.end()});
  if (report.period_years) r.set("period_years", *report.period_years);
  if (const auto sim = longwave::zero_crossing_period(traj)) r.set("simulated_period", *sim);
  return r;
}

// ---------------------------------------------------------------------------
// Leontief

std::vector<std::vector<double>> read_rows(const std::filesystem::path& path, const std::string& key) {
  std::ifstream f(path);
  if (!f) throw ValidationError("key '" + key + "': cannot read " + path.string());
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(f, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    for (char& c : line) {
      if (c == ' ' || c == '\t' || c == '\r' || c == ';') c = ',';
    }
    std::string compact;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line[i] == ',' && (compact.empty() || compact.back() == ',')) continue;
      compact += line[i];
    }
    if (!compact.empty() && compact.back() == ',') compact.pop_back();
    rows.push_back(parse_numbers(key, compact));
  }
  return rows;
}

leontief::MatrixXd matrix_of(const Params& p) {
  std::vector<std::vector<double>> rows;
  if (p.has("matrix") == p.has("A")) throw ValidationError("key 'matrix': give exactly one of matrix (file) or A (inline)");
  if (p.has("matrix")) {
    rows = read_rows(p.path("matrix"), "matrix");
    if (rows.empty() || rows.front().size() != 1) {
      throw ValidationError("key 'matrix': file must start with the dimension n on its own line");
    }
    const double nd = rows.front().front();
    if (nd < 1 || nd != std::floor(nd)) throw ValidationError("key 'matrix': dimension must be a positive integer");
    rows.erase(rows.begin());
    if (rows.size() != static_cast<std::size_t>(nd)) {
      throw ValidationError("key 'matrix': expected " + std::to_string(static_cast<long>(nd)) + " rows, found " +
                            std::to_string(rows.size()));
    }
  } else {
    std::string text = p.text("A");
    std::size_t start = 0;
    while (true) {
      const auto semi = text.find(';', start);
      rows.push_back(parse_numbers("A", text.substr(start, semi - start)));
      if (semi == std::string::npos) break;
      start = semi + 1;
    }
  }
  const auto n = static_cast<Eigen::Index>(rows.size());
  leontief::MatrixXd A(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (static_cast<Eigen::Index>(rows[static_cast<std::size_t>(i)].size()) != n) {
      throw ValidationError(std::string("key '") + (p.has("matrix") ? "matrix" : "A") + "': row " +
                            std::to_string(i + 1) + " does not have " + std::to_string(n) + " entries");
    }
    for (Eigen::Index j = 0; j < n; ++j) A(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return A;
}

leontief::VectorXd vector_of(const Params& p, const std::string& key, Eigen::Index n) {
  const auto v = p.numbers(key);
  if (static_cast<Eigen::Index>(v.size()) != n) {
    throw ValidationError("key '" + key + "': expected " + std::to_string(n) + " values, got " + std::to_string(v.size()));
  }
  return Eigen::Map<const leontief::VectorXd>(v.data(), n);
}

leontief::Demand demand_of(const Params& p, Eigen::Index n, std::size_t steps) {
  if (p.has("demand") == p.has("demand_file")) {
    throw ValidationError("key 'demand': give exactly one of demand (constant vector) or demand_file");
  }
  if (p.has("demand")) return leontief::constant_demand(vector_of(p, "demand", n));
  const auto rows = read_rows(p.path("demand_file"), "demand_file");
  if (rows.size() != steps + 1) {
    throw ValidationError("key 'demand_file': expected " + std::to_string(steps + 1) + " rows (one per grid node), found " +
                          std::to_string(rows.size()));
  }
  std::vector<leontief::VectorXd> samples;
  for (const auto& row : rows) {
    if (static_cast<Eigen::Index>(row.size()) != n) {
      throw ValidationError("key 'demand_file': every row needs " + std::to_string(n) + " values");
    }
    samples.emplace_back(Eigen::Map<const leontief::VectorXd>(row.data(), n));
  }
  // Linear interpolation between grid nodes on [0, 1].
  return [samples, steps](double t) -> leontief::VectorXd {
    const double pos = std::clamp(t, 0.0, 1.0) * static_cast<double>(steps);
    const auto lo = std::min<std::size_t>(static_cast<std::size_t>(pos), steps - 1);
    const double frac = pos - static_cast<double>(lo);
    return (1.0 - frac) * samples[lo] + frac * samples[lo + 1];
  };
}

std::vector<KeySpec> matrix_keys() {
  return {maybe("matrix", "file: n, then n rows of n coefficients"), maybe("A", "inline rows, ';'-separated")};
}

Report run_leontief_static(const Params& p) {
  const auto A = matrix_of(p);
  const auto c = vector_of(p, "demand", A.rows());
  const std::string m = p.text("method");
  if (m != "direct" && m != "iterate") throw ValidationError("key 'method': expected direct or iterate, got '" + m + "'");
  const auto method = m == "direct" ? leontief::Method::direct : leontief::Method::iterate;
  const auto res = leontief::static_solve(A, c, method, p.number("tol"), p.count("max_iter"));
  const auto metz = leontief::metzler_check(A);

  Report r;
  std::vector<double> idx, x, sums;
  for (Eigen::Index i = 0; i < A.rows(); ++i) {
    idx.push_back(static_cast<double>(i + 1));
    x.push_back(res.X(i));
  }
  r.table.add("i", idx);
  r.table.add("X", x);
  r.table.add("row_sum", metz.row_sums);
  r.set("method", m);
  r.set("residual", res.residual);
  r.set("metzler", metz.holds);
  if (res.log) {
    r.set("iterations", static_cast<long long>(res.log->iterations));
    r.set("last_step", res.log->residuals.back());
  }
  return r;
}

leontief::LeontiefModel model_of(const Params& p, std::size_t order) {
  leontief::LeontiefModel m;
  m.A = matrix_of(p);
  const auto n = m.A.rows();
  m.order = order;
  m.t0 = p.number("t0");
  m.X0 = vector_of(p, "x0", n);
  if (order >= 2) {
    if (!p.has("xdot0")) throw ValidationError("key 'xdot0' is required for order 2");
    m.Xdot0 = vector_of(p, "xdot0", n);
  }
  m.demand = demand_of(p, n, p.count("steps"));
  return m;
}

std::vector<KeySpec> model_keys(std::size_t steps) {
  return join(matrix_keys(),
              {maybe("demand", "constant demand vector"), maybe("demand_file", "per-node demand rows on the grid"),
               req("x0", "initial output"), maybe("xdot0", "initial output rate (order 2)"),
               opt("t0", "1", "horizon in physical time"), opt("steps", std::to_string(steps), "grid steps on [0, 1]")});
}

Report run_leontief_dynamic(const Params& p) {
  const std::size_t order = p.count("order");
  const auto model = model_of(p, order);
  const std::size_t steps = p.count("steps");
  const auto traj = leontief::dynamic_solve(model, steps);
  Report r = trajectory_report(traj);
  const auto red = leontief::taylor_reduce(model);
  r.set("order", static_cast<long long>(order));
  for (std::size_t k = 0; k < red.coefficients.size(); ++k) r.set("coefficient_" + std::to_string(k + 1), red.coefficients[k]);
  if (p.has("x_star")) {
    const auto ds = leontief::demand_scale(model, vector_of(p, "x_star", model.A.rows()), p.number("tol"), steps);
    r.set("alpha", ds.alpha);
    r.set("alpha_unclamped", ds.unclamped);
    r.set("aggregate_base", ds.aggregate_base);
    r.set("aggregate_full", ds.aggregate_full);
    for (std::size_t i = 0; i < ds.component_residuals.size(); ++i) {
      r.set("residual_x" + std::to_string(i + 1), ds.component_residuals[i]);
    }
  }
  return r;
}

Report run_leontief_volterra(const Params& p) {
  const auto model = model_of(p, 2);
  const std::size_t steps = p.count("steps");
  const auto traj = leontief::volterra_solve(model, TimeGrid(0.0, 1.0, steps));
  const auto rk = leontief::dynamic_solve(model, steps);
  double gap = 0.0;
  for (std::size_t k = 0; k < traj.size(); ++k) {
    for (std::size_t i = 0; i < traj.dimension(); ++i) gap = std::max(gap, std::abs(traj.at(k, i) - rk.at(k, i)));
  }
  Report r = trajectory_report(traj);
  r.set("rk4_gap", gap);
  return r;
}

// ---------------------------------------------------------------------------
// Fredholm

// "name(arg, arg)" -> {name, args}.
std::pair<std::string, std::vector<std::string>> split_call(const std::string& key, const std::string& text) {
  const auto open = text.find('(');
  if (open == std::string::npos) return {text, {}};
  if (text.back() != ')') throw ValidationError("key '" + key + "': unbalanced parentheses in '" + text + "'");
  std::vector<std::string> args;
  std::string inner = text.substr(open + 1, text.size() - open - 2), cur;
  std::istringstream in(inner);
  while (std::getline(in, cur, ',')) {
    const auto b = cur.find_first_not_of(' '), e = cur.find_last_not_of(' ');
    args.push_back(b == std::string::npos ? "" : cur.substr(b, e - b + 1));
  }
  return {text.substr(0, open), args};
}

fredholm::KernelSpec kernel_of(const Params& p, const std::string& key) {
  const auto [name, args] = split_call(key, p.text(key));
  auto want = [&, &name = name, &args = args](std::size_t n) {
    if (args.size() != n) {
      throw ValidationError("key '" + key + "': kernel " + name + " takes " + std::to_string(n) + " argument(s)");
    }
  };
  try {
    if (name == "t-plus-eta") return want(0), fredholm::kernel_t_plus_eta();
    if (name == "exp-diff") return want(0), fredholm::kernel_exp_diff();
    if (name == "zero") return want(0), fredholm::kernel_zero();
    if (name == "product") {
      want(2);
      return fredholm::kernel_product("product", fredholm::named_function(args[0]), fredholm::named_function(args[1]));
    }
    if (name == "degenerate") {
      want(2);
      return fredholm::kernel_degenerate(fredholm::named_function(args[0]), fredholm::named_function(args[1]),
                                         p.number("mu"));
    }
    if (name == "ode-reduced") {
      if (args.size() < 2) throw ValidationError("kernel ode-reduced needs coefficients c_n, ..., c_0");
      Vector coeffs;
      for (const auto& a : args) coeffs.push_back(parse_number(key, a));
      const OdeSpec spec{coeffs, {}};
      const std::size_t n = spec.order();
      const Vector zeros_left((n + 1) / 2, 0.0), zeros_right(n / 2, 0.0);
      return fredholm::ode_to_integral(spec, fredholm::default_placement(n, zeros_left, zeros_right)).kernel;
    }
  } catch (const ValidationError& e) {
    const std::string what = e.what();
    if (what.rfind("key '", 0) == 0) throw;
    throw ValidationError("key '" + key + "': " + what);
  }
  throw ValidationError("key '" + key + "': unknown kernel '" + name +
                        "' (expected t-plus-eta, exp-diff, zero, product(g,h), degenerate(rho,sigma) or ode-reduced(c_n,...,c_0))");
}

fredholm::QuadratureRule rule_of(const Params& p) {
  return fredholm::make_rule(fredholm::parse_rule(p.text("rule")), p.count("nodes"));
}

std::vector<KeySpec> quadrature_keys() {
  return {opt("rule", "simpson", "simpson or gauss-legendre"), opt("nodes", "201", "quadrature nodes")};
}

fredholm::Sampler function_of(const Params& p, const std::string& key) {
  try {
    return fredholm::named_function(p.text(key));
  } catch (const ValidationError& e) {
    throw ValidationError("key '" + key + "': " + e.what());
  }
}

Report run_fredholm_solve(const Params& p) {
  const fredholm::NystromDiscretization disc(kernel_of(p, "kernel"), rule_of(p));
  const double lambda = p.number("lambda");
  const auto q = function_of(p, "q");
  const auto sol = fredholm::nystrom_solve(disc, lambda, q);
  Report r;
  std::vector<double> phi, qs;
  for (std::size_t j = 0; j < disc.size(); ++j) {
    phi.push_back(sol.at_nodes()(static_cast<Eigen::Index>(j)));
    qs.push_back(q(disc.nodes()[j]));
  }
  r.table.add("t", disc.nodes());
  r.table.add("phi", phi);
  r.table.add("q", qs);
  r.set("kernel", disc.kernel().name);
  r.set("lambda", lambda);
  return r;
}

Report run_fredholm_spectrum(const Params& p) {
  const fredholm::NystromDiscretization disc(kernel_of(p, "kernel"), rule_of(p));
  const auto rep = fredholm::char_numbers(disc, p.number("discard"));
  Report r;
  std::vector<double> idx, re, im;
  for (std::size_t i = 0; i < rep.characteristic_numbers.size(); ++i) {
    idx.push_back(static_cast<double>(i + 1));
    re.push_back(rep.characteristic_numbers[i].real());
    im.push_back(rep.characteristic_numbers[i].imag());
  }
  r.table.add("i", idx);
  r.table.add("lambda_re", re);
  r.table.add("lambda_im", im);
  r.set("kernel", disc.kernel().name);
  r.set("count", static_cast<long long>(rep.characteristic_numbers.size()));
  r.set("discard_threshold", rep.discard_threshold);
  return r;
}

Report run_fredholm_sweep(const Params& p) {
  const auto rule = rule_of(p);
  const fredholm::NystromDiscretization d0(kernel_of(p, "k0"), rule), d1(kernel_of(p, "k1"), rule);
  const auto rep = fredholm::param_singularity_sweep(d0, d1, p.numbers("mu_grid"));
  Report r;
  std::vector<double> mu, smin, norm, flag;
  std::size_t flagged = 0;
  for (const auto& pt : rep.points) {
    mu.push_back(pt.mu);
    smin.push_back(pt.sigma_min);
    norm.push_back(pt.norm);
    flag.push_back(pt.flagged ? 1.0 : 0.0);
    flagged += pt.flagged;
  }
  r.table.add("mu", mu);
  r.table.add("sigma_min", smin);
  r.table.add("norm", norm);
  r.table.add("flagged", flag);
  r.set("classification", fredholm::to_string(rep.classification));
  r.set("flagged", static_cast<long long>(flagged));
  return r;
}

// ---------------------------------------------------------------------------
// Dimensions

Report run_dim_check(const Params& p) {
  const auto symbols = dims::parse_dimension_table(p.text("dims"));
  const auto rel = dims::parse_relation(p.text("relation"), symbols);
  const auto rep = dims::check_relation(rel.lhs, rel.rhs);
  Report r;
  r.set("relation", p.text("relation"));
  r.set("verdict", rep.consistent ? "consistent" : "inconsistent");
  r.set("lhs_dim", rep.lhs_dim.to_string());
  r.set("rhs_dim", rep.rhs_dim.to_string());
  r.set("first_violation", rep.first_violation.value_or("none"));
  r.set("detail", rep.detail);
  return r;
}

}  // namespace

std::vector<CommandSpec> command_table(std::size_t steps) {
  std::vector<CommandSpec> t;
  t.push_back({"harrod", "classical Harrod growth Y = Y0 exp(mu t / nu)",
               join({opt("mu", "0.5", "accumulation share"), opt("nu", "10", "capital/income ratio"),
                     opt("Y0", "1", "initial income intensity")},
                    grid_keys("10", steps)),
               run_harrod});
  t.push_back({"harrod-corrected", "corrected Harrod model Y = Y0 / (1 - sigma t)^2",
               join({opt("mu", "0.5", "accumulation share"), opt("nu_star", "10", "base capital/income ratio"),
                     opt("t_star", "1", "length of the year"), opt("Y0", "1", "initial income intensity")},
                    grid_keys("10", steps)),
               run_harrod_corrected});
  t.push_back({"harrod-discrete", "year-by-year Harrod recursion and its gap to the exponential law",
               {opt("mu", "0.5", "accumulation share"), opt("nu", "1", "capital/income ratio"),
                opt("K0", "1", "initial capital"), opt("years", "10", "number of years")},
               run_harrod_discrete});
  t.push_back({"harrod-domar", "Harrod-Domar with an explicit time scale t0",
               join(join({opt("mu", "0.5", "accumulation share"), opt("nu", "1", "capital/income ratio")}, scaling_keys()),
                    grid_keys("1", steps)),
               run_harrod_domar});
  t.push_back({"phillips", "Phillips accelerator-multiplier income equation",
               join(join({opt("kappa", "4", "investment reaction rate"), opt("nu", "0.6", "accelerator power"),
                          opt("mu", "0.5", "multiplier"), opt("lambda", "1", "demand reaction rate"),
                          opt("y0", "1", "initial income"), opt("dy0", "0", "initial income rate"),
                          opt("stiffness", "printed", "printed (kappa nu lambda) or system (kappa mu lambda)")},
                         scaling_keys()),
                    grid_keys("10", steps)),
               run_phillips});
  t.push_back({"bergstrom", "Bergstrom capital equation",
               join({opt("mu", "0.5", "multiplier"), opt("nu", "0.6", "accelerator power"),
                     opt("gamma", "4", "investment reaction rate"), opt("lambda", "1", "demand reaction rate"),
                     opt("k0", "1", "initial capital"), opt("dk0", "0", "initial capital rate")},
                    grid_keys("10", steps)),
               run_bergstrom});
  t.push_back({"multiplier", "pure multiplier model",
               join({opt("mu", "0.5", "multiplier"), opt("lambda", "1", "demand reaction rate"),
                     opt("Y0", "1", "initial income")},
                    grid_keys("2", steps)),
               run_multiplier});
  t.push_back({"longwave", "simplified long-wave model",
               join({opt("p", "0.1", "rate p"), opt("q", "1", "coefficient q"), opt("r", "0.1", "rate r"),
                     opt("s", "-2", "coefficient s"), opt("x0", "1", "initial x"), opt("y0", "0", "initial y")},
                    grid_keys("200", steps)),
               run_longwave});
  t.push_back({"leontief-static", "static balance X = A X + c",
               join(matrix_keys(), {req("demand", "final demand vector"), opt("method", "direct", "direct or iterate"),
                                    opt("tol", "1e-12", "residual tolerance"), opt("max_iter", "100000", "iteration cap")}),
               run_leontief_static});
  t.push_back({"leontief-dynamic", "Taylor-truncated dynamic balance on [0, 1]",
               join(model_keys(steps), {opt("order", "2", "truncation order (1 or 2)"),
                                        maybe("x_star", "target output integrals for demand scaling"),
                                        opt("tol", "1e-9", "demand scaling tolerance")}),
               run_leontief_dynamic});
  t.push_back({"leontief-volterra", "second-order dynamic balance through its Volterra form", model_keys(steps),
               run_leontief_volterra});
  t.push_back({"fredholm-solve", "Nystrom solve of phi = lambda K phi + q",
               join({req("kernel", "kernel name"), opt("lambda", "0.5", "equation parameter"),
                     opt("q", "one", "free term name"), opt("mu", "0", "embedded kernel parameter")},
                    quadrature_keys()),
               run_fredholm_solve});
  t.push_back({"fredholm-spectrum", "characteristic numbers of a kernel",
               join({req("kernel", "kernel name"), opt("mu", "0", "embedded kernel parameter"),
                     opt("discard", "1e-10", "eigenvalue discard threshold")},
                    quadrature_keys()),
               run_fredholm_spectrum});
  t.push_back({"fredholm-sweep", "singular values of Id - (K0 + mu K1) over a mu grid",
               join({req("k0", "base kernel"), req("k1", "parameter kernel"), opt("mu_grid", "0,1,10,100", "mu values"),
                     opt("mu", "0", "embedded parameter of degenerate kernels")},
                    quadrature_keys()),
               run_fredholm_sweep});
  t.push_back({"dim-check", "dimensional consistency of a relation",
               {req("relation", "lhs = rhs"), req("dims", "symbol table, e.g. K:$, Y:$/s, nu:1")}, run_dim_check});
  t.push_back({"scale-check", "rerun a model under two time scales",
               join({opt("model", "harrod_domar", "harrod_domar, phillips, multiplier or corrected_harrod"),
                     opt("t0_a", "1", "first time scale"), opt("t0_b", "2", "second time scale"),
                     opt("mu", "0.5", "accumulation share / multiplier"), opt("nu", "1", "capital ratio / accelerator"),
                     opt("kappa", "4", "investment reaction rate"), opt("lambda", "1", "demand reaction rate"),
                     opt("nu_star", "10", "base capital/income ratio"), opt("t_star", "1", "length of the year"),
                     opt("y0", "1", "initial income"), opt("dy0", "0", "initial income rate"),
                     opt("stiffness", "printed", "printed or system")},
                    grid_keys("1", steps)),
               run_scale_check});
  return t;
}

}  // namespace ecodyn::cli
