#include "sympflag/cli/commands.hpp"

#include <cmath>
#include <iostream>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>

#include "sympflag/cli/report.hpp"
#include "sympflag/cli/suites.hpp"
#include "sympflag/dynamics.hpp"
#include "sympflag/emfield.hpp"
#include "sympflag/errors.hpp"
#include "sympflag/random.hpp"
#include "sympflag/roots.hpp"
#include "sympflag/s4lb.hpp"

namespace sympflag::cli {
namespace {

using json = nlohmann::ordered_json;

json header(const std::string& command, const RunConfig& cfg) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  j["seed"] = cfg.seed;
  return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

int cmd_verify(const std::string& suite, const RunConfig& cfg) {
  const auto checks = run_suite(suite, cfg);
  std::size_t passed = 0;
  for (const auto& c : checks) passed += c.passed;
  const bool ok = passed == checks.size();
  if (cfg.format == Format::Json) {
    json j = header("verify", cfg);
    j["suite"] = suite;
    j["trials"] = cfg.trials;
    j["passed"] = ok;
    j["checks"] = to_json(checks);
    emit(cfg, dump(j));
  } else {
    std::ostringstream os;
    write_checks_csv(os, checks);
    emit(cfg, os.str());
  }
  std::cerr << passed << "/" << checks.size() << " checks passed\n";
  for (const auto& c : checks)
    if (!c.passed) std::cerr << "FAILED " << c.suite << "." << c.name << ": " << c.detail << "\n";
  return ok ? kPass : kCheckFailure;
}

struct LbArgs {
  double ell = 0.0;
  int N = 0;
  std::size_t samples = 200;
  std::string meta;
};

int cmd_lb(const LbArgs& a, const RunConfig& cfg) {
  using namespace s4lb;
  const auto ell = HalfInteger::from_double(a.ell);
  const RadialSolution sol = ell.twice == 0 ? f0_solution() : g_ell_solution(ell, a.N);

  std::vector<double> grid = omega_grid(a.samples);
  // The midpoint row is always present; f0 vanishes there.
  const double mid = std::numbers::pi / 2;
  bool has_mid = false;
  for (double w : grid) has_mid |= std::abs(w - mid) < 1e-12;
  if (!has_mid) {
    grid.push_back(mid);
    std::sort(grid.begin(), grid.end());
  }

  json meta = header("lb", cfg);
  meta["ell"] = ell.value();
  meta["N"] = sol.kind == SolutionKind::F0 ? 0 : sol.N;
  meta["solution"] = sol.kind == SolutionKind::F0 ? "f0" : "g_ell";
  meta["theta_sq"] = sol.theta_sq;
  meta["theta"] = std::isnan(sol.theta()) ? json(nullptr) : json(sol.theta());
  meta["coeffs"] = sol.coeffs;
  meta["omega_min"] = 0.05;
  meta["omega_max"] = std::numbers::pi - 0.05;
  meta["rows"] = grid.size();

  double max_res = 0.0;
  std::vector<std::array<double, 3>> rows;
  for (double w : grid) {
    const double r = lb_radial_residual(sol, w);
    max_res = std::max(max_res, r);
    rows.push_back({w, evaluate(sol, w).f, r});
  }
  meta["max_residual"] = max_res;
  const auto integ = integrability(sol);
  meta["integrable"] = integ.integrable;

  if (cfg.format == Format::Json) {
    json j = meta;
    auto arr = json::array();
    for (const auto& r : rows) arr.push_back({{"omega", r[0]}, {"value", r[1]}, {"residual", r[2]}});
    j["table"] = std::move(arr);
    emit(cfg, dump(j));
    return kPass;
  }
  std::ostringstream os;
  os << "omega,value,residual\n";
  for (const auto& r : rows)
    os << format_double(r[0]) << ',' << format_double(r[1]) << ',' << format_double(r[2]) << '\n';
  emit(cfg, os.str());
  std::string meta_path = a.meta;
  if (meta_path.empty() && !cfg.out.empty()) meta_path = cfg.out + ".meta.json";
  if (meta_path.empty()) {
    std::cerr << dump(meta);
  } else {
    RunConfig m = cfg;
    m.out = meta_path;
    emit(m, dump(meta));
  }
  return kPass;
}

int cmd_roots(int n, const std::string& projection, const RunConfig& cfg) {
  const auto rs = roots::generate(n);
  if (cfg.format == Format::Json) {
    json j = header("roots", cfg);
    j["n"] = n;
    j["count"] = rs.roots.size();
    j["projection"] = projection;
    auto arr = json::array();
    for (const auto& r : rs.roots) {
      json row;
      row["coeffs"] = r;
      if (projection == "2d") row["xy"] = roots::project2d(r);
      if (projection == "3d") row["xyz"] = roots::project3d(r);
      arr.push_back(std::move(row));
    }
    j["roots"] = std::move(arr);
    emit(cfg, dump(j));
    return kPass;
  }
  std::ostringstream os;
  for (int i = 0; i < n; ++i) os << (i ? "," : "") << "L" << i + 1;
  if (projection == "2d") os << ",x,y";
  if (projection == "3d") os << ",x,y,z";
  os << '\n';
  for (const auto& r : rs.roots) {
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
    if (projection == "2d")
      for (double v : roots::project2d(r)) os << ',' << format_double(v);
    if (projection == "3d")
      for (double v : roots::project3d(r)) os << ',' << format_double(v);
    os << '\n';
  }
  emit(cfg, os.str());
  return kPass;
}

int cmd_em(const std::string& field, const RunConfig& cfg) {
  const auto psi = em::parse_field(field);
  const auto d = em::decompose(psi);
  const auto ps = em::apply_pstar(psi);
  std::vector<std::pair<std::string, std::string>> rows;
  for (int r = 0; r < 4; ++r)
    rows.emplace_back("A" + std::to_string(r), em::to_string(psi.a[static_cast<std::size_t>(r)]));
  rows.emplace_back("scalar", em::to_string(d.scalar));
  for (std::size_t i = 0; i < 3; ++i) rows.emplace_back("E" + std::to_string(i + 1), em::to_string(d.e[i]));
  for (std::size_t i = 0; i < 3; ++i) rows.emplace_back("B" + std::to_string(i + 1), em::to_string(d.b[i]));
  for (std::size_t r = 0; r < 4; ++r) rows.emplace_back("pstar" + std::to_string(r), em::to_string(ps.a[r]));
  if (cfg.format == Format::Json) {
    json j = header("em", cfg);
    for (const auto& [k, v] : rows) j[k] = v;
    emit(cfg, dump(j));
  } else {
    std::ostringstream os;
    os << "component,polynomial\n";
    for (const auto& [k, v] : rows) os << k << ',' << csv_field(v) << '\n';
    emit(cfg, os.str());
  }
  return kPass;
}

struct DynArgs {
  std::size_t n = 4;
  std::size_t split = 1;
  double t_max = 10.0;
  std::size_t steps = 100;
};

int cmd_dynamics(const DynArgs& a, const RunConfig& cfg) {
  Rng rng(check_seed(cfg.seed, "dynamics.trajectory"));
  const auto gen = random_skew_adjoint(rng, a.n);
  dynamics::StateVector psi;
  for (std::size_t i = 0; i < a.n; ++i) psi.components.push_back(random_quaternion(rng));
  const double norm = std::sqrt(psi.norm_sq());
  for (auto& q : psi.components) q = q / norm;
  psi.split = a.split;
  const auto rows = dynamics::trajectory(gen, psi, a.t_max, a.steps);
  if (cfg.format == Format::Json) {
    json j = header("dynamics", cfg);
    j["n"] = a.n;
    j["split"] = a.split;
    auto arr = json::array();
    for (const auto& r : rows)
      arr.push_back({{"t", r.t},
                     {"norm_sq", r.norm_sq},
                     {"system_norm_sq", r.system_norm_sq},
                     {"surroundings_norm_sq", r.surroundings_norm_sq},
                     {"exchange_in", r.exchange_in},
                     {"exchange_out", r.exchange_out}});
    j["trajectory"] = std::move(arr);
    emit(cfg, dump(j));
  } else {
    std::ostringstream os;
    os << "t,norm_sq,system_norm_sq,surroundings_norm_sq,exchange_in,exchange_out\n";
    for (const auto& r : rows)
      os << format_double(r.t) << ',' << format_double(r.norm_sq) << ','
         << format_double(r.system_norm_sq) << ',' << format_double(r.surroundings_norm_sq) << ','
         << format_double(r.exchange_in) << ',' << format_double(r.exchange_out) << '\n';
    emit(cfg, os.str());
  }
  return kPass;
}

bool is_usage_error(ErrorKind k) { return k == ErrorKind::UnknownSuite || k == ErrorKind::ParseError; }

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"Symplectic flag manifold toolkit: invariant checks and plot data"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::vector<std::string> tol_specs;
  std::string format = "json";
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "Base random seed");
    sub->add_option("--trials", cfg.trials, "Random draws per check (scaled per check)");
    sub->add_option("--tol", tol_specs, "Tolerance override KEY=VAL, e.g. coset.lft_forms_agree=1e-8");
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", cfg.out, "Output path (default stdout)");
  };

  std::string suite;
  auto* verify = app.add_subcommand("verify", "Run an invariant suite");
  verify->add_option("suite", suite, "all, quaternion, quatmat, coset, forms, liealg, s4, em, dynamics, roots")
      ->required();
  add_common(verify);

  LbArgs lb;
  auto* lbc = app.add_subcommand("lb", "Radial Laplace-Beltrami solution table on S^4");
  lbc->add_option("--ell", lb.ell, "Half-integer l (0 gives f0)")->required();
  lbc->add_option("--N", lb.N, "Polynomial degree N");
  lbc->add_option("--samples", lb.samples, "Grid points on (0.05, pi - 0.05)");
  lbc->add_option("--meta", lb.meta, "Metadata JSON path for CSV output");
  add_common(lbc);

  int rank = 0;
  std::string projection = "none";
  auto* rc = app.add_subcommand("roots", "Root system of sp(n)");
  rc->add_option("--n", rank, "Rank")->required();
  rc->add_option("--projection", projection, "Projection columns")
      ->check(CLI::IsMember({"none", "2d", "3d"}));
  add_common(rc);

  std::string field;
  auto* ec = app.add_subcommand("em", "Decompose p* psi for a polynomial potential");
  ec->add_option("--field", field, "Components, e.g. \"A1=-x2; A2=x1\"")->required();
  add_common(ec);

  DynArgs dyn;
  auto* dc = app.add_subcommand("dynamics", "Trajectory of a random skew-adjoint generator");
  dc->add_option("--n", dyn.n, "Matrix size");
  dc->add_option("--split", dyn.split, "System block size");
  dc->add_option("--t-max", dyn.t_max, "Final time");
  dc->add_option("--steps", dyn.steps, "Number of steps");
  add_common(dc);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    for (const auto& t : tol_specs) add_tolerance_override(cfg.tol, t);
    cfg.format = format == "csv" ? Format::Csv : Format::Json;
    if (verify->parsed()) return cmd_verify(suite, cfg);
    if (lbc->parsed()) return cmd_lb(lb, cfg);
    if (rc->parsed()) return cmd_roots(rank, projection, cfg);
    if (ec->parsed()) return cmd_em(field, cfg);
    if (dc->parsed()) return cmd_dynamics(dyn, cfg);
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.kind()) << "]: " << e.what() << "\n";
    return is_usage_error(e.kind()) ? kUsage : kDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  }
  return kUsage;
}

}  // namespace sympflag::cli
