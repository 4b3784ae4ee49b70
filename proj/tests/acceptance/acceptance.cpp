// One line per acceptance criterion; exits nonzero if any fails.
// Tolerances are fixed here and are not configurable.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "sympflag/coset.hpp"
#include "sympflag/dynamics.hpp"
#include "sympflag/emfield.hpp"
#include "sympflag/errors.hpp"
#include "sympflag/forms.hpp"
#include "sympflag/liealg.hpp"
#include "sympflag/quatmat.hpp"
#include "sympflag/random.hpp"
#include "sympflag/roots.hpp"
#include "sympflag/s4lb.hpp"

using namespace sympflag;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& title, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!o.pass) ++failures;
  std::printf("[%s] %2d %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", id, title.c_str(),
              o.detail.c_str(), secs);
  std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

// (AX + B)(CX + D)^-1 on the complex embedding.
Eigen::MatrixXcd lft_oracle(const GroupElement& g, const QuatMatrix& x) {
  const auto j = static_cast<Eigen::Index>(2 * x.rows());
  const auto k = static_cast<Eigen::Index>(2 * x.cols());
  Eigen::MatrixXcd G = oracle::embed(g.matrix());
  Eigen::MatrixXcd X = oracle::embed(x);
  return (G.block(0, 0, j, j) * X + G.block(0, j, j, k)) *
         (G.block(j, 0, k, j) * X + G.block(j, j, k, k)).inverse();
}

constexpr int kDraws = 500;

Outcome c1_homomorphism() {
  Rng rng(1001);
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0;
  for (int t = 0; t < 10000; ++t) {
    auto a = random_quaternion(rng), b = random_quaternion(rng);
    const M2C m = to_m2c(a * b);
    const Eigen::Matrix2cd o = oracle::pauli_image(a) * oracle::pauli_image(b);
    worst = std::max({worst, std::abs(m.r11 - o(0, 0)), std::abs(m.r12 - o(0, 1)),
                      std::abs(m.r21 - o(1, 0)), std::abs(m.r22 - o(1, 1))});
    worst = std::max(worst, max_abs_diff(m, to_m2c(a) * to_m2c(b)));
  }
  const double secs = seconds_since(t0);
  return {worst < 1e-12 && secs < 1.0,
          "10^4 pairs, max err " + sci(worst) + " < 1e-12, runtime " + sci(secs) + " s < 1 s"};
}

Outcome c2_lft() {
  Rng rng(1002);
  const auto t0 = std::chrono::steady_clock::now();
  double forms = 0, law = 0, ref = 0;
  for (int t = 0; t < kDraws; ++t) {
    auto g1 = random_group_element(rng, 4, 0.5), g2 = random_group_element(rng, 4, 0.5);
    coset::GrassmannPoint x{random_matrix(rng, 2, 2, 0.5)};
    auto y = coset::lft_apply(g1, x);
    forms = std::max(forms, max_abs_diff(y.x, coset::lft_apply_adjoint_form(g1, x).x));
    ref = std::max(ref, oracle::max_abs(oracle::embed(y.x) - lft_oracle(g1, x.x)));
    law = std::max(law, max_abs_diff(coset::lft_apply(g2, y).x, coset::lft_apply(g2 * g1, x).x));
  }
  const double secs = seconds_since(t0);
  return {forms < 1e-9 && ref < 1e-9 && law < 1e-8 && secs < 10.0,
          "500 draws in Sp(4): forms " + sci(forms) + " < 1e-9, embedded reference " + sci(ref) +
              " < 1e-9, group law " + sci(law) + " < 1e-8, runtime " + sci(secs) + " s < 10 s"};
}

Outcome c3_transport() {
  Rng rng(1003);
  double worst = 0;
  for (int t = 0; t < kDraws; ++t) {
    auto g = random_group_element(rng, 4, 0.5);
    coset::GrassmannPoint a{random_matrix(rng, 2, 2, 0.5)}, b{random_matrix(rng, 2, 2, 0.5)};
    worst = std::max(worst, coset::transport_identities(g, a, b).max());
  }
  return {worst < 1e-9, "four identities, 500 draws, max residual " + sci(worst) + " < 1e-9"};
}

Outcome c4_cross_ratio() {
  Rng rng(1004);
  double worst = 0;
  for (int t = 0; t < kDraws; ++t) {
    coset::GrassmannPoint p[4];
    for (auto& q : p) q = coset::GrassmannPoint{random_matrix(rng, 2, 2, 0.7)};
    auto g = random_group_element(rng, 4, 0.5);
    const double v = coset::cross_ratio(p[0], p[1], p[2], p[3]);
    const double w = coset::cross_ratio(coset::lft_apply(g, p[0]), coset::lft_apply(g, p[1]),
                                        coset::lft_apply(g, p[2]), coset::lft_apply(g, p[3]));
    worst = std::max(worst, std::abs(w - v) / std::max(1.0, std::abs(v)));
  }
  return {worst < 1e-8, "500 draws, relative drift " + sci(worst) + " < 1e-8"};
}

Outcome c5_metric() {
  Rng rng(1005);
  double ab = 0, inv = 0, inv1 = 0;
  for (int t = 0; t < kDraws; ++t) {
    coset::GrassmannPoint x{random_matrix(rng, 2, 2, 0.5)};
    auto dx = random_matrix(rng, 2, 2);
    ab = std::max(ab, std::abs(coset::metric_form(x, dx) - coset::metric_form_expanded(x, dx)));
    auto g = random_group_element(rng, 4, 0.5);
    inv = std::max(inv, coset::metric_invariance_check(g, x, dx));
    inv1 = std::max(inv1, coset::inversion_invariance_check(random_quaternion(rng),
                                                            random_quaternion(rng)));
  }
  return {ab < 1e-10 && inv < 1e-5 && inv1 < 1e-6,
          "500 draws: two forms " + sci(ab) + " < 1e-10, pushforward " + sci(inv) +
              " < 1e-5, X -> X^-1 " + sci(inv1) + " < 1e-6"};
}

Outcome c6_curvature_trace() {
  Rng rng(1006);
  double lib = 0, ora = 0;
  for (auto [n, k] : {std::pair<std::size_t, std::size_t>{3, 1}, {5, 2}, {6, 3}}) {
    for (int t = 0; t < 100; ++t) {
      auto q = random_matrix(rng, k, n);
      auto tp = coset::curvature_trace(q, n, k);
      lib = std::max(lib, std::abs(tp.lhs - tp.rhs));
      Eigen::MatrixXcd Q = oracle::embed(q);
      const auto r = Q.rows(), c = Q.cols();
      const double l = (Eigen::MatrixXcd::Identity(c, c) + Q.adjoint() * Q).inverse().trace().real();
      const double s = (Eigen::MatrixXcd::Identity(r, r) + Q * Q.adjoint()).inverse().trace().real();
      ora = std::max(ora, std::abs(l - s - 2.0 * static_cast<double>(n - k)));
    }
  }
  return {lib < 1e-9 && ora < 1e-9, "(3,1), (5,2), (6,3) x 100: library " + sci(lib) +
                                        ", embedded reference " + sci(ora) + " < 1e-9"};
}

Outcome c7_commutators() {
  const auto t0 = std::chrono::steady_clock::now();
  std::ostringstream d;
  bool ok = true;
  for (liealg::Dims dims : {liealg::Dims{1, 2}, liealg::Dims{1, 3}}) {
    auto rep = liealg::verify_commutation_table(dims, 3);
    std::size_t relations = 0, bad = 0;
    for (const auto& r : rep.relations)
      if (r.name.front() == '[') {
        ++relations;
        bad += !r.passed();
      }
    ok = ok && relations == 7 && bad == 0 && rep.all_passed();
    d << "(k=" << dims.k << ",n=" << dims.n << ") " << relations - bad << "/" << relations
      << " relations on " << rep.monomials << " monomials, substitutions: ";
    if (rep.substitutions.empty()) d << "none";
    for (const auto& s : rep.substitutions) d << s << "; ";
    d << "; ";
  }
  const double secs = seconds_since(t0);
  d << "runtime " << sci(secs) << " s < 60 s";
  return {ok && secs < 60.0, d.str()};
}

Outcome c8_ladder() {
  std::size_t checked = 0, fails = 0, vacuous = 0;
  for (liealg::Dims dims : {liealg::Dims{1, 2}, liealg::Dims{1, 3}}) {
    auto ms = liealg::monomials_up_to(dims, 3);
    for (int alpha = 0; alpha < dims.rows(); ++alpha)
      for (int a = 0; a < dims.cols(); ++a) {
        auto r = liealg::ladder_check(dims, alpha, a, ms);
        checked += r.checked;
        fails += r.failures;
        vacuous += r.vacuous;
      }
  }
  return {fails == 0 && checked > vacuous,
          std::to_string(checked - vacuous) + " nonzero shifts exact (+1 under p, -1 under pbar), " +
              std::to_string(fails) + " failures"};
}

Outcome c9_lb() {
  using namespace s4lb;
  double f0 = 0;
  for (double w : omega_grid(50)) f0 = std::max(f0, lb_radial_residual(f0_solution(), w));
  double gl = 0;
  std::size_t theta_bad = 0, flag_bad = integrability(f0_solution()).integrable ? 0 : 1;
  for (auto [l, N] : {std::pair{1.0, 0}, {1.5, 0}, {2.0, 0}, {2.0, 1}}) {
    auto sol = g_ell_solution(HalfInteger::from_double(l), N);
    for (double w : omega_grid()) gl = std::max(gl, lb_radial_residual(sol, w));
    theta_bad += sol.theta() != std::sqrt((l + 1 - N) * (l - 0.5 - N));
    auto ig = integrability(sol);
    flag_bad += ig.integrable == (l > 0.5);
  }
  return {f0 < 1e-10 && gl < 1e-8 && theta_bad == 0 && flag_bad == 0,
          "f0 " + sci(f0) + " < 1e-10, g_l " + sci(gl) + " < 1e-8, theta mismatches " +
              std::to_string(theta_bad) + ", integrability flag mismatches " + std::to_string(flag_bad)};
}

Outcome c10_einstein() {
  const auto t0 = std::chrono::steady_clock::now();
  Rng rng(1010);
  std::normal_distribution<double> g(0.0, 0.6);
  std::vector<s4lb::Point4> pts(20);
  for (auto& p : pts) p = s4lb::Point4(g(rng), g(rng), g(rng), g(rng));
  auto r = s4lb::einstein_check(pts);
  const double secs = seconds_since(t0);
  return {r.spread < 1e-3 && secs < 30.0, "20 points, lambda = " + sci(r.lambda) + ", spread " +
                                              sci(r.spread) + " < 1e-3, runtime " + sci(secs) +
                                              " s < 30 s"};
}

Outcome c11_maxwell() {
  using em::RealPoly;
  Rng rng(1011);
  std::size_t bad = 0;
  for (int t = 0; t < 100; ++t) {
    auto f = em::random_field(rng, 3);
    auto d = [&](int mu, int r) { return f.a[static_cast<std::size_t>(r)].derivative(mu); };
    // Scalar part and -E + B written out from the vector calculus formulas.
    RealPoly scalar = d(0, 0) - d(1, 1) - d(2, 2) - d(3, 3);
    std::array<RealPoly, 3> vec;
    for (int i = 1; i <= 3; ++i) {
      const int j = i % 3 + 1, k = (i + 1) % 3 + 1;
      vec[static_cast<std::size_t>(i - 1)] = d(0, i) + d(i, 0) + d(j, k) - d(k, j);
    }
    auto ps = em::apply_pstar(f);
    bad += !(ps.a[0] == scalar);
    for (std::size_t i = 0; i < 3; ++i) bad += !(ps.a[i + 1] == vec[i]);
    auto dec = em::decompose(f);
    bad += !(dec.scalar == scalar);
    for (std::size_t i = 0; i < 3; ++i) bad += !(dec.b[i] - dec.e[i] == vec[i]);
  }
  return {bad == 0, "100 random fields of degree <= 3, " + std::to_string(bad) + " mismatches"};
}

Outcome c12_self_dual() {
  auto [sd, asd] = forms::dy_wedge();
  const int cyc[3][2] = {{2, 3}, {3, 1}, {1, 2}};
  auto coeff = [](const forms::RealTwoForm& f, int a, int b) {
    for (std::size_t t = 0; t < 6; ++t) {
      if (forms::kTwoFormBasis[t] == std::pair{a, b}) return f[t];
      if (forms::kTwoFormBasis[t] == std::pair{b, a}) return -f[t];
    }
    return 0.0;
  };
  std::size_t bad = 0;
  for (int r = 1; r <= 3; ++r) {
    auto fs = forms::component(sd, r), fa = forms::component(asd, r);
    const auto [a, b] = cyc[r - 1];
    // dY^dY* = -2 (dx0^dxr + dxa^dxb) e_r, dY*^dY = 2 (dx0^dxr - dxa^dxb) e_r
    bad += coeff(fs, 0, r) != -2.0 || coeff(fs, a, b) != -2.0;
    bad += coeff(fa, 0, r) != 2.0 || coeff(fa, a, b) != -2.0;
    double total = 0;
    for (std::size_t t = 0; t < 6; ++t) total += std::abs(fs[t]) + std::abs(fa[t]);
    bad += total != 8.0;
    auto hs = forms::hodge_star(fs), ha = forms::hodge_star(fa);
    for (std::size_t t = 0; t < 6; ++t) bad += (hs[t] != fs[t]) + (ha[t] != -fa[t]);
  }
  for (double v : forms::component(sd, 0)) bad += v != 0.0;
  for (double v : forms::component(asd, 0)) bad += v != 0.0;
  return {bad == 0, "coefficient list and Hodge eigenvalues +1/-1, " + std::to_string(bad) +
                        " mismatches"};
}

Outcome c13_dynamics() {
  Rng rng(1013);
  double norm = 0, coc = 0, rev = 0, geo = 0;
  for (int t = 0; t < 20; ++t) {
    auto gen = random_skew_adjoint(rng, 4);
    dynamics::StateVector psi;
    for (int i = 0; i < 4; ++i) psi.components.push_back(random_quaternion(rng));
    psi.split = 2;
    for (const auto& row : dynamics::trajectory(gen, psi, 10.0, 200))
      norm = std::max(norm, std::abs(row.norm_sq - psi.norm_sq()));
    coc = std::max(coc, dynamics::cocycle_check(gen, 2.7, 1.3));
    rev = std::max(rev, dynamics::time_reversal_check(gen, 3.9));
    auto u = random_unit_quaternion(rng);
    const double wt = 0.8 * 2.3;
    QuatMatrix blk{{Quaternion{}, u * wt}, {-conj(u) * wt, Quaternion{}}};
    auto want = oracle::exp_reference(oracle::embed(blk));
    geo = std::max(geo, oracle::max_abs(oracle::embed(dynamics::geodesic_block(u, 0.8, 2.3).matrix()) - want));
  }
  return {norm < 1e-9 && coc < 1e-9 && rev < 1e-11 && geo < 1e-10,
          "norm " + sci(norm) + " < 1e-9, cocycle " + sci(coc) + " < 1e-9, time reversal " +
              sci(rev) + " < 1e-11, geodesic " + sci(geo) + " < 1e-10"};
}

Outcome c14_roots() {
  using namespace roots;
  std::size_t bad = 0;
  for (int n = 1; n <= 6; ++n) bad += generate(n).roots.size() != static_cast<std::size_t>(2 * n * n);
  for (int n = 2; n <= 6; ++n)
    for (int m = 1; m < n; ++m) bad += !embed_check(m, n);
  auto meson = particle_label({{{1, 1, 0}, Tag::None}});
  bad += meson.flavors != "ud" || meson.cls != ParticleClass::Meson;
  auto anti = particle_label({{{-1, 1, 0}, Tag::None}});
  bad += anti.flavors != "u\xCC\x84" "d";
  for (int sign : {1, -1})
    for (int i = 0; i < 3; ++i) {
      Root r(3, 0);
      r[static_cast<std::size_t>(i)] = 2 * sign;
      bad += particle_label({{r, Tag::None}}).cls != ParticleClass::Lepton;
    }
  auto proton = particle_label({{{1, 0, 0}, Tag::I}, {{1, 0, 0}, Tag::J}, {{0, 1, 0}, Tag::K}});
  bad += proton.flavors != "uud" || proton.cls != ParticleClass::Baryon;
  bad += proton.colored != "u(i)u(j)d(k)";
  return {bad == 0, "counts 2n^2 (n = 1..6), embeddings, labels ud / u\xCC\x84" "d / leptons / uud: " +
                        std::to_string(bad) + " mismatches"};
}

#ifdef SYMPFLAG_CLI_PATH
int run_cli(const std::string& args, const std::filesystem::path& out) {
  const std::string cmd = std::string("\"") + SYMPFLAG_CLI_PATH + "\" " + args + " > \"" +
                          out.string() + "\" 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

Outcome c15_cli() {
  const auto dir = std::filesystem::temp_directory_path() / "sympflag_acceptance";
  std::filesystem::create_directories(dir);
  const auto t0 = std::chrono::steady_clock::now();
  const int e1 = run_cli("verify all --seed 42", dir / "a.json");
  const double secs = seconds_since(t0);
  const int e2 = run_cli("verify all --seed 42", dir / "b.json");
  const int e3 = run_cli("lb --ell 2 --N 1 --format csv --seed 7", dir / "c.csv");
  const int e4 = run_cli("lb --ell 2 --N 1 --format csv --seed 7", dir / "d.csv");
  const auto a = slurp(dir / "a.json"), b = slurp(dir / "b.json");
  const bool same = !a.empty() && a == b && slurp(dir / "c.csv") == slurp(dir / "d.csv");
  std::filesystem::remove_all(dir);
  return {e1 == 0 && e2 == 0 && e3 == 0 && e4 == 0 && same && secs < 300.0,
          std::string("verify all --seed 42 exit ") + std::to_string(e1) + " in " + sci(secs) +
              " s < 300 s, reruns " + (same ? "byte-identical" : "DIFFER")};
}
#endif

}  // namespace

int main() {
  criterion(1, "quaternion / m(C^2) homomorphism", c1_homomorphism);
  criterion(2, "linear fractional action: two forms and group law", c2_lft);
  criterion(3, "projective transport identities", c3_transport);
  criterion(4, "cross-ratio invariance", c4_cross_ratio);
  criterion(5, "metric forms and invariance", c5_metric);
  criterion(6, "curvature trace identity", c6_curvature_trace);
  criterion(7, "seven commutation relations (exact)", c7_commutators);
  criterion(8, "ladder shifts (exact)", c8_ladder);
  criterion(9, "Laplace-Beltrami radial solutions", c9_lb);
  criterion(10, "Einstein condition on S^4", c10_einstein);
  criterion(11, "Maxwell decomposition (exact)", c11_maxwell);
  criterion(12, "self-dual / anti-self-dual wedge identities", c12_self_dual);
  criterion(13, "dynamics invariants", c13_dynamics);
  criterion(14, "roots and particle labels", c14_roots);
#ifdef SYMPFLAG_CLI_PATH
  criterion(15, "CLI determinism and verify all", c15_cli);
#else
  criterion(15, "CLI determinism and verify all",
            [] { return Outcome{false, "built without the CLI (SYMPFLAG_BUILD_TOOLS=OFF)"}; });
#endif
  std::printf("%d/15 criteria passed\n", 15 - failures);
  return failures == 0 ? 0 : 1;
}
