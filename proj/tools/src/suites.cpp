#include "sympflag/cli/suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>

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

namespace sympflag::cli {
namespace {

using std::numbers::pi;

class SuiteRun {
 public:
  SuiteRun(std::string suite, const RunConfig& cfg) : suite_(std::move(suite)), cfg_(cfg) {}

  std::size_t trials() const { return std::max<std::size_t>(cfg_.trials, 1); }

  /// Generator dedicated to one check.
  Rng rng(const std::string& name) {
    const auto s = check_seed(cfg_.seed, suite_ + "." + name);
    seeds_[name] = s;
    return Rng(s);
  }

  void numeric(const std::string& name, double residual, double default_tol,
               std::string detail = {}) {
    CheckResult r = base(name, std::move(detail));
    r.residual = residual;
    r.tolerance = cfg_.tol.get(suite_ + "." + name, default_tol);
    r.passed = std::isfinite(residual) && residual < r.tolerance;
    results_.push_back(std::move(r));
  }

  void exact(const std::string& name, std::size_t failures, std::string detail = {}) {
    CheckResult r = base(name, std::move(detail));
    r.residual = static_cast<double>(failures);
    r.exact = true;
    r.passed = failures == 0;
    results_.push_back(std::move(r));
  }

  /// Runs `body`; a library error inside it becomes a failed check.
  void guard(const std::string& name, const std::function<void()>& body) {
    try {
      body();
    } catch (const Error& e) {
      CheckResult r = base(name, std::string(to_string(e.kind())) + ": " + e.what());
      r.residual = std::nan("");
      results_.push_back(std::move(r));
    }
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  CheckResult base(const std::string& name, std::string detail) const {
    CheckResult r;
    r.suite = suite_;
    r.name = name;
    r.detail = std::move(detail);
    if (auto it = seeds_.find(name); it != seeds_.end()) r.seed = it->second;
    return r;
  }

  std::string suite_;
  const RunConfig& cfg_;
  std::map<std::string, std::uint64_t> seeds_;
  std::vector<CheckResult> results_;
};

double max_diff(const M2C& a, const M2C& b) { return max_abs_diff(a, b); }

void quaternion_suite(SuiteRun& s) {
  s.guard("m2c_homomorphism", [&] {
    auto rng = s.rng("m2c_homomorphism");
    double worst = 0;
    for (std::size_t t = 0; t < 100 * s.trials(); ++t) {
      auto a = random_quaternion(rng), b = random_quaternion(rng);
      worst = std::max(worst, max_diff(to_m2c(a * b), to_m2c(a) * to_m2c(b)));
    }
    s.numeric("m2c_homomorphism", worst, 1e-12);
  });
  s.guard("scalar_vector_product", [&] {
    auto rng = s.rng("scalar_vector_product");
    double worst = 0;
    for (std::size_t t = 0; t < 10 * s.trials(); ++t)
      worst = std::max(worst, em::quaternion_product_identity(random_quaternion(rng),
                                                              random_quaternion(rng)));
    s.numeric("scalar_vector_product", worst, 1e-13);
  });
  s.guard("conjugate_reverses_products", [&] {
    auto rng = s.rng("conjugate_reverses_products");
    double worst = 0;
    for (std::size_t t = 0; t < 10 * s.trials(); ++t) {
      auto a = random_quaternion(rng), b = random_quaternion(rng);
      worst = std::max(worst, max_abs_diff(conj(a * b), conj(b) * conj(a)));
    }
    s.numeric("conjugate_reverses_products", worst, 1e-14);
  });
  s.guard("basis_table", [&] {
    const auto i = Quaternion::i(), j = Quaternion::j(), k = Quaternion::k();
    std::size_t bad = 0;
    bad += !(i * j == k) + !(j * k == i) + !(k * i == j);
    bad += !(i * i == Quaternion(-1.0)) + !(j * i == -k);
    s.exact("basis_table", bad, "ij=k, jk=i, ki=j, i^2=-1, ji=-k");
  });
}

void quatmat_suite(SuiteRun& s) {
  s.guard("embedding_homomorphism", [&] {
    auto rng = s.rng("embedding_homomorphism");
    double worst = 0;
    for (std::size_t t = 0; t < s.trials(); ++t) {
      auto a = random_matrix(rng, 3, 2), b = random_matrix(rng, 2, 3);
      worst = std::max(worst, (embed(a * b) - embed(a) * embed(b)).cwiseAbs().maxCoeff());
    }
    s.numeric("embedding_homomorphism", worst, 1e-12);
  });
  s.guard("exp_in_group", [&] {
    auto rng = s.rng("exp_in_group");
    double worst = 0;
    for (std::size_t t = 0; t < s.trials(); ++t)
      worst = std::max(worst, unitarity_residual(exp(random_skew_adjoint(rng, 4, 2.0))));
    s.numeric("exp_in_group", worst, 1e-12);
  });
  s.guard("exp_rotation_block", [&] {
    double worst = 0;
    for (double t : {0.25, 1.0, 2.0, 5.0}) {
      QuatMatrix m{{Quaternion{}, Quaternion(t)}, {Quaternion(-t), Quaternion{}}};
      QuatMatrix want{{Quaternion(std::cos(t)), Quaternion(std::sin(t))},
                      {Quaternion(-std::sin(t)), Quaternion(std::cos(t))}};
      worst = std::max(worst, max_abs_diff(exp(m), want));
    }
    s.numeric("exp_rotation_block", worst, 1e-13);
  });
  s.guard("inverse", [&] {
    auto rng = s.rng("inverse");
    double worst = 0;
    for (std::size_t t = 0; t < s.trials(); ++t) {
      auto m = random_matrix(rng, 3, 3);
      worst = std::max(worst, max_abs_diff(m * inverse(m), QuatMatrix::identity(3)));
    }
    s.numeric("inverse", worst, 1e-9);
  });
  s.guard("hyperhermitian_trace", [&] {
    auto rng = s.rng("hyperhermitian_trace");
    double worst = 0;
    for (std::size_t t = 0; t < s.trials(); ++t) {
      auto p = random_hermitian(rng, 4);
      auto ev = eigvals_hyperhermitian(p);
      double sum = 0;
      for (double v : ev) sum += v;
      worst = std::max(worst, std::abs(sum - trace(p).w));
    }
    s.numeric("hyperhermitian_trace", worst, 1e-10);
  });
  s.guard("sp2n_complex", [&] {
    auto rng = s.rng("sp2n_complex");
    double worst = 0;
    for (std::size_t t = 0; t < s.trials(); ++t) {
      auto g = random_group_element(rng, 3);
      auto G = to_sp2nc(g);
      auto J = symplectic_form(3);
      worst = std::max(worst, (G.transpose() * J * G - J).cwiseAbs().maxCoeff());
      worst = std::max(worst, (G.adjoint() * G - Eigen::MatrixXcd::Identity(6, 6)).cwiseAbs().maxCoeff());
    }
    s.numeric("sp2n_complex", worst, 1e-12);
  });
}

void coset_suite(SuiteRun& s) {
  using namespace coset;
  const std::size_t draws = 5 * s.trials();
  s.guard("coset_element_exp", [&] {
    auto rng = s.rng("coset_element_exp");
    double worst = 0;
    for (std::size_t t = 0; t < s.trials(); ++t) {
      auto xi = random_matrix(rng, 2, 2, 0.7);
      worst = std::max(worst, max_abs_diff(coset_element(xi).matrix(), exp(skew_embedding(xi))));
    }
    s.numeric("coset_element_exp", worst, 1e-9);
  });
  s.guard("lft_forms_agree", [&] {
    auto rng = s.rng("lft_forms_agree");
    double worst = 0;
    for (std::size_t t = 0; t < draws; ++t) {
      auto g = random_group_element(rng, 4, 0.5);
      GrassmannPoint x{random_matrix(rng, 2, 2, 0.5)};
      worst = std::max(worst, max_abs_diff(lft_apply(g, x).x, lft_apply_adjoint_form(g, x).x));
    }
    s.numeric("lft_forms_agree", worst, 1e-9, "Sp(4), j = k = 2");
  });
  s.guard("lft_group_law", [&] {
    auto rng = s.rng("lft_group_law");
    double worst = 0;
    for (std::size_t t = 0; t < draws; ++t) {
      auto g1 = random_group_element(rng, 4, 0.5), g2 = random_group_element(rng, 4, 0.5);
      GrassmannPoint x{random_matrix(rng, 2, 2, 0.5)};
      worst = std::max(worst, max_abs_diff(lft_apply(g2, lft_apply(g1, x)).x,
                                           lft_apply(g2 * g1, x).x));
    }
    s.numeric("lft_group_law", worst, 1e-8);
  });
  s.guard("transport_identities", [&] {
    auto rng = s.rng("transport_identities");
    double worst = 0;
    for (std::size_t t = 0; t < draws; ++t) {
      auto g = random_group_element(rng, 4, 0.5);
      GrassmannPoint a{random_matrix(rng, 2, 2, 0.5)}, b{random_matrix(rng, 2, 2, 0.5)};
      worst = std::max(worst, transport_identities(g, a, b).max());
    }
    s.numeric("transport_identities", worst, 1e-9);
  });
  s.guard("cross_ratio_invariance", [&] {
    auto rng = s.rng("cross_ratio_invariance");
    double worst = 0;
    for (std::size_t t = 0; t < draws; ++t) {
      GrassmannPoint p[4];
      for (auto& q : p) q = GrassmannPoint{random_matrix(rng, 2, 2, 0.7)};
      auto g = random_group_element(rng, 4, 0.5);
      const double v = cross_ratio(p[0], p[1], p[2], p[3]);
      const double w = cross_ratio(lft_apply(g, p[0]), lft_apply(g, p[1]), lft_apply(g, p[2]),
                                   lft_apply(g, p[3]));
      worst = std::max(worst, std::abs(w - v) / std::max(1.0, std::abs(v)));
    }
    s.numeric("cross_ratio_invariance", worst, 1e-8, "relative drift");
  });
  s.guard("metric_forms_agree", [&] {
    auto rng = s.rng("metric_forms_agree");
    double worst = 0;
    for (std::size_t t = 0; t < draws; ++t) {
      GrassmannPoint x{random_matrix(rng, 2, 2, 0.7)};
      auto dx = random_matrix(rng, 2, 2);
      const double m = metric_form(x, dx);
      worst = std::max(worst, std::abs(m - metric_form_expanded(x, dx)));
      worst = std::max(worst, std::abs(m - metric_form_connection(x, dx)));
    }
    s.numeric("metric_forms_agree", worst, 1e-10);
  });
  s.guard("metric_invariance", [&] {
    auto rng = s.rng("metric_invariance");
    double worst = 0;
    for (std::size_t t = 0; t < draws; ++t) {
      auto g = random_group_element(rng, 4, 0.5);
      GrassmannPoint x{random_matrix(rng, 2, 2, 0.5)};
      worst = std::max(worst, metric_invariance_check(g, x, random_matrix(rng, 2, 2)));
    }
    s.numeric("metric_invariance", worst, 1e-5, "central-difference pushforward, step 1e-6");
  });
  s.guard("inversion_invariance", [&] {
    auto rng = s.rng("inversion_invariance");
    double worst = 0;
    for (std::size_t t = 0; t < draws; ++t)
      worst = std::max(worst, inversion_invariance_check(random_quaternion(rng), random_quaternion(rng)));
    s.numeric("inversion_invariance", worst, 1e-6, "Sp(2)/Sp(1)^2, X -> X^-1");
  });
  for (auto [n, k] : {std::pair<std::size_t, std::size_t>{3, 1}, {5, 2}, {6, 3}}) {
    const std::string name = "curvature_trace_n" + std::to_string(n) + "_k" + std::to_string(k);
    s.guard(name, [&] {
      auto rng = s.rng(name);
      double worst = 0;
      for (std::size_t t = 0; t < s.trials(); ++t) {
        auto tp = curvature_trace(random_matrix(rng, k, n), n, k);
        worst = std::max(worst, std::abs(tp.lhs - tp.rhs));
      }
      s.numeric(name, worst, 1e-9);
    });
  }
  s.guard("curvature_det", [&] {
    auto rng = s.rng("curvature_det");
    double worst = 0;
    for (std::size_t t = 0; t < s.trials(); ++t) {
      auto cd = curvature_det(random_matrix(rng, 2, 4, 0.5), 4, 2);
      worst = std::max(worst, std::abs(cd.value - cd.embedding_value) / std::abs(cd.value));
    }
    s.numeric("curvature_det", worst, 1e-8, "relative");
  });
  s.guard("haar_equivariance", [&] {
    auto rng = s.rng("haar_equivariance");
    auto x = random_group_element(rng, 2);
    std::vector<Quaternion> units{random_unit_quaternion(rng), random_unit_quaternion(rng)};
    Alpha row = [](const GroupElement& g) {
      return std::vector<Quaternion>{g.matrix()(0, 0), g.matrix()(0, 1)};
    };
    const std::size_t samples = 40 * s.trials();
    const std::uint64_t base_seed = rng();
    auto f1 = haar_average(row, Sigma::Fundamental, x * fiber_element(units), samples, base_seed);
    auto f0 = haar_average(row, Sigma::Fundamental, x, samples, base_seed + 1);
    auto rhs = apply_sigma(Sigma::Fundamental, {conj(units[0]), conj(units[1])}, f0.mean);
    const double se = std::hypot(f1.std_error, f0.std_error);
    double worst = 0;
    for (std::size_t i = 0; i < 2; ++i) worst = std::max(worst, max_abs_diff(f1.mean[i], rhs[i]));
    s.numeric("haar_equivariance", worst / se, 5.0, "in units of the combined standard error");
  });
}

void forms_suite(SuiteRun& s) {
  using namespace forms;
  s.guard("self_dual_pattern", [&] {
    auto [sd, asd] = dy_wedge();
    // e_r: (0, r) with coefficient -2 / +2 and the cyclic pair (a, b) with -2 / -2.
    const int cyc[3][2] = {{2, 3}, {3, 1}, {1, 2}};
    auto coeff = [](const RealTwoForm& f, int a, int b) {
      for (std::size_t t = 0; t < 6; ++t) {
        if (kTwoFormBasis[t] == std::pair{a, b}) return f[t];
        if (kTwoFormBasis[t] == std::pair{b, a}) return -f[t];
      }
      return 0.0;
    };
    std::size_t bad = 0;
    for (int r = 1; r <= 3; ++r) {
      auto fs = component(sd, r), fa = component(asd, r);
      const auto [a, b] = cyc[r - 1];
      bad += coeff(fs, 0, r) != -2.0;
      bad += coeff(fs, a, b) != -2.0;
      bad += coeff(fa, 0, r) != 2.0;
      bad += coeff(fa, a, b) != -2.0;
      double others = 0;
      for (std::size_t t = 0; t < 6; ++t) others += std::abs(fs[t]) + std::abs(fa[t]);
      bad += others != 8.0;
    }
    for (double v : component(sd, 0)) bad += v != 0.0;
    for (double v : component(asd, 0)) bad += v != 0.0;
    s.exact("self_dual_pattern", bad,
            "dY^dY* = -2(dy0^dy + dy^dy), dY*^dY = 2(dy0^dy - dy^dy)");
  });
  s.guard("hodge_eigenvalues", [&] {
    auto [sd, asd] = dy_wedge();
    std::size_t bad = 0;
    for (int r = 1; r <= 3; ++r) {
      auto fs = component(sd, r), fa = component(asd, r);
      auto hs = hodge_star(fs), ha = hodge_star(fa);
      for (std::size_t t = 0; t < 6; ++t) bad += (hs[t] != fs[t]) + (ha[t] != -fa[t]);
    }
    s.exact("hodge_eigenvalues", bad, "+1 on dY^dY*, -1 on dY*^dY");
  });
  s.guard("connection_skew", [&] {
    auto rng = s.rng("connection_skew");
    double worst = 0;
    for (std::size_t t = 0; t < std::min<std::size_t>(s.trials(), 50); ++t) {
      auto g0 = random_group_element(rng, 3);
      auto gen = random_skew_adjoint(rng, 3);
      auto c = connection_blocks([&](double u) { return GroupElement(g0.matrix() * exp(gen * u), 1e-9); },
                                 0.3, 1);
      worst = std::max(worst, max_abs_diff(c.w21, -adjoint(c.w12)));
    }
    s.numeric("connection_skew", worst, 1e-6);
  });
  s.guard("isotropy_connection", [&] {
    auto rng = s.rng("isotropy_connection");
    auto s1 = random_skew_adjoint(rng, 1), s2 = random_skew_adjoint(rng, 2);
    auto c = connection_blocks(
        [&](double u) {
          QuatMatrix m = QuatMatrix::zero(3, 3);
          m.set_block(0, 0, exp(s1 * u));
          m.set_block(1, 1, exp(s2 * u));
          return GroupElement(m, 1e-9);
        },
        0.5, 1);
    s.numeric("isotropy_connection", std::max(max_abs(c.w12), max_abs(c.w21)), 1e-7);
  });
  s.guard("maurer_cartan", [&] {
    auto rng = s.rng("maurer_cartan");
    double worst = 0;
    for (int t = 0; t < 10; ++t) {
      auto a = random_skew_adjoint(rng, 3), b = random_skew_adjoint(rng, 3);
      auto r = maurer_cartan_residual(
          [&](double u, double v) { return GroupElement(exp(a * u) * exp(b * v) * exp(a * (u * v)), 1e-9); },
          0.3, -0.2, 1);
      for (double x : r) worst = std::max(worst, x);
    }
    s.numeric("maurer_cartan", worst, 1e-4, "step 1e-4");
  });
  s.guard("curvature_pieces", [&] {
    auto rng = s.rng("curvature_pieces");
    double worst = 0;
    for (int t = 0; t < 10; ++t) {
      auto m = curvature_magnitudes(random_matrix(rng, 2, 2, 0.5));
      worst = std::max(worst, std::abs(m.omega11_sq - m.omega22_sq) / std::max(1.0, m.omega11_sq));
      worst = std::max({worst, m.r11_scalar, m.r22_scalar});
    }
    s.numeric("curvature_pieces", worst, 1e-10,
              "sum ||Omega11||^2 = sum ||Omega22||^2; Re R11 = Re R22 = 0");
  });
}

void liealg_suite(SuiteRun& s) {
  using namespace liealg;
  for (Dims d : {Dims{1, 2}, Dims{1, 3}}) {
    const std::string at = "_k" + std::to_string(d.k) + "_n" + std::to_string(d.n);
    s.guard("table" + at, [&] {
      auto rep = verify_commutation_table(d, 3);
      for (const auto& r : rep.relations) {
        std::ostringstream detail;
        detail << r.instances << " instances, degree <= 3, " << rep.monomials << " monomials";
        s.exact(r.name + at, r.symbolic_failures + r.applied_failures, detail.str());
      }
      std::string subs = rep.substitutions.empty() ? "none" : "";
      for (const auto& x : rep.substitutions) subs += (subs.empty() ? "" : "; ") + x;
      s.exact("substitutions" + at, 0, "J-convention substitutions: " + subs);
    });
    s.guard("ladder" + at, [&] {
      auto ms = monomials_up_to(d, 2);
      std::size_t fails = 0, checked = 0;
      for (int alpha = 0; alpha < d.rows(); ++alpha)
        for (int a = 0; a < d.cols(); ++a) {
          auto r = ladder_check(d, alpha, a, ms);
          fails += r.failures;
          checked += r.checked;
        }
      s.exact("ladder" + at, fails, std::to_string(checked) + " shifts, +1 under p and -1 under pbar");
    });
  }
}

void s4_suite(SuiteRun& s) {
  using namespace s4lb;
  s.guard("f0_residual", [&] {
    auto f0 = f0_solution();
    double worst = 0;
    for (double w : omega_grid(50)) worst = std::max(worst, lb_radial_residual(f0, w));
    s.numeric("f0_residual", worst, 1e-10, "50 interior points");
  });
  const std::pair<double, int> cases[] = {{1.0, 0}, {1.5, 0}, {2.0, 0}, {2.0, 1}};
  for (auto [l, N] : cases) {
    std::ostringstream nm;
    nm << "g_ell_residual_l" << l << "_N" << N;
    const std::string name = nm.str();
    s.guard(name, [&] {
      auto sol = g_ell_solution(HalfInteger::from_double(l), N);
      double worst = 0;
      for (double w : omega_grid()) worst = std::max(worst, lb_radial_residual(sol, w));
      s.numeric(name, worst, 1e-8);
    });
  }
  s.guard("theta", [&] {
    std::size_t bad = 0;
    for (auto [l, N] : cases) {
      auto sol = g_ell_solution(HalfInteger::from_double(l), N);
      bad += sol.theta_sq != (l + 1 - N) * (l - 0.5 - N);
      bad += sol.theta() != std::sqrt((l + 1 - N) * (l - 0.5 - N));
    }
    s.exact("theta", bad, "theta^2 = (l+1-N)(l-1/2-N)");
  });
  s.guard("integrability", [&] {
    std::size_t bad = integrability(f0_solution()).integrable ? 0 : 1;
    for (auto [l, N] : cases) {
      auto r = integrability(g_ell_solution(HalfInteger::from_double(l), N));
      bad += r.integrable == (l > 0.5);
      bad += r.numeric_divergent != (l > 0.5);
    }
    s.exact("integrability", bad, "non-integrable exactly for l > 1/2");
  });
  s.guard("einstein", [&] {
    auto rng = s.rng("einstein");
    std::normal_distribution<double> g(0.0, 0.6);
    std::vector<Point4> pts(20);
    for (auto& p : pts) p = Point4(g(rng), g(rng), g(rng), g(rng));
    auto r = einstein_check(pts);
    std::ostringstream d;
    d << "lambda = " << format_double(r.lambda) << ", 20 points";
    s.numeric("einstein", r.spread, 1e-3, d.str());
    s.numeric("einstein_offdiagonal", r.max_offdiag, 1e-5);
  });
  s.guard("einstein_angular", [&] {
    auto rng = s.rng("einstein_angular");
    std::uniform_real_distribution<double> u(0.3, pi - 0.3);
    std::vector<Point4> pts(10);
    for (auto& p : pts) p = Point4(u(rng), u(rng), u(rng), u(rng));
    auto r = einstein_check(pts, Chart::Angular);
    std::ostringstream d;
    d << "lambda = " << format_double(r.lambda) << " (radius-2 chart, 4 lambda = 3)";
    s.numeric("einstein_angular", std::max(r.spread, std::abs(4 * r.lambda - 3.0) / 3.0), 1e-3,
              d.str());
  });
}

void em_suite(SuiteRun& s) {
  using namespace em;
  s.guard("decomposition", [&] {
    auto rng = s.rng("decomposition");
    std::size_t bad = 0;
    for (std::size_t t = 0; t < s.trials(); ++t) {
      auto f = random_field(rng, 3);
      try {
        auto d = decompose(f);
        auto ps = apply_pstar(f);
        bad += !(ps.a[0] == d.scalar);
        for (std::size_t i = 0; i < 3; ++i) bad += !(ps.a[i + 1] == d.b[i] - d.e[i]);
      } catch (const std::logic_error&) {
        ++bad;
      }
    }
    s.exact("decomposition", bad, "scalar = A0,0 - div A, vector = -E + B, degree <= 3");
  });
  s.guard("uniform_b", [&] {
    auto d = decompose(parse_field("A1=-x2; A2=x1"));
    std::size_t bad = !d.b[0].is_zero() + !d.b[1].is_zero() + !(d.b[2] == RealPoly(Rational(2)));
    for (const auto& e : d.e) bad += !e.is_zero();
    s.exact("uniform_b", bad, "A = (-x2, x1, 0) -> B = (0, 0, 2), E = 0");
  });
  s.guard("static_potential", [&] {
    auto d = decompose(parse_field("A0=x0*x3"));
    std::size_t bad = !d.e[0].is_zero() + !d.e[1].is_zero() +
                      !(d.e[2] == -RealPoly::variable(0)) + !(d.scalar == RealPoly::variable(3));
    s.exact("static_potential", bad, "A0 = x0 x3 -> E = (0, 0, -x0), scalar = x3");
  });
}

void dynamics_suite(SuiteRun& s) {
  using namespace dynamics;
  s.guard("norm_conservation", [&] {
    auto rng = s.rng("norm_conservation");
    double worst = 0;
    for (int t = 0; t < 10; ++t) {
      auto gen = random_skew_adjoint(rng, 4);
      StateVector psi;
      for (int i = 0; i < 4; ++i) psi.components.push_back(random_quaternion(rng));
      psi.split = 2;
      for (const auto& row : trajectory(gen, psi, 10.0, 100))
        worst = std::max(worst, std::abs(row.norm_sq - psi.norm_sq()));
    }
    s.numeric("norm_conservation", worst, 1e-9, "t in [0, 10]");
  });
  s.guard("cocycle", [&] {
    auto rng = s.rng("cocycle");
    double worst = 0;
    for (int t = 0; t < 10; ++t) worst = std::max(worst, cocycle_check(random_skew_adjoint(rng, 4), 2.7, 1.3));
    s.numeric("cocycle", worst, 1e-9);
  });
  s.guard("time_reversal", [&] {
    auto rng = s.rng("time_reversal");
    double worst = 0;
    for (int t = 0; t < 10; ++t) worst = std::max(worst, time_reversal_check(random_skew_adjoint(rng, 4), 3.3));
    s.numeric("time_reversal", worst, 1e-11);
  });
  s.guard("geodesic_block", [&] {
    auto rng = s.rng("geodesic_block");
    double worst = 0;
    for (int t = 0; t < 10; ++t) {
      auto u = random_unit_quaternion(rng);
      QuatMatrix gen{{Quaternion{}, u}, {-conj(u), Quaternion{}}};
      worst = std::max(worst, max_abs_diff(geodesic_block(u, 1.3, 2.1).matrix(), exp(gen * (1.3 * 2.1))));
    }
    s.numeric("geodesic_block", worst, 1e-10);
  });
  s.guard("transition_split", [&] {
    auto rng = s.rng("transition_split");
    auto gen = random_skew_adjoint(rng, 4);
    StateVector psi;
    for (int i = 0; i < 4; ++i) psi.components.push_back(random_quaternion(rng));
    psi.split = 1;
    auto sp = transition_split(gen, psi);
    auto full = gen * as_column(psi);
    double worst = 0;
    for (std::size_t i = 0; i < 4; ++i)
      worst = std::max(worst, max_abs_diff(sp.system_rotation[i] + sp.surroundings_rotation[i] +
                                               sp.exchange_in[i] + sp.exchange_out[i],
                                           full(i, 0)));
    s.numeric("transition_split", worst, 1e-12);
  });
}

void roots_suite(SuiteRun& s) {
  using namespace roots;
  s.guard("root_counts", [&] {
    std::size_t bad = 0;
    for (int n = 1; n <= 6; ++n) bad += generate(n).roots.size() != static_cast<std::size_t>(2 * n * n);
    s.exact("root_counts", bad, "2n^2 for n = 1..6");
  });
  s.guard("embeddings", [&] {
    std::size_t bad = 0;
    for (int n = 2; n <= 6; ++n)
      for (int m = 1; m < n; ++m) bad += !embed_check(m, n);
    s.exact("embeddings", bad, "sp(m) in sp(n), m < n <= 6");
  });
  s.guard("labels", [&] {
    std::size_t bad = 0;
    auto lepton = particle_label({{{2, 0, 0}, Tag::None}});
    bad += lepton.cls != ParticleClass::Lepton;
    auto meson = particle_label({{{1, 1, 0}, Tag::None}});
    bad += meson.flavors != "ud" || meson.cls != ParticleClass::Meson;
    auto anti = particle_label({{{-1, 1, 0}, Tag::None}});
    bad += anti.flavors != "u\xCC\x84" "d";
    auto proton = particle_label({{{1, 0, 0}, Tag::I}, {{1, 0, 0}, Tag::J}, {{0, 1, 0}, Tag::K}});
    bad += proton.flavors != "uud" || proton.cls != ParticleClass::Baryon;
    bad += proton.colored != "u(i)u(j)d(k)";
    s.exact("labels", bad, "ud, anti-u d, lepton 2L1, uud with colors");
  });
  s.guard("euler_characteristic", [&] {
    std::size_t bad = 0;
    for (int d : {2, 4, 8, 12}) bad += euler_characteristic(d) != 2;
    s.exact("euler_characteristic", bad);
  });
}

using SuiteFn = void (*)(SuiteRun&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"quaternion", quaternion_suite}, {"quatmat", quatmat_suite},
      {"coset", coset_suite},           {"forms", forms_suite},
      {"liealg", liealg_suite},         {"s4", s4_suite},
      {"em", em_suite},                 {"dynamics", dynamics_suite},
      {"roots", roots_suite},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : registry()) v.push_back(name);
    return v;
  }();
  return names;
}

std::vector<CheckResult> run_suite(std::string_view suite, const RunConfig& cfg) {
  std::vector<CheckResult> out;
  bool found = false;
  for (const auto& [name, fn] : registry()) {
    if (suite != "all" && suite != name) continue;
    found = true;
    SuiteRun run(name, cfg);
    fn(run);
    auto part = run.take();
    out.insert(out.end(), part.begin(), part.end());
  }
  if (!found) throw Error(ErrorKind::UnknownSuite, "unknown suite '" + std::string(suite) + "'");
  return out;
}

}  // namespace sympflag::cli
