#include "sympflag/s4lb.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include <Eigen/LU>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "sympflag/errors.hpp"

namespace sympflag::s4lb {

using std::numbers::pi;

Metric4 fs_metric(const Point4& y) {
  const double r = 1.0 + y.squaredNorm();
  return (Metric4::Identity() - y * y.transpose() / r) / r;
}

Point4 inhomogeneous(const Eigen::Matrix<double, 5, 1>& x) {
  if (std::abs(x(0)) < 1e-12) throw Error(ErrorKind::ChartBoundary, "x0 = 0 is at infinity");
  return x.tail<4>() / x(0);
}

Metric4 angular_metric(double omega, double alpha) {
  if (!(omega > 0.0 && omega < pi) || !(alpha > 0.0 && alpha < pi)) {
    std::ostringstream msg;
    msg << "(w, a) = (" << omega << ", " << alpha << ") is outside (0, pi)^2";
    throw Error(ErrorKind::ChartBoundary, msg.str());
  }
  const double s2 = std::sin(omega) * std::sin(omega);
  Metric4 g = Metric4::Zero();
  g(0, 0) = 4.0;
  g(1, 1) = s2;
  g(2, 2) = s2;
  g(3, 3) = s2;
  g(2, 3) = g(3, 2) = s2 * std::cos(alpha);
  return g;
}

namespace {

using Christoffel = std::array<Metric4, 4>;  // gamma[k](i, j) = Gamma^k_ij

Christoffel christoffel(const MetricField& g, const Point4& x, double h) {
  std::array<Metric4, 4> dg;  // dg[l] = d g / d x_l
  for (int l = 0; l < 4; ++l) {
    Point4 e = Point4::Zero();
    e(l) = h;
    dg[static_cast<std::size_t>(l)] = (g(x + e) - g(x - e)) / (2.0 * h);
  }
  const Metric4 ginv = g(x).inverse();
  Christoffel gam;
  for (int k = 0; k < 4; ++k) {
    Metric4 m = Metric4::Zero();
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (int l = 0; l < 4; ++l)
          m(i, j) += 0.5 * ginv(k, l) *
                     (dg[static_cast<std::size_t>(i)](j, l) + dg[static_cast<std::size_t>(j)](i, l) -
                      dg[static_cast<std::size_t>(l)](i, j));
    gam[static_cast<std::size_t>(k)] = m;
  }
  return gam;
}

}  // namespace

Metric4 ricci_tensor(const MetricField& g, const Point4& x, double step) {
  const Christoffel gam = christoffel(g, x, step);
  std::array<Christoffel, 4> dgam;  // dgam[m][k] = d Gamma^k / d x_m
  for (int m = 0; m < 4; ++m) {
    Point4 e = Point4::Zero();
    e(m) = step;
    const Christoffel plus = christoffel(g, x + e, step);
    const Christoffel minus = christoffel(g, x - e, step);
    for (std::size_t k = 0; k < 4; ++k)
      dgam[static_cast<std::size_t>(m)][k] = (plus[k] - minus[k]) / (2.0 * step);
  }
  // R_ij = d_k G^k_ij - d_j G^k_ik + G^k_kl G^l_ij - G^k_jl G^l_ik
  Metric4 ric = Metric4::Zero();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      double r = 0.0;
      for (std::size_t k = 0; k < 4; ++k) {
        r += dgam[k][k](i, j) - dgam[static_cast<std::size_t>(j)][k](i, static_cast<int>(k));
        for (std::size_t l = 0; l < 4; ++l) {
          r += gam[k](static_cast<int>(k), static_cast<int>(l)) * gam[l](i, j) -
               gam[k](j, static_cast<int>(l)) * gam[l](i, static_cast<int>(k));
        }
      }
      ric(i, j) = r;
    }
  return ric;
}

EinsteinResult einstein_check(const std::vector<Point4>& points, Chart chart, double step) {
  MetricField field;
  if (chart == Chart::Inhomogeneous) {
    field = fs_metric;
  } else {
    field = [](const Point4& p) { return angular_metric(p(0), p(1)); };
  }

  EinsteinResult res;
  std::vector<double> ratios;
  for (const auto& x : points) {
    if (chart == Chart::Angular) {
      // The stencil reaches two steps out in each direction.
      angular_metric(x(0) - 2 * step, x(1) - 2 * step);
      angular_metric(x(0) + 2 * step, x(1) + 2 * step);
    }
    const Metric4 g = field(x);
    const Metric4 ric = ricci_tensor(field, x, step);
    const double scale = g.cwiseAbs().maxCoeff();
    double sum = 0.0;
    int count = 0;
    std::vector<std::pair<int, int>> small;
    for (int i = 0; i < 4; ++i)
      for (int j = i; j < 4; ++j) {
        if (std::abs(g(i, j)) > 1e-3 * scale) {
          ratios.push_back(ric(i, j) / g(i, j));
          sum += ratios.back();
          ++count;
        } else {
          small.emplace_back(i, j);
        }
      }
    const double lam = count ? sum / count : 0.0;
    res.per_point_lambda.push_back(lam);
    for (auto [i, j] : small)
      res.max_offdiag = std::max(res.max_offdiag, std::abs(ric(i, j) - lam * g(i, j)) / scale);
  }
  if (ratios.empty()) return res;
  double total = 0.0;
  for (double r : ratios) total += r;
  res.lambda = total / static_cast<double>(ratios.size());
  const auto [lo, hi] = std::minmax_element(ratios.begin(), ratios.end());
  res.spread = (*hi - *lo) / std::abs(res.lambda);
  return res;
}

HalfInteger HalfInteger::from_double(double v) {
  const double t = 2.0 * v;
  if (!(v >= 0.0) || std::abs(t - std::round(t)) > 1e-12) {
    std::ostringstream msg;
    msg << "l = " << v << " is not a nonnegative half-integer";
    throw Error(ErrorKind::TerminationViolated, msg.str());
  }
  return {static_cast<int>(std::lround(t))};
}

double RadialSolution::theta() const {
  return theta_sq >= 0.0 ? std::sqrt(theta_sq) : std::numeric_limits<double>::quiet_NaN();
}

RadialSolution f0_solution() { return {SolutionKind::F0, {0}, 0, {}, 0.0}; }

namespace {

bool is_gamma_pole(double x) { return x <= 0.0 && x == std::round(x); }

void check_termination(HalfInteger ell, int N) {
  const double l = ell.value();
  const bool ok = N >= 0 && (ell.is_integer() ? N < l + 1.0 : N < l - 0.5);
  if (!ok) {
    std::ostringstream msg;
    msg << "N = " << N << " violates termination for l = " << l
        << (ell.is_integer() ? " (need N < l+1)" : " (need N < l-1/2)");
    throw Error(ErrorKind::TerminationViolated, msg.str());
  }
}

}  // namespace

std::vector<double> gl_coefficients(HalfInteger ell, int N) {
  check_termination(ell, N);
  const double l = ell.value();
  std::vector<double> a(static_cast<std::size_t>(N) + 1);
  for (int n = 0; n <= N; ++n) {
    // x! = Gamma(x + 1)
    const std::array<double, 4> args{2 * l - n + 1, N - 2 * l - 0.5 + n, n + 1.0, N - n + 1.0};
    if (std::any_of(args.begin(), args.end(), is_gamma_pole)) {
      a[static_cast<std::size_t>(n)] = 0.0;
      continue;
    }
    a[static_cast<std::size_t>(n)] =
        std::tgamma(args[0]) * std::tgamma(args[1]) / (std::tgamma(args[2]) * std::tgamma(args[3]));
  }
  return a;
}

RadialSolution g_ell_solution(HalfInteger ell, int N) {
  RadialSolution s;
  s.kind = SolutionKind::GEll;
  s.ell = ell;
  s.N = N;
  s.coeffs = gl_coefficients(ell, N);
  const double l = ell.value();
  s.theta_sq = (l + 1.0 - N) * (l - 0.5 - N);
  return s;
}

RadialValue evaluate(const RadialSolution& s, double omega) {
  const double sn = std::sin(omega);
  const double cs = std::cos(omega);
  RadialValue v;
  if (s.kind == SolutionKind::F0) {
    v.f = -cs / (sn * sn) + std::log(std::tan(omega / 2.0));
    v.df = 2.0 / (sn * sn * sn);
    v.d2f = -6.0 * cs / (sn * sn * sn * sn);
    return v;
  }
  const double l = s.ell.value();
  for (std::size_t n = 0; n < s.coeffs.size(); ++n) {
    const double m = 2.0 * static_cast<double>(n) - 2.0 * l - 2.0;
    const double a = s.coeffs[n];
    // d/dw sin^m = m sin^(m-1) cos; d2/dw2 sin^m = m(m-1) sin^(m-2) - m^2 sin^m
    v.f += a * std::pow(sn, m);
    v.df += a * m * std::pow(sn, m - 1.0) * cs;
    v.d2f += a * (m * (m - 1.0) * std::pow(sn, m - 2.0) - m * m * std::pow(sn, m));
  }
  return v;
}

double lb_radial_residual(const RadialSolution& s, double omega) {
  if (!(omega > 0.05 && omega < pi - 0.05)) {
    std::ostringstream msg;
    msg << "w = " << omega << " is inside the pole exclusion zone";
    throw Error(ErrorKind::TooCloseToPole, msg.str());
  }
  const RadialValue v = evaluate(s, omega);
  const double sn = std::sin(omega);
  const double l = s.ell.value();
  const double t1 = v.d2f;
  const double t2 = 3.0 * std::cos(omega) / sn * v.df;
  const double t3 = -2.0 * l * (2.0 * l + 2.0) / (sn * sn) * v.f;
  const double t4 = 4.0 * s.theta_sq * v.f;
  const double scale = std::max(1.0, std::abs(t1) + std::abs(t2) + std::abs(t3) + std::abs(t4));
  return std::abs(t1 + t2 + t3 + t4) / scale;
}

std::vector<double> omega_grid(std::size_t count) {
  std::vector<double> w(count);
  const double lo = 0.05;
  const double hi = pi - 0.05;
  for (std::size_t i = 0; i < count; ++i)
    w[i] = lo + (hi - lo) * static_cast<double>(i + 1) / static_cast<double>(count + 1);
  return w;
}

Integrability integrability(const RadialSolution& s) {
  Integrability out;
  if (s.kind == SolutionKind::F0) {
    out.leading_exponent = 1.0;  // f0 ~ -1/sin^2 at the poles
  } else {
    std::size_t n0 = 0;
    while (n0 < s.coeffs.size() && s.coeffs[n0] == 0.0) ++n0;
    out.leading_exponent = 2.0 * static_cast<double>(n0) - 2.0 * s.ell.value() - 2.0 + 3.0;
  }
  out.integrable = out.leading_exponent > -1.0;

  auto integrand = [&s](double w) {
    const double sn = std::sin(w);
    return std::abs(evaluate(s, w).f) * sn * sn * sn;
  };
  using boost::math::quadrature::gauss_kronrod;
  out.eps = {1e-1, 1e-2, 1e-3, 1e-4};
  for (double e : out.eps) {
    // Split at the equator so each piece has one singular endpoint.
    const double left = gauss_kronrod<double, 31>::integrate(integrand, e, pi / 2, 15, 1e-10);
    const double right = gauss_kronrod<double, 31>::integrate(integrand, pi / 2, pi - e, 15, 1e-10);
    out.integrals.push_back(left + right);
  }
  const std::size_t m = out.integrals.size();
  const double last = out.integrals[m - 1] - out.integrals[m - 2];
  const double prev = out.integrals[m - 2] - out.integrals[m - 3];
  out.numeric_divergent = last > 0.5 * prev;
  return out;
}

}  // namespace sympflag::s4lb
