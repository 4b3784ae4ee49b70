#pragma once

#include <functional>
#include <vector>

#include <Eigen/Core>

namespace sympflag::s4lb {

using Point4 = Eigen::Vector4d;
using Metric4 = Eigen::Matrix4d;
using MetricField = std::function<Metric4(const Point4&)>;

/// ds^2 = (1+yy')^-1 dy (1+y'y)^-1 dy' in inhomogeneous coordinates y.
Metric4 fs_metric(const Point4& y);

/// y = (x1..x4)/x0 for a point x on the unit sphere in R^5. Throws ChartBoundary if x0 = 0.
Point4 inhomogeneous(const Eigen::Matrix<double, 5, 1>& x);

/// 4 dw^2 + sin^2 w [da^2 + db^2 + dg^2 + 2 cos a db dg] in (w, a, b, g).
/// Throws ChartBoundary unless w, a lie in (0, pi).
Metric4 angular_metric(double omega, double alpha);

/// Ricci tensor of a metric field from central-difference Christoffel symbols.
Metric4 ricci_tensor(const MetricField& g, const Point4& x, double step = 1e-4);

enum class Chart { Inhomogeneous, Angular };

struct EinsteinResult {
  double lambda = 0.0;       // mean of Ric_ij / g_ij over all points and components
  double spread = 0.0;       // (max - min ratio) / |lambda|
  double max_offdiag = 0.0;  // max |Ric_ij - lambda g_ij| / max|g| where g_ij is too small for a ratio
  std::vector<double> per_point_lambda;
};

/// Angular points are (w, a, b, g). Throws ChartBoundary.
EinsteinResult einstein_check(const std::vector<Point4>& points, Chart chart = Chart::Inhomogeneous,
                              double step = 1e-4);

/// Nonnegative half-integer stored as twice its value.
struct HalfInteger {
  int twice = 0;

  static HalfInteger from_double(double v);  // throws TerminationViolated if not a half-integer
  double value() const { return twice / 2.0; }
  bool is_integer() const { return twice % 2 == 0; }
};

enum class SolutionKind { F0, GEll };

struct RadialSolution {
  SolutionKind kind = SolutionKind::F0;
  HalfInteger ell;
  int N = 0;
  std::vector<double> coeffs;  // a_0..a_N for GEll
  double theta_sq = 0.0;       // (l+1-N)(l-1/2-N); 0 for F0

  /// sqrt(theta_sq); NaN when theta_sq < 0.
  double theta() const;
};

/// f0 = -cot(w)/sin(w) + ln tan(w/2), the static l = 0 solution.
RadialSolution f0_solution();

/// a_n = (2l-n)! (N-2l-3/2+n)! / [n! (N-n)!] with x! = Gamma(x+1); a factor
/// at a pole of Gamma makes its coefficient 0. Throws TerminationViolated
/// unless N < l+1 (integer l) or N < l-1/2 (half-integer l).
std::vector<double> gl_coefficients(HalfInteger ell, int N);

/// g_l = sum_n a_n sin(w)^(2n-2l-2).
RadialSolution g_ell_solution(HalfInteger ell, int N);

struct RadialValue {
  double f = 0.0;
  double df = 0.0;
  double d2f = 0.0;
};

/// Closed-form value and analytic first and second derivatives.
RadialValue evaluate(const RadialSolution& s, double omega);

/// |f'' + 3 cot f' - 2l(2l+2) f / sin^2 + 4 theta^2 f| divided by
/// max(1, sum of the term magnitudes). Throws TooCloseToPole outside (0.05, pi-0.05).
double lb_radial_residual(const RadialSolution& s, double omega);

/// Default table grid: `count` points strictly inside (0.05, pi-0.05).
std::vector<double> omega_grid(std::size_t count = 200);

struct Integrability {
  double leading_exponent = 0.0;  // |f| sin^3 ~ sin^p at the poles
  bool integrable = true;         // p > -1
  std::vector<double> eps;
  std::vector<double> integrals;  // int_{eps}^{pi-eps} |f| sin^3
  bool numeric_divergent = false;
};

Integrability integrability(const RadialSolution& s);

}  // namespace sympflag::s4lb
