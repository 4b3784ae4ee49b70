#include "sympflag/coset.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/LU>

#include "sympflag/errors.hpp"
#include "sympflag/random.hpp"

namespace sympflag::coset {

namespace {

// Quaternion-matrix inverse where a failure means the point left the chart.
QuatMatrix denominator_inverse(const QuatMatrix& m, const char* what) {
  try {
    return inverse(m);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::SingularMatrix) throw;
    throw Error(ErrorKind::SingularDenominator, std::string(what) + " is singular");
  }
}

void require_same_shape(const QuatMatrix& a, const QuatMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    std::ostringstream msg;
    msg << what << ": " << a.rows() << "x" << a.cols() << " vs " << b.rows() << "x" << b.cols();
    throw Error(ErrorKind::ShapeMismatch, msg.str());
  }
}

QuatMatrix one_plus(const QuatMatrix& m) { return QuatMatrix::identity(m.rows()) + m; }

double embedding_trace(const QuatMatrix& m) { return 2.0 * trace(m).w; }

}  // namespace

CosetParam coset_param(const QuatMatrix& xi) {
  const QuatMatrix xxs = xi * adjoint(xi);
  const QuatMatrix xsx = adjoint(xi) * xi;
  CosetParam p;
  p.xi = xi;
  p.z = func_hermitian(xxs, ScalarFunction::SincSqrt) * xi;
  p.cos_left = func_hermitian(xxs, ScalarFunction::CosSqrt);
  p.cos_right = func_hermitian(xsx, ScalarFunction::CosSqrt);
  return p;
}

QuatMatrix skew_embedding(const QuatMatrix& xi) {
  const std::size_t j = xi.rows();
  const std::size_t k = xi.cols();
  QuatMatrix m(j + k, j + k);
  m.set_block(0, j, xi);
  m.set_block(j, 0, -adjoint(xi));
  return m;
}

GroupElement coset_element(const QuatMatrix& xi) {
  const CosetParam p = coset_param(xi);
  const std::size_t j = xi.rows();
  const std::size_t k = xi.cols();
  QuatMatrix g(j + k, j + k);
  g.set_block(0, 0, p.cos_left);
  g.set_block(0, j, p.z);
  g.set_block(j, 0, -adjoint(p.z));
  g.set_block(j, j, p.cos_right);
  return GroupElement(std::move(g), 1e-9);
}

GrassmannPoint GrassmannPoint::from_coset(const CosetParam& p) {
  const QuatMatrix s = QuatMatrix::identity(p.z.cols()) - adjoint(p.z) * p.z;
  return {p.z * func_hermitian(s, ScalarFunction::InvSqrt, 1e-12)};
}

Blocks partition(const GroupElement& g, std::size_t j) {
  const std::size_t n = g.size();
  if (j == 0 || j >= n) {
    std::ostringstream msg;
    msg << "cannot split Sp(" << n << ") with j = " << j;
    throw Error(ErrorKind::ShapeMismatch, msg.str());
  }
  const std::size_t k = n - j;
  const QuatMatrix& m = g.matrix();
  return {m.block(0, 0, j, j), m.block(0, j, j, k), m.block(j, 0, k, j), m.block(j, j, k, k)};
}

namespace {

Blocks checked_partition(const GroupElement& g, const GrassmannPoint& x) {
  if (x.j() + x.k() != g.size()) {
    std::ostringstream msg;
    msg << x.j() << "x" << x.k() << " point under Sp(" << g.size() << ")";
    throw Error(ErrorKind::ShapeMismatch, msg.str());
  }
  return partition(g, x.j());
}

}  // namespace

GrassmannPoint lft_apply(const GroupElement& g, const GrassmannPoint& x) {
  const Blocks b = checked_partition(g, x);
  const QuatMatrix den = denominator_inverse(b.c * x.x + b.d, "CX + D");
  return {(b.a * x.x + b.b) * den};
}

GrassmannPoint lft_apply_adjoint_form(const GroupElement& g, const GrassmannPoint& x) {
  const Blocks b = checked_partition(g, x);
  const QuatMatrix den = denominator_inverse(adjoint(b.a) - x.x * adjoint(b.b), "A* - XB*");
  return {den * (x.x * adjoint(b.d) - adjoint(b.c))};
}

double TransportResiduals::max() const { return std::max({outer, inner, diff_right, diff_left}); }

TransportResiduals transport_identities(const GroupElement& g, const GrassmannPoint& xa,
                                        const GrassmannPoint& xb) {
  require_same_shape(xa.x, xb.x, "transport_identities");
  const Blocks b = checked_partition(g, xa);
  const GrassmannPoint ya = lft_apply(g, xa);
  const GrassmannPoint yb = lft_apply(g, xb);

  const QuatMatrix left_a =
      denominator_inverse(adjoint(b.a) - xa.x * adjoint(b.b), "A* - Xa B*");
  const QuatMatrix left_b =
      denominator_inverse(adjoint(b.a) - xb.x * adjoint(b.b), "A* - Xb B*");
  const QuatMatrix right_a = denominator_inverse(b.c * xa.x + b.d, "C Xa + D");
  const QuatMatrix right_b = denominator_inverse(b.c * xb.x + b.d, "C Xb + D");
  const QuatMatrix outer_right = denominator_inverse(b.a - b.b * adjoint(xb.x), "A - B Xb*");
  const QuatMatrix inner_left =
      denominator_inverse(adjoint(xa.x) * adjoint(b.c) + adjoint(b.d), "Xa* C* + D*");

  TransportResiduals r;
  r.outer = max_abs_diff(one_plus(ya.x * adjoint(yb.x)),
                         left_a * one_plus(xa.x * adjoint(xb.x)) * outer_right);
  r.inner = max_abs_diff(one_plus(adjoint(ya.x) * yb.x),
                         inner_left * one_plus(adjoint(xa.x) * xb.x) * right_b);
  const QuatMatrix dx = xa.x - xb.x;
  r.diff_right = max_abs_diff(ya.x - yb.x, left_a * dx * right_b);
  r.diff_left = max_abs_diff(ya.x - yb.x, left_b * dx * right_a);
  return r;
}

double cross_ratio(const GrassmannPoint& ya, const GrassmannPoint& yb, const GrassmannPoint& yc,
                   const GrassmannPoint& yd) {
  for (const auto* y : {&yb, &yc, &yd}) require_same_shape(ya.x, y->x, "cross_ratio");
  if (!ya.x.is_square()) {
    throw Error(ErrorKind::ShapeMismatch, "cross ratio needs square (j = k) points");
  }
  auto inv = [](const QuatMatrix& m) {
    try {
      return inverse(m);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SingularMatrix) throw;
      throw Error(ErrorKind::DegenerateQuadruple, "inverted difference is singular");
    }
  };
  const QuatMatrix prod = (ya.x - yb.x) * inv(yc.x - yb.x) * (yc.x - yd.x) * inv(ya.x - yd.x);
  return trace(prod).w;
}

Quaternion metric_trace(const GrassmannPoint& x, const QuatMatrix& dx) {
  require_same_shape(x.x, dx, "metric_form");
  const QuatMatrix left = inverse(one_plus(x.x * adjoint(x.x)));
  const QuatMatrix right = inverse(one_plus(adjoint(x.x) * x.x));
  return trace(left * dx * right * adjoint(dx));
}

double metric_form(const GrassmannPoint& x, const QuatMatrix& dx) { return metric_trace(x, dx).w; }

double metric_form_expanded(const GrassmannPoint& x, const QuatMatrix& dx) {
  require_same_shape(x.x, dx, "metric_form_expanded");
  const QuatMatrix left = inverse(one_plus(x.x * adjoint(x.x)));
  const QuatMatrix t1 = left * dx * adjoint(dx);
  const QuatMatrix t2 = left * dx * adjoint(x.x) * left * x.x * adjoint(dx);
  return trace(t1 - t2).w;
}

double metric_form_connection(const GrassmannPoint& x, const QuatMatrix& dx) {
  require_same_shape(x.x, dx, "metric_form_connection");
  const QuatMatrix a = func_hermitian(one_plus(x.x * adjoint(x.x)), ScalarFunction::InvSqrt);
  const QuatMatrix d = func_hermitian(one_plus(adjoint(x.x) * x.x), ScalarFunction::InvSqrt);
  const QuatMatrix w12 = adjoint(a) * dx * d;
  return trace(w12 * adjoint(w12)).w;
}

QuatMatrix pushforward(const GroupElement& g, const GrassmannPoint& x, const QuatMatrix& dx,
                       double step) {
  require_same_shape(x.x, dx, "pushforward");
  const GrassmannPoint plus = lft_apply(g, {x.x + dx * step});
  const GrassmannPoint minus = lft_apply(g, {x.x - dx * step});
  return (plus.x - minus.x) * (0.5 / step);
}

double metric_invariance_check(const GroupElement& g, const GrassmannPoint& x,
                               const QuatMatrix& dx) {
  const GrassmannPoint y = lft_apply(g, x);
  const QuatMatrix dy = pushforward(g, x, dx);
  return std::abs(metric_form(x, dx) - metric_form(y, dy));
}

double inversion_invariance_check(const Quaternion& q, const Quaternion& dq) {
  const Quaternion qi = inverse(q);
  const Quaternion dqi = -(qi * dq * qi);
  const double before = metric_form({QuatMatrix{{q}}}, QuatMatrix{{dq}});
  const double after = metric_form({QuatMatrix{{qi}}}, QuatMatrix{{dqi}});
  return std::abs(before - after);
}

namespace {

void require_curvature_shape(const QuatMatrix& q, std::size_t n, std::size_t k) {
  if (q.rows() != k || q.cols() != n) {
    std::ostringstream msg;
    msg << "Q must be " << k << "x" << n << ", got " << q.rows() << "x" << q.cols();
    throw Error(ErrorKind::ShapeMismatch, msg.str());
  }
}

}  // namespace

TracePair curvature_trace(const QuatMatrix& q, std::size_t n, std::size_t k) {
  require_curvature_shape(q, n, k);
  TracePair t;
  t.lhs = embedding_trace(inverse(one_plus(adjoint(q) * q)));
  t.rhs = 2.0 * static_cast<double>(n - std::min(n, k)) +
          embedding_trace(inverse(one_plus(q * adjoint(q))));
  return t;
}

CurvatureDet curvature_det(const QuatMatrix& q, std::size_t n, std::size_t k) {
  require_curvature_shape(q, n, k);
  const double power = -static_cast<double>(k + n);
  const QuatMatrix qqs = q * adjoint(q);

  double det = 1.0;
  for (double lam : eigvals_hyperhermitian(qqs)) det *= 1.0 + lam;

  const Complex emb_det = embed(one_plus(qqs)).determinant();
  CurvatureDet out;
  out.value = std::pow(det, power);
  out.embedding_value = std::pow(std::sqrt(std::abs(emb_det)), power);
  return out;
}

GroupElement fiber_element(const std::vector<Quaternion>& units) {
  QuatMatrix m(units.size(), units.size());
  for (std::size_t i = 0; i < units.size(); ++i) m(i, i) = units[i];
  return GroupElement(std::move(m), 1e-12);
}

std::vector<Quaternion> apply_sigma(Sigma sigma, const std::vector<Quaternion>& units,
                                    const std::vector<Quaternion>& v) {
  if (sigma == Sigma::Trivial) return v;
  if (units.size() != v.size()) {
    throw Error(ErrorKind::DimensionMismatch, "sigma: fiber and vector lengths differ");
  }
  std::vector<Quaternion> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = units[i] * v[i];
  return out;
}

HaarEstimate haar_average(const Alpha& alpha, Sigma sigma, const GroupElement& x,
                          std::size_t samples, std::uint64_t seed) {
  if (samples == 0) throw Error(ErrorKind::DimensionMismatch, "haar_average needs samples >= 1");
  Rng rng(seed);
  const std::size_t n = x.size();
  std::vector<Quaternion> units(n);
  std::vector<Quaternion> sum;
  std::vector<Quaternion> sum_sq;  // componentwise squares

  for (std::size_t s = 0; s < samples; ++s) {
    for (auto& u : units) u = random_unit_quaternion(rng);
    const auto v = apply_sigma(sigma, units, alpha(x * fiber_element(units)));
    if (sum.empty()) {
      sum.assign(v.size(), Quaternion{});
      sum_sq.assign(v.size(), Quaternion{});
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
      sum[i] += v[i];
      for (int r = 0; r < 4; ++r) sum_sq[i][r] += v[i][r] * v[i][r];
    }
  }

  const double ns = static_cast<double>(samples);
  HaarEstimate est;
  est.mean.resize(sum.size());
  for (std::size_t i = 0; i < sum.size(); ++i) {
    est.mean[i] = sum[i] / ns;
    for (int r = 0; r < 4; ++r) {
      const double var = std::max(0.0, sum_sq[i][r] / ns - est.mean[i][r] * est.mean[i][r]);
      const double se = samples > 1 ? std::sqrt(var / (ns - 1.0)) : 0.0;
      est.std_error = std::max(est.std_error, se);
    }
  }
  return est;
}

}  // namespace sympflag::coset
