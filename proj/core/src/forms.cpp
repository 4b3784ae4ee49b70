#include "sympflag/forms.hpp"

#include <algorithm>
#include <sstream>

#include "sympflag/errors.hpp"

namespace sympflag::forms {

namespace {

void require_dim(std::size_t got, std::size_t want, const char* what) {
  if (got != want) {
    std::ostringstream msg;
    msg << what << ": expected " << want << " components, got " << got;
    throw Error(ErrorKind::DimensionMismatch, msg.str());
  }
}

}  // namespace

OneForm::OneForm(std::size_t dim, std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), coeffs_(dim, QuatMatrix(rows, cols)) {}

OneForm::OneForm(std::vector<QuatMatrix> coeffs) : coeffs_(std::move(coeffs)) {
  if (!coeffs_.empty()) {
    rows_ = coeffs_.front().rows();
    cols_ = coeffs_.front().cols();
  }
  for (const auto& c : coeffs_) {
    if (c.rows() != rows_ || c.cols() != cols_) {
      throw Error(ErrorKind::DimensionMismatch, "one-form coefficients differ in shape");
    }
  }
}

QuatMatrix OneForm::evaluate(const std::vector<double>& v) const {
  require_dim(v.size(), dim(), "OneForm::evaluate");
  QuatMatrix out(rows_, cols_);
  for (std::size_t r = 0; r < dim(); ++r) {
    if (v[r] != 0.0) out += coeffs_[r] * v[r];
  }
  return out;
}

OneForm adjoint(const OneForm& a) {
  std::vector<QuatMatrix> c;
  c.reserve(a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r) c.push_back(adjoint(a[r]));
  return OneForm(std::move(c));
}

OneForm operator*(const QuatMatrix& m, const OneForm& a) {
  std::vector<QuatMatrix> c;
  c.reserve(a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r) c.push_back(m * a[r]);
  return OneForm(std::move(c));
}

OneForm operator*(const OneForm& a, const QuatMatrix& m) {
  std::vector<QuatMatrix> c;
  c.reserve(a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r) c.push_back(a[r] * m);
  return OneForm(std::move(c));
}

TwoForm::TwoForm(std::size_t dim, std::size_t rows, std::size_t cols)
    : dim_(dim), coeffs_(dim * (dim > 0 ? dim - 1 : 0) / 2, QuatMatrix(rows, cols)) {}

std::size_t TwoForm::index(std::size_t r, std::size_t s) const {
  if (!(r < s && s < dim_)) {
    std::ostringstream msg;
    msg << "two-form index (" << r << ", " << s << ") needs r < s < " << dim_;
    throw Error(ErrorKind::IndexOutOfRange, msg.str());
  }
  // Row-major over the strict upper triangle.
  return r * (2 * dim_ - r - 1) / 2 + (s - r - 1);
}

QuatMatrix& TwoForm::at(std::size_t r, std::size_t s) { return coeffs_[index(r, s)]; }
const QuatMatrix& TwoForm::at(std::size_t r, std::size_t s) const { return coeffs_[index(r, s)]; }

QuatMatrix TwoForm::evaluate(const std::vector<double>& u, const std::vector<double>& v) const {
  require_dim(u.size(), dim_, "TwoForm::evaluate");
  require_dim(v.size(), dim_, "TwoForm::evaluate");
  if (coeffs_.empty()) return {};
  QuatMatrix out(coeffs_.front().rows(), coeffs_.front().cols());
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t s = r + 1; s < dim_; ++s) {
      const double w = u[r] * v[s] - u[s] * v[r];
      if (w != 0.0) out += at(r, s) * w;
    }
  }
  return out;
}

TwoForm wedge(const OneForm& a, const OneForm& b) {
  require_dim(b.dim(), a.dim(), "wedge");
  if (a.cols() != b.rows()) {
    throw Error(ErrorKind::DimensionMismatch, "wedge: coefficient shapes do not multiply");
  }
  TwoForm out(a.dim(), a.rows(), b.cols());
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t s = r + 1; s < a.dim(); ++s) out.at(r, s) = a[r] * b[s] - a[s] * b[r];
  return out;
}

OneForm quaternion_differential() {
  OneForm dy(4, 1, 1);
  for (int r = 0; r < 4; ++r) dy[static_cast<std::size_t>(r)](0, 0) = Quaternion::basis(r);
  return dy;
}

DualPair dy_wedge() {
  const OneForm dy = quaternion_differential();
  const OneForm dys = adjoint(dy);
  return {wedge(dy, dys), wedge(dys, dy)};
}

RealTwoForm component(const TwoForm& f, int r) {
  if (f.dim() != 4) throw Error(ErrorKind::DimensionMismatch, "component needs a 4-dim form");
  RealTwoForm out{};
  for (std::size_t p = 0; p < kTwoFormBasis.size(); ++p) {
    const auto [a, b] = kTwoFormBasis[p];
    const QuatMatrix& c = f.at(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
    if (c.rows() != 1 || c.cols() != 1) {
      throw Error(ErrorKind::DimensionMismatch, "component needs quaternion coefficients");
    }
    out[p] = c(0, 0)[r];
  }
  return out;
}

namespace {

int permutation_sign(std::array<int, 4> p) {
  int sign = 1;
  for (int i = 0; i < 4; ++i) {
    while (p[static_cast<std::size_t>(i)] != i) {
      std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(p[static_cast<std::size_t>(i)])]);
      sign = -sign;
    }
  }
  return sign;
}

}  // namespace

RealTwoForm hodge_star(const RealTwoForm& f) {
  // *(dx_a ^ dx_b) = sign(a b c d) dx_c ^ dx_d with {c, d} the complement, c < d.
  RealTwoForm out{};
  for (std::size_t p = 0; p < kTwoFormBasis.size(); ++p) {
    const auto [a, b] = kTwoFormBasis[p];
    std::array<int, 4> perm{a, b, 0, 0};
    int fill = 2;
    for (int c = 0; c < 4; ++c)
      if (c != a && c != b) perm[static_cast<std::size_t>(fill++)] = c;
    const auto target = std::find(kTwoFormBasis.begin(), kTwoFormBasis.end(),
                                  std::pair<int, int>{perm[2], perm[3]});
    out[static_cast<std::size_t>(target - kTwoFormBasis.begin())] += permutation_sign(perm) * f[p];
  }
  return out;
}

namespace {

ConnectionBlocks split(const QuatMatrix& w, std::size_t j) {
  const std::size_t n = w.rows();
  if (j == 0 || j >= n) throw Error(ErrorKind::ShapeMismatch, "connection split needs 0 < j < n");
  const std::size_t k = n - j;
  return {w.block(0, 0, j, j), w.block(0, j, j, k), w.block(j, 0, k, j), w.block(j, j, k, k)};
}

QuatMatrix omega_along(const GroupPath& path, double t, double step) {
  const GroupElement g = path(t);
  const QuatMatrix dg = (path(t + step).matrix() - path(t - step).matrix()) * (0.5 / step);
  return adjoint(g.matrix()) * dg;
}

}  // namespace

ConnectionBlocks connection_blocks(const GroupPath& path, double t, std::size_t j, double step) {
  return split(omega_along(path, t, step), j);
}

std::array<double, 4> maurer_cartan_residual(const GroupSurface& surface, double s, double t,
                                             std::size_t j, double step) {
  auto w_s = [&](double ss, double tt) {
    return omega_along([&](double x) { return surface(x, tt); }, ss, step);
  };
  auto w_t = [&](double ss, double tt) {
    return omega_along([&](double x) { return surface(ss, x); }, tt, step);
  };
  const QuatMatrix ws = w_s(s, t);
  const QuatMatrix wt = w_t(s, t);
  const QuatMatrix ds_wt = (w_t(s + step, t) - w_t(s - step, t)) * (0.5 / step);
  const QuatMatrix dt_ws = (w_s(s, t + step) - w_s(s, t - step)) * (0.5 / step);
  const QuatMatrix mc = ds_wt - dt_ws + ws * wt - wt * ws;
  const ConnectionBlocks b = split(mc, j);
  return {max_abs(b.w11), max_abs(b.w12), max_abs(b.w21), max_abs(b.w22)};
}

std::vector<double> flatten(const QuatMatrix& dy) {
  std::vector<double> v;
  v.reserve(4 * dy.rows() * dy.cols());
  for (const auto& q : dy.entries())
    for (int r = 0; r < 4; ++r) v.push_back(q[r]);
  return v;
}

QuatMatrix unflatten(const std::vector<double>& v, std::size_t rows, std::size_t cols) {
  require_dim(v.size(), 4 * rows * cols, "unflatten");
  QuatMatrix m(rows, cols);
  std::size_t p = 0;
  for (std::size_t a = 0; a < rows; ++a)
    for (std::size_t b = 0; b < cols; ++b)
      for (int r = 0; r < 4; ++r) m(a, b)[r] = v[p++];
  return m;
}

namespace {

// dY as a one-form: the coefficient of each real coordinate is the
// matrix unit carrying the matching quaternion basis element.
OneForm coordinate_differential(std::size_t rows, std::size_t cols) {
  OneForm dy(4 * rows * cols, rows, cols);
  std::size_t p = 0;
  for (std::size_t a = 0; a < rows; ++a)
    for (std::size_t b = 0; b < cols; ++b)
      for (int r = 0; r < 4; ++r) dy[p++](a, b) = Quaternion::basis(r);
  return dy;
}

QuatMatrix one_plus(const QuatMatrix& m) { return QuatMatrix::identity(m.rows()) + m; }

}  // namespace

OneForm omega12(const QuatMatrix& y) {
  const QuatMatrix a = func_hermitian(one_plus(y * adjoint(y)), ScalarFunction::InvSqrt);
  const QuatMatrix d = func_hermitian(one_plus(adjoint(y) * y), ScalarFunction::InvSqrt);
  return adjoint(a) * coordinate_differential(y.rows(), y.cols()) * d;
}

CurvatureBlocks curvature_blocks(const QuatMatrix& y, const QuatMatrix& dy1,
                                 const QuatMatrix& dy2) {
  for (const auto* d : {&dy1, &dy2}) {
    if (d->rows() != y.rows() || d->cols() != y.cols()) {
      throw Error(ErrorKind::ShapeMismatch, "tangent direction shape differs from Y");
    }
  }
  const OneForm w = omega12(y);
  const OneForm ws = adjoint(w);
  const std::vector<double> u = flatten(dy1);
  const std::vector<double> v = flatten(dy2);

  const OneForm dy = coordinate_differential(y.rows(), y.cols());
  const OneForm dys = adjoint(dy);
  const QuatMatrix p = inverse(one_plus(adjoint(y) * y));  // (1+Y*Y)^-1
  const QuatMatrix q = inverse(one_plus(y * adjoint(y)));  // (1+YY*)^-1

  CurvatureBlocks out;
  out.omega11 = wedge(w, ws).evaluate(u, v);
  out.omega22 = wedge(ws, w).evaluate(u, v);
  out.r11 = trace(wedge(dy * p, dys * q).evaluate(u, v));
  out.r22 = trace(wedge(dys * q, dy * p).evaluate(u, v));
  return out;
}

CurvatureMagnitudes curvature_magnitudes(const QuatMatrix& y) {
  const std::size_t dim = 4 * y.rows() * y.cols();
  CurvatureMagnitudes m;
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t s = r + 1; s < dim; ++s) {
      std::vector<double> u(dim, 0.0);
      std::vector<double> v(dim, 0.0);
      u[r] = 1.0;
      v[s] = 1.0;
      const CurvatureBlocks b =
          curvature_blocks(y, unflatten(u, y.rows(), y.cols()), unflatten(v, y.rows(), y.cols()));
      m.omega11_sq += frobenius_sq(b.omega11);
      m.omega22_sq += frobenius_sq(b.omega22);
      m.r11_scalar += std::abs(b.r11.w);
      m.r22_scalar += std::abs(b.r22.w);
    }
  }
  return m;
}

}  // namespace sympflag::forms
