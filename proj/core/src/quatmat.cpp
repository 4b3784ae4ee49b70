#include "sympflag/quatmat.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/SVD>

#include "sympflag/errors.hpp"

namespace sympflag {

namespace {

void require_same_shape(const QuatMatrix& a, const QuatMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    std::ostringstream msg;
    msg << op << ": " << a.rows() << "x" << a.cols() << " vs " << b.rows() << "x" << b.cols();
    throw Error(ErrorKind::DimensionMismatch, msg.str());
  }
}

void require_square(const QuatMatrix& m, const char* op) {
  if (!m.is_square()) {
    std::ostringstream msg;
    msg << op << " needs a square matrix, got " << m.rows() << "x" << m.cols();
    throw Error(ErrorKind::NonSquare, msg.str());
  }
}

}  // namespace

QuatMatrix::QuatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

QuatMatrix::QuatMatrix(std::size_t rows, std::size_t cols, std::vector<Quaternion> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw Error(ErrorKind::DimensionMismatch, "entry count does not match rows*cols");
  }
}

QuatMatrix::QuatMatrix(std::initializer_list<std::initializer_list<Quaternion>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged initializer");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

QuatMatrix QuatMatrix::identity(std::size_t n) {
  QuatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Quaternion::e();
  return m;
}

QuatMatrix QuatMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr,
                             std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) {
    throw Error(ErrorKind::DimensionMismatch, "block out of range");
  }
  QuatMatrix b(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

void QuatMatrix::set_block(std::size_t r0, std::size_t c0, const QuatMatrix& b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) {
    throw Error(ErrorKind::DimensionMismatch, "set_block out of range");
  }
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
}

QuatMatrix& QuatMatrix::operator+=(const QuatMatrix& o) {
  require_same_shape(*this, o, "operator+");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

QuatMatrix& QuatMatrix::operator-=(const QuatMatrix& o) {
  require_same_shape(*this, o, "operator-");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

QuatMatrix& QuatMatrix::operator*=(double s) {
  for (auto& q : entries_) q *= s;
  return *this;
}

QuatMatrix operator+(QuatMatrix a, const QuatMatrix& b) { return a += b; }
QuatMatrix operator-(QuatMatrix a, const QuatMatrix& b) { return a -= b; }
QuatMatrix operator-(QuatMatrix a) { return a *= -1.0; }
QuatMatrix operator*(QuatMatrix a, double s) { return a *= s; }
QuatMatrix operator*(double s, QuatMatrix a) { return a *= s; }

QuatMatrix operator*(const Quaternion& q, QuatMatrix a) {
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) a(r, c) = q * a(r, c);
  return a;
}

QuatMatrix operator*(QuatMatrix a, const Quaternion& q) {
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) a(r, c) = a(r, c) * q;
  return a;
}

QuatMatrix matmul(const QuatMatrix& a, const QuatMatrix& b) {
  if (a.cols() != b.rows()) {
    std::ostringstream msg;
    msg << "matmul: " << a.rows() << "x" << a.cols() << " times " << b.rows() << "x" << b.cols();
    throw Error(ErrorKind::DimensionMismatch, msg.str());
  }
  QuatMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t t = 0; t < a.cols(); ++t) {
      const Quaternion& lhs = a(r, t);
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += lhs * b(t, c);
    }
  }
  return out;
}

QuatMatrix operator*(const QuatMatrix& a, const QuatMatrix& b) { return matmul(a, b); }

QuatMatrix adjoint(const QuatMatrix& m) {
  QuatMatrix out(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(c, r) = conj(m(r, c));
  return out;
}

Quaternion trace(const QuatMatrix& m) {
  require_square(m, "trace");
  Quaternion t;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

double max_abs_diff(const QuatMatrix& a, const QuatMatrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double d = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    d = std::max(d, max_abs_diff(a.entries()[i], b.entries()[i]));
  return d;
}

double max_abs(const QuatMatrix& m) {
  double d = 0.0;
  for (const auto& q : m.entries())
    d = std::max({d, std::abs(q.w), std::abs(q.x), std::abs(q.y), std::abs(q.z)});
  return d;
}

double norm1(const QuatMatrix& m) {
  double best = 0.0;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    double col = 0.0;
    for (std::size_t r = 0; r < m.rows(); ++r) col += norm(m(r, c));
    best = std::max(best, col);
  }
  return best;
}

double frobenius_sq(const QuatMatrix& m) {
  double s = 0.0;
  for (const auto& q : m.entries()) s += norm_sq(q);
  return s;
}

Eigen::MatrixXcd embed(const QuatMatrix& m) {
  Eigen::MatrixXcd e(2 * m.rows(), 2 * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const M2C b = to_m2c(m(r, c));
      const auto i = static_cast<Eigen::Index>(2 * r);
      const auto j = static_cast<Eigen::Index>(2 * c);
      e(i, j) = b.r11;
      e(i, j + 1) = b.r12;
      e(i + 1, j) = b.r21;
      e(i + 1, j + 1) = b.r22;
    }
  }
  return e;
}

QuatMatrix from_embedding(const Eigen::MatrixXcd& e, double tol) {
  if (e.rows() % 2 != 0 || e.cols() % 2 != 0) {
    throw Error(ErrorKind::MalformedM2C, "embedding dimensions must be even");
  }
  QuatMatrix m(static_cast<std::size_t>(e.rows() / 2), static_cast<std::size_t>(e.cols() / 2));
  for (Eigen::Index r = 0; r < e.rows() / 2; ++r) {
    for (Eigen::Index c = 0; c < e.cols() / 2; ++c) {
      const M2C b{e(2 * r, 2 * c), e(2 * r, 2 * c + 1), e(2 * r + 1, 2 * c),
                  e(2 * r + 1, 2 * c + 1)};
      m(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = from_m2c(b, tol);
    }
  }
  return m;
}

QuatMatrix exp(const QuatMatrix& m) {
  require_square(m, "exp");
  constexpr int kOrder = 18;
  const std::size_t n = m.rows();
  const double nrm = norm1(m);
  int squarings = 0;
  while (std::ldexp(nrm, -squarings) >= 0.5) ++squarings;
  const QuatMatrix a = m * std::ldexp(1.0, -squarings);

  const QuatMatrix id = QuatMatrix::identity(n);
  QuatMatrix result = id + a * (1.0 / kOrder);
  for (int k = kOrder - 1; k >= 1; --k) result = id + (a * result) * (1.0 / k);
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

QuatMatrix inverse(const QuatMatrix& m, double max_condition) {
  require_square(m, "inverse");
  const Eigen::MatrixXcd e = embed(m);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(e);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() ? sv(0) : 0.0;
  const double smin = sv.size() ? sv(sv.size() - 1) : 0.0;
  if (!(smin > 0.0) || smax / smin > max_condition) {
    std::ostringstream msg;
    msg << "condition number " << (smin > 0.0 ? smax / smin : INFINITY) << " exceeds "
        << max_condition;
    throw Error(ErrorKind::SingularMatrix, msg.str());
  }
  const Eigen::MatrixXcd inv = e.fullPivLu().inverse();
  return from_embedding(inv, 1e-9 * std::max(1.0, inv.cwiseAbs().maxCoeff()));
}

bool is_hyperhermitian(const QuatMatrix& m, double tol) {
  if (!m.is_square()) return false;
  return max_abs_diff(m, adjoint(m)) <= tol * std::max(1.0, max_abs(m));
}

bool is_skew_adjoint(const QuatMatrix& m, double tol) {
  if (!m.is_square()) return false;
  return max_abs(m + adjoint(m)) <= tol * std::max(1.0, max_abs(m));
}

namespace {

Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> hermitian_eigen(const QuatMatrix& p) {
  require_square(p, "hyper-Hermitian spectral function");
  if (!is_hyperhermitian(p)) {
    throw Error(ErrorKind::NotHyperHermitian, "matrix differs from its adjoint");
  }
  const Eigen::MatrixXcd e = embed(p);
  const Eigen::MatrixXcd sym = (e + e.adjoint()) / 2.0;
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(sym);
}

double apply_scalar(ScalarFunction f, double x) {
  switch (f) {
    case ScalarFunction::SinSqrt: return std::sin(std::sqrt(std::max(x, 0.0)));
    case ScalarFunction::CosSqrt: return std::cos(std::sqrt(std::max(x, 0.0)));
    case ScalarFunction::SincSqrt: {
      const double r = std::sqrt(std::max(x, 0.0));
      if (r < 1e-4) return 1.0 - x / 6.0 + x * x / 120.0;
      return std::sin(r) / r;
    }
    case ScalarFunction::InvSqrt: return 1.0 / std::sqrt(x);
    case ScalarFunction::Sqrt: return std::sqrt(std::max(x, 0.0));
  }
  return 0.0;
}

}  // namespace

std::vector<double> eigvals_hyperhermitian(const QuatMatrix& p, double pair_tol) {
  const auto solver = hermitian_eigen(p);
  const Eigen::VectorXd& lam = solver.eigenvalues();  // ascending
  const double scale = std::max(1.0, lam.cwiseAbs().maxCoeff());
  std::vector<double> out;
  out.reserve(p.rows());
  for (Eigen::Index i = 0; i + 1 < lam.size(); i += 2) {
    if (std::abs(lam(i) - lam(i + 1)) > pair_tol * scale) {
      std::ostringstream msg;
      msg << "embedded eigenvalues " << lam(i) << " and " << lam(i + 1) << " do not pair";
      throw Error(ErrorKind::PairingFailure, msg.str());
    }
    out.push_back((lam(i) + lam(i + 1)) / 2);
  }
  return out;
}

QuatMatrix func_hermitian(const QuatMatrix& p, ScalarFunction f, double tol) {
  const auto solver = hermitian_eigen(p);
  const Eigen::VectorXd& lam = solver.eigenvalues();
  if (f == ScalarFunction::InvSqrt && lam.size() > 0 && lam(0) <= tol) {
    std::ostringstream msg;
    msg << "smallest eigenvalue " << lam(0) << " is not positive";
    throw Error(ErrorKind::SingularInvSqrt, msg.str());
  }
  Eigen::VectorXd flam(lam.size());
  for (Eigen::Index i = 0; i < lam.size(); ++i) flam(i) = apply_scalar(f, lam(i));
  const Eigen::MatrixXcd& v = solver.eigenvectors();
  const Eigen::MatrixXcd out = v * flam.asDiagonal() * v.adjoint();
  return from_embedding(out, 1e-9 * std::max(1.0, out.cwiseAbs().maxCoeff()));
}

double unitarity_residual(const QuatMatrix& g) {
  return max_abs_diff(adjoint(g) * g, QuatMatrix::identity(g.cols()));
}

GroupElement::GroupElement(QuatMatrix g, double tol) : g_(std::move(g)) {
  require_square(g_, "GroupElement");
  const double res = unitarity_residual(g_);
  if (!(res <= tol)) {
    std::ostringstream msg;
    msg << "||g* g - 1|| = " << res << " exceeds " << tol;
    throw Error(ErrorKind::NotGroupElement, msg.str());
  }
}

GroupElement GroupElement::inverse() const { return GroupElement(adjoint(g_), Unchecked{}); }

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  return GroupElement(a.g_ * b.g_, GroupElement::Unchecked{});
}

Eigen::MatrixXcd interleave_to_block(const Eigen::MatrixXcd& e) {
  const Eigen::Index n = e.rows() / 2;
  Eigen::PermutationMatrix<Eigen::Dynamic> perm(e.rows());
  for (Eigen::Index r = 0; r < n; ++r) {
    perm.indices()(2 * r) = static_cast<int>(r);
    perm.indices()(2 * r + 1) = static_cast<int>(n + r);
  }
  return perm * e * perm.transpose();
}

Eigen::MatrixXcd symplectic_form(std::size_t n) {
  const auto m = static_cast<Eigen::Index>(n);
  Eigen::MatrixXcd j = Eigen::MatrixXcd::Zero(2 * m, 2 * m);
  j.topRightCorner(m, m).setIdentity();
  j.bottomLeftCorner(m, m) = -Eigen::MatrixXcd::Identity(m, m);
  return j;
}

Eigen::MatrixXcd to_sp2nc(const GroupElement& g) { return interleave_to_block(embed(g.matrix())); }

}  // namespace sympflag
