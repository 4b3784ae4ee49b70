#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "sympflag/quaternion.hpp"

namespace sympflag {

/// Dense row-major matrix over the quaternions. Products keep the
/// left-to-right order of the factors, so A*B and B*A generally differ
/// even for 1x1 matrices.
class QuatMatrix {
 public:
  QuatMatrix() = default;
  QuatMatrix(std::size_t rows, std::size_t cols);
  QuatMatrix(std::size_t rows, std::size_t cols, std::vector<Quaternion> entries);
  QuatMatrix(std::initializer_list<std::initializer_list<Quaternion>> rows);

  static QuatMatrix identity(std::size_t n);
  static QuatMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Quaternion& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Quaternion& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  std::span<const Quaternion> entries() const noexcept { return entries_; }

  QuatMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const QuatMatrix& b);

  QuatMatrix& operator+=(const QuatMatrix& o);
  QuatMatrix& operator-=(const QuatMatrix& o);
  QuatMatrix& operator*=(double s);

  friend bool operator==(const QuatMatrix&, const QuatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Quaternion> entries_;
};

QuatMatrix operator+(QuatMatrix a, const QuatMatrix& b);
QuatMatrix operator-(QuatMatrix a, const QuatMatrix& b);
QuatMatrix operator-(QuatMatrix a);
QuatMatrix operator*(QuatMatrix a, double s);
QuatMatrix operator*(double s, QuatMatrix a);
/// Left multiplication of every entry by a quaternion scalar.
QuatMatrix operator*(const Quaternion& q, QuatMatrix a);
QuatMatrix operator*(QuatMatrix a, const Quaternion& q);

/// Matrix product; throws DimensionMismatch when A.cols != B.rows.
QuatMatrix matmul(const QuatMatrix& a, const QuatMatrix& b);
QuatMatrix operator*(const QuatMatrix& a, const QuatMatrix& b);

/// Conjugate transpose.
QuatMatrix adjoint(const QuatMatrix& m);

Quaternion trace(const QuatMatrix& m);

double max_abs_diff(const QuatMatrix& a, const QuatMatrix& b);
double max_abs(const QuatMatrix& m);
/// Maximum column sum of entry norms.
double norm1(const QuatMatrix& m);
double frobenius_sq(const QuatMatrix& m);

/// 2r x 2c complex matrix with every entry replaced by its m(C^2) block.
Eigen::MatrixXcd embed(const QuatMatrix& m);
/// Inverse of embed; rejects blocks off the quaternionic structure by more than tol.
QuatMatrix from_embedding(const Eigen::MatrixXcd& e, double tol = 1e-9);

/// Matrix exponential by scaling and squaring (Taylor order 18, scaled
/// until ||M||_1 < 0.5). Throws NonSquare.
QuatMatrix exp(const QuatMatrix& m);

/// Inverse through the complex embedding. Throws SingularMatrix when the
/// embedded condition number exceeds `max_condition`.
QuatMatrix inverse(const QuatMatrix& m, double max_condition = 1e12);

bool is_hyperhermitian(const QuatMatrix& m, double tol = 1e-10);
bool is_skew_adjoint(const QuatMatrix& m, double tol = 1e-10);

/// The n real eigenvalues of an n x n hyper-Hermitian matrix, ascending.
/// Computed from the 2n x 2n embedding whose spectrum is every eigenvalue
/// twice; throws PairingFailure if the doubled spectrum does not pair
/// within `pair_tol` (relative to max(1, |lambda|max)).
std::vector<double> eigvals_hyperhermitian(const QuatMatrix& p, double pair_tol = 1e-8);

enum class ScalarFunction {
  SinSqrt,   // sin(sqrt(x))
  CosSqrt,   // cos(sqrt(x))
  SincSqrt,  // sin(sqrt(x)) / sqrt(x), continued by 1 at x = 0
  InvSqrt,   // x^(-1/2)
  Sqrt,      // x^(1/2)
};

/// f(P) for hyper-Hermitian P via the eigendecomposition of its embedding.
/// Throws NotHyperHermitian; SingularInvSqrt when InvSqrt meets an
/// eigenvalue <= tol.
QuatMatrix func_hermitian(const QuatMatrix& p, ScalarFunction f, double tol = 1e-10);

/// A member of Sp(n) = U(n, H): adjoint(g) g = 1.
class GroupElement {
 public:
  /// Throws NonSquare or NotGroupElement.
  explicit GroupElement(QuatMatrix g, double tol = 1e-10);

  const QuatMatrix& matrix() const noexcept { return g_; }
  std::size_t size() const noexcept { return g_.rows(); }

  GroupElement inverse() const;
  friend GroupElement operator*(const GroupElement& a, const GroupElement& b);

 private:
  struct Unchecked {};
  GroupElement(QuatMatrix g, Unchecked) : g_(std::move(g)) {}

  QuatMatrix g_;
};

/// ||adjoint(g) g - 1||_max.
double unitarity_residual(const QuatMatrix& g);

/// Permutation taking the interleaved embedding order (1_n (x) j) to the
/// block order (j (x) 1_n): embedded index 2r+s goes to s*n+r.
Eigen::MatrixXcd interleave_to_block(const Eigen::MatrixXcd& e);

/// j (x) 1_n, the standard complex symplectic form on C^{2n}.
Eigen::MatrixXcd symplectic_form(std::size_t n);

/// The permuted Sp(2n, C) image of g. Satisfies G' J G = J and G* G = 1.
Eigen::MatrixXcd to_sp2nc(const GroupElement& g);

}  // namespace sympflag
