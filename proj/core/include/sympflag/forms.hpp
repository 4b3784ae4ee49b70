#pragma once

#include <array>
#include <functional>
#include <utility>
#include <vector>

#include "sympflag/quatmat.hpp"

namespace sympflag::forms {

/// sum_r c_r dx_r with matrix-valued coefficients over `dim` real base
/// differentials. Quaternion-valued forms use 1x1 coefficients.
class OneForm {
 public:
  OneForm(std::size_t dim, std::size_t rows, std::size_t cols);
  explicit OneForm(std::vector<QuatMatrix> coeffs);

  std::size_t dim() const noexcept { return coeffs_.size(); }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  QuatMatrix& operator[](std::size_t r) { return coeffs_[r]; }
  const QuatMatrix& operator[](std::size_t r) const { return coeffs_[r]; }

  /// Contraction with a tangent vector of length dim.
  QuatMatrix evaluate(const std::vector<double>& v) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<QuatMatrix> coeffs_;
};

/// Coefficient-wise adjoint.
OneForm adjoint(const OneForm& a);
/// Coefficient-wise left / right multiplication by fixed matrices.
OneForm operator*(const QuatMatrix& m, const OneForm& a);
OneForm operator*(const OneForm& a, const QuatMatrix& m);

/// sum_{r<s} c_rs dx_r ^ dx_s; only r < s is stored.
class TwoForm {
 public:
  TwoForm(std::size_t dim, std::size_t rows, std::size_t cols);

  std::size_t dim() const noexcept { return dim_; }

  /// Coefficient of dx_r ^ dx_s for r < s.
  QuatMatrix& at(std::size_t r, std::size_t s);
  const QuatMatrix& at(std::size_t r, std::size_t s) const;

  /// Omega(u, v) = sum_{r<s} c_rs (u_r v_s - u_s v_r).
  QuatMatrix evaluate(const std::vector<double>& u, const std::vector<double>& v) const;

 private:
  std::size_t index(std::size_t r, std::size_t s) const;

  std::size_t dim_ = 0;
  std::vector<QuatMatrix> coeffs_;
};

/// (a ^ b)_rs = a_r b_s - a_s b_r, products in that order.
TwoForm wedge(const OneForm& a, const OneForm& b);

/// dY = dy0 e + dy1 i + dy2 j + dy3 k over four base differentials.
OneForm quaternion_differential();

struct DualPair {
  TwoForm self_dual;       // dY ^ dY*
  TwoForm anti_self_dual;  // dY* ^ dY
};

DualPair dy_wedge();

/// Real 2-form on R^4 in the basis (01, 02, 03, 12, 13, 23).
using RealTwoForm = std::array<double, 6>;

inline constexpr std::array<std::pair<int, int>, 6> kTwoFormBasis{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

/// The real 2-form multiplying basis element e_r in a 1x1 four-dimensional TwoForm.
RealTwoForm component(const TwoForm& f, int r);

/// Euclidean Hodge star on 2-forms of R^4, orientation dx0^dx1^dx2^dx3.
RealTwoForm hodge_star(const RealTwoForm& f);

/// w = g* dg/dt split into blocks for a j x k partition.
struct ConnectionBlocks {
  QuatMatrix w11;
  QuatMatrix w12;
  QuatMatrix w21;
  QuatMatrix w22;
};

using GroupPath = std::function<GroupElement(double)>;
using GroupSurface = std::function<GroupElement(double, double)>;

ConnectionBlocks connection_blocks(const GroupPath& path, double t, std::size_t j,
                                   double step = 1e-6);

/// Blockwise max |dw + w ^ w| on (d/ds, d/dt) for a two-parameter family.
std::array<double, 4> maurer_cartan_residual(const GroupSurface& surface, double s, double t,
                                             std::size_t j, double step = 1e-4);

/// Flatten a j x k tangent direction to R^{4jk}: index (row*k + col)*4 + component.
std::vector<double> flatten(const QuatMatrix& dy);
QuatMatrix unflatten(const std::vector<double>& v, std::size_t rows, std::size_t cols);

/// w12 = A* dY D at Y for the section A = (1+YY*)^(-1/2), D = (1+Y*Y)^(-1/2),
/// as a one-form over the 4jk real coordinates of Y.
OneForm omega12(const QuatMatrix& y);

struct CurvatureBlocks {
  QuatMatrix omega11;  // w12 ^ w12*, j x j
  QuatMatrix omega22;  // w12* ^ w12, k x k
  Quaternion r11;      // tr[dY (1+Y*Y)^-1 ^ dY* (1+YY*)^-1]
  Quaternion r22;      // tr[dY* (1+YY*)^-1 ^ dY (1+Y*Y)^-1]
};

/// Curvature pieces at Y evaluated on the direction pair (dy1, dy2).
CurvatureBlocks curvature_blocks(const QuatMatrix& y, const QuatMatrix& dy1,
                                 const QuatMatrix& dy2);

struct CurvatureMagnitudes {
  double omega11_sq = 0.0;  // sum over coordinate pairs of ||Omega11||_F^2
  double omega22_sq = 0.0;
  double r11_scalar = 0.0;  // sum of |Re R11|
  double r22_scalar = 0.0;
};

CurvatureMagnitudes curvature_magnitudes(const QuatMatrix& y);

}  // namespace sympflag::forms
