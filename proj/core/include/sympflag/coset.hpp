#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "sympflag/quatmat.hpp"

namespace sympflag::coset {

/// Exponential coordinates xi (j x k) of Sp(j+k)/Sp(j) x Sp(k) together
/// with the blocks of exp([[0, xi], [-xi*, 0]]).
struct CosetParam {
  QuatMatrix xi;
  QuatMatrix z;          // sinc(sqrt(xi xi*)) xi, j x k
  QuatMatrix cos_left;   // cos(sqrt(xi xi*)) = (1 - Z Z*)^(1/2), j x j
  QuatMatrix cos_right;  // cos(sqrt(xi* xi)) = (1 - Z* Z)^(1/2), k x k
};

CosetParam coset_param(const QuatMatrix& xi);

/// [[0, xi], [-xi*, 0]].
QuatMatrix skew_embedding(const QuatMatrix& xi);

/// [[cos_left, Z], [-Z*, cos_right]] assembled from spectral functions.
GroupElement coset_element(const QuatMatrix& xi);

/// Inhomogeneous Grassmannian coordinates; X is j x k.
struct GrassmannPoint {
  QuatMatrix x;

  std::size_t j() const noexcept { return x.rows(); }
  std::size_t k() const noexcept { return x.cols(); }

  /// X = Z (1 - Z*Z)^(-1/2). Throws SingularInvSqrt at the cut locus.
  static GrassmannPoint from_coset(const CosetParam& p);
};

struct Blocks {
  QuatMatrix a;  // j x j
  QuatMatrix b;  // j x k
  QuatMatrix c;  // k x j
  QuatMatrix d;  // k x k
};

/// Conforming partition of g for a j x k Grassmannian. Throws ShapeMismatch.
Blocks partition(const GroupElement& g, std::size_t j);

/// Y = (AX + B)(CX + D)^-1. Throws SingularDenominator.
GrassmannPoint lft_apply(const GroupElement& g, const GrassmannPoint& x);
/// Y = (-XB* + A*)^-1 (XD* - C*). Throws SingularDenominator.
GrassmannPoint lft_apply_adjoint_form(const GroupElement& g, const GrassmannPoint& x);

/// Max entrywise |lhs - rhs| of the four transport identities relating
/// Ya = g Xa and Yb = g Xb.
struct TransportResiduals {
  double outer = 0.0;       // 1 + Ya Yb*
  double inner = 0.0;       // 1 + Ya* Yb
  double diff_right = 0.0;  // Ya - Yb with (C Xb + D)^-1 on the right
  double diff_left = 0.0;   // Ya - Yb with (C Xa + D)^-1 on the right

  double max() const;
};

TransportResiduals transport_identities(const GroupElement& g, const GrassmannPoint& xa,
                                        const GrassmannPoint& xb);

/// Re tr[(Ya-Yb)(Yc-Yb)^-1 (Yc-Yd)(Ya-Yd)^-1]. Requires square points;
/// throws ShapeMismatch, DegenerateQuadruple.
double cross_ratio(const GrassmannPoint& ya, const GrassmannPoint& yb, const GrassmannPoint& yc,
                   const GrassmannPoint& yd);

/// Full quaternion trace tr[(1+XX*)^-1 dX (1+X*X)^-1 dX*].
Quaternion metric_trace(const GrassmannPoint& x, const QuatMatrix& dx);
/// ds^2: the scalar part of metric_trace. Throws ShapeMismatch.
double metric_form(const GrassmannPoint& x, const QuatMatrix& dx);
/// ds^2 via (1+X*X)^-1 = 1 - X*(1+XX*)^-1 X.
double metric_form_expanded(const GrassmannPoint& x, const QuatMatrix& dx);
/// ds^2 = Tr(w12 w12*) with w12 = A* dX D for the section A = (1+XX*)^(-1/2),
/// D = (1+X*X)^(-1/2).
double metric_form_connection(const GrassmannPoint& x, const QuatMatrix& dx);

/// Central difference of lft_apply along dx.
QuatMatrix pushforward(const GroupElement& g, const GrassmannPoint& x, const QuatMatrix& dx,
                       double step = 1e-6);

/// |ds^2(X, dX) - ds^2(gX, g_* dX)|.
double metric_invariance_check(const GroupElement& g, const GrassmannPoint& x,
                               const QuatMatrix& dx);

/// 1x1 case: |ds^2(q, dq) - ds^2(q^-1, -q^-1 dq q^-1)|.
double inversion_invariance_check(const Quaternion& q, const Quaternion& dq);

struct TracePair {
  double lhs = 0.0;
  double rhs = 0.0;
};

/// Embedding traces: lhs = tr[(1+Q*Q)^-1], rhs = 2(n-k) + tr[(1+QQ*)^-1].
/// Q is k x n. Throws ShapeMismatch.
TracePair curvature_trace(const QuatMatrix& q, std::size_t n, std::size_t k);

struct CurvatureDet {
  double value = 0.0;            // det(1+QQ*)^-(k+n), from paired eigenvalues
  double embedding_value = 0.0;  // same, from sqrt(det embed(1+QQ*))
};

/// Throws ShapeMismatch, PairingFailure.
CurvatureDet curvature_det(const QuatMatrix& q, std::size_t n, std::size_t k);

enum class Sigma {
  Trivial,      // sigma(eta) = 1
  Fundamental,  // componentwise left multiplication by the diagonal of eta
};

using Alpha = std::function<std::vector<Quaternion>(const GroupElement&)>;

/// Diagonal element of Sp(1)^n built from unit quaternions.
GroupElement fiber_element(const std::vector<Quaternion>& units);

std::vector<Quaternion> apply_sigma(Sigma sigma, const std::vector<Quaternion>& units,
                                    const std::vector<Quaternion>& v);

struct HaarEstimate {
  std::vector<Quaternion> mean;
  double std_error = 0.0;  // largest per-component standard error of the mean
};

/// Monte-Carlo f(x) = E[sigma(eta) alpha(x eta)] over eta uniform on Sp(1)^n.
HaarEstimate haar_average(const Alpha& alpha, Sigma sigma, const GroupElement& x,
                          std::size_t samples, std::uint64_t seed);

}  // namespace sympflag::coset
