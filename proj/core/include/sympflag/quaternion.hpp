#pragma once

#include <array>
#include <complex>
#include <iosfwd>

namespace sympflag {

using Complex = std::complex<double>;

/// q = w e + x i + y j + z k, with ij = k, jk = i, ki = j.
struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}
  constexpr explicit Quaternion(double real) : w(real) {}

  static constexpr Quaternion e() { return {1, 0, 0, 0}; }
  static constexpr Quaternion i() { return {0, 1, 0, 0}; }
  static constexpr Quaternion j() { return {0, 0, 1, 0}; }
  static constexpr Quaternion k() { return {0, 0, 0, 1}; }
  /// Basis element by index: 0 -> e, 1 -> i, 2 -> j, 3 -> k.
  static constexpr Quaternion basis(int r) {
    Quaternion q;
    q[r] = 1.0;
    return q;
  }

  constexpr double& operator[](int r) {
    return r == 0 ? w : r == 1 ? x : r == 2 ? y : z;
  }
  constexpr double operator[](int r) const {
    return r == 0 ? w : r == 1 ? x : r == 2 ? y : z;
  }

  constexpr double scalar() const { return w; }
  constexpr std::array<double, 3> vector() const { return {x, y, z}; }

  constexpr Quaternion& operator+=(const Quaternion& o) {
    w += o.w; x += o.x; y += o.y; z += o.z;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    w -= o.w; x -= o.x; y -= o.y; z -= o.z;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    w *= s; x *= s; y *= s; z *= s;
    return *this;
  }

  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
constexpr Quaternion operator/(Quaternion a, double s) { return a *= (1.0 / s); }

constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

inline constexpr Quaternion mul(const Quaternion& a, const Quaternion& b) { return a * b; }

constexpr Quaternion conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }

constexpr double norm_sq(const Quaternion& q) {
  return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
}

double norm(const Quaternion& q);

Quaternion inverse(const Quaternion& q);

/// Largest componentwise difference.
double max_abs_diff(const Quaternion& a, const Quaternion& b);

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

/// 2x2 complex image [[w+iz, x+iy], [-(x-iy), w-iz]].
struct M2C {
  Complex r11;
  Complex r12;
  Complex r21;
  Complex r22;

  friend bool operator==(const M2C&, const M2C&) = default;
};

M2C operator*(const M2C& a, const M2C& b);
M2C operator+(const M2C& a, const M2C& b);
Complex det(const M2C& m);
double max_abs_diff(const M2C& a, const M2C& b);

M2C to_m2c(const Quaternion& q);

/// Inverse of to_m2c. Rejects matrices whose quaternionic structure
/// (r22 = conj r11, r21 = -conj r12) is off by more than `tol`.
Quaternion from_m2c(const M2C& m, double tol = 1e-12);

/// j' m j, which for an m(C^2) image is its entrywise complex conjugate.
M2C j_conjugate(const M2C& m);

}  // namespace sympflag
