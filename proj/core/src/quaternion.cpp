#include "sympflag/quaternion.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include "sympflag/errors.hpp"

namespace sympflag {

double norm(const Quaternion& q) { return std::sqrt(norm_sq(q)); }

Quaternion inverse(const Quaternion& q) {
  const double n2 = norm_sq(q);
  if (n2 == 0.0) throw Error(ErrorKind::SingularMatrix, "inverse of the zero quaternion");
  return conj(q) / n2;
}

double max_abs_diff(const Quaternion& a, const Quaternion& b) {
  return std::max({std::abs(a.w - b.w), std::abs(a.x - b.x), std::abs(a.y - b.y),
                   std::abs(a.z - b.z)});
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << '(' << q.w << ", " << q.x << ", " << q.y << ", " << q.z << ')';
}

M2C operator*(const M2C& a, const M2C& b) {
  return {a.r11 * b.r11 + a.r12 * b.r21, a.r11 * b.r12 + a.r12 * b.r22,
          a.r21 * b.r11 + a.r22 * b.r21, a.r21 * b.r12 + a.r22 * b.r22};
}

M2C operator+(const M2C& a, const M2C& b) {
  return {a.r11 + b.r11, a.r12 + b.r12, a.r21 + b.r21, a.r22 + b.r22};
}

Complex det(const M2C& m) { return m.r11 * m.r22 - m.r12 * m.r21; }

double max_abs_diff(const M2C& a, const M2C& b) {
  return std::max({std::abs(a.r11 - b.r11), std::abs(a.r12 - b.r12), std::abs(a.r21 - b.r21),
                   std::abs(a.r22 - b.r22)});
}

M2C to_m2c(const Quaternion& q) {
  return {Complex(q.w, q.z), Complex(q.x, q.y), Complex(-q.x, q.y), Complex(q.w, -q.z)};
}

Quaternion from_m2c(const M2C& m, double tol) {
  const double structure =
      std::max(std::abs(m.r22 - std::conj(m.r11)), std::abs(m.r21 + std::conj(m.r12)));
  if (!(structure <= tol)) {
    std::ostringstream msg;
    msg << "quaternionic structure residual " << structure << " exceeds " << tol;
    throw Error(ErrorKind::MalformedM2C, msg.str());
  }
  // Orthogonal projection onto the quaternionic subspace; exact on exact images.
  return {(m.r11.real() + m.r22.real()) / 2, (m.r12.real() - m.r21.real()) / 2,
          (m.r12.imag() + m.r21.imag()) / 2, (m.r11.imag() - m.r22.imag()) / 2};
}

M2C j_conjugate(const M2C& m) {
  // j' m j with j = [[0,1],[-1,0]]
  return {m.r22, -m.r21, -m.r12, m.r11};
}

}  // namespace sympflag
