#include "sympflag/random.hpp"

#include <cmath>

namespace sympflag {

Quaternion random_quaternion(Rng& rng) {
  std::normal_distribution<double> n01;
  const double w = n01(rng);
  const double x = n01(rng);
  const double y = n01(rng);
  const double z = n01(rng);
  return {w, x, y, z};
}

Quaternion random_unit_quaternion(Rng& rng) {
  for (;;) {
    const Quaternion q = random_quaternion(rng);
    const double r = norm(q);
    if (r > 1e-12) return q / r;
  }
}

QuatMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, double scale) {
  QuatMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_quaternion(rng) * scale;
  return m;
}

QuatMatrix random_skew_adjoint(Rng& rng, std::size_t n, double scale) {
  const QuatMatrix a = random_matrix(rng, n, n, scale);
  return (a - adjoint(a)) * 0.5;
}

QuatMatrix random_hermitian(Rng& rng, std::size_t n, double scale) {
  const QuatMatrix a = random_matrix(rng, n, n, scale);
  return (a + adjoint(a)) * 0.5;
}

GroupElement random_group_element(Rng& rng, std::size_t n, double scale) {
  return GroupElement(exp(random_skew_adjoint(rng, n, scale)));
}

}  // namespace sympflag
