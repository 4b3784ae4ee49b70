#pragma once

#include <cstdint>
#include <random>

#include "sympflag/quatmat.hpp"

namespace sympflag {

using Rng = std::mt19937_64;

/// Components i.i.d. standard normal.
Quaternion random_quaternion(Rng& rng);
/// Uniform on S^3 (normalized Gaussian 4-vector).
Quaternion random_unit_quaternion(Rng& rng);

QuatMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, double scale = 1.0);
/// M with adjoint(M) = -M exactly.
QuatMatrix random_skew_adjoint(Rng& rng, std::size_t n, double scale = 1.0);
/// P with adjoint(P) = P exactly.
QuatMatrix random_hermitian(Rng& rng, std::size_t n, double scale = 1.0);
/// exp of a random skew-adjoint matrix.
GroupElement random_group_element(Rng& rng, std::size_t n, double scale = 1.0);

}  // namespace sympflag
