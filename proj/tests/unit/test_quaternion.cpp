#include <doctest.h>

#include <random>

#include "error_check.hpp"
#include "oracles.hpp"
#include "sympflag/errors.hpp"
#include "sympflag/quaternion.hpp"
#include "sympflag/random.hpp"

using namespace sympflag;

TEST_SUITE("quaternion") {

TEST_CASE("basis products") {
  CHECK(Quaternion::i() * Quaternion::j() == Quaternion::k());
  CHECK(Quaternion::j() * Quaternion::k() == Quaternion::i());
  CHECK(Quaternion::k() * Quaternion::i() == Quaternion::j());
  CHECK(Quaternion::j() * Quaternion::i() == -Quaternion::k());
  CHECK(Quaternion::i() * Quaternion::i() == Quaternion(-1.0));
}

TEST_CASE("identity element") {
  Rng rng(1);
  for (int t = 0; t < 20; ++t) {
    auto q = random_quaternion(rng);
    CHECK(Quaternion::e() * q == q);
    CHECK(q * Quaternion::e() == q);
  }
}

TEST_CASE("(1+i)(1+j) against the scalar-vector formula") {
  const Quaternion a{1, 1, 0, 0}, b{1, 0, 1, 0};
  const auto got = a * b;
  const auto want = oracle::sv_product(oracle::comps(a), oracle::comps(b));
  CHECK(got == Quaternion(want[0], want[1], want[2], want[3]));
  CHECK(got == Quaternion(1, 1, 1, 1));
}

TEST_CASE("random products match the scalar-vector formula") {
  Rng rng(7);
  for (int t = 0; t < 1000; ++t) {
    auto a = random_quaternion(rng), b = random_quaternion(rng);
    auto p = a * b;
    auto o = oracle::sv_product(oracle::comps(a), oracle::comps(b));
    for (int r = 0; r < 4; ++r) CHECK(p[r] == doctest::Approx(o[r]).epsilon(1e-14));
  }
}

TEST_CASE("conjugate and norm") {
  CHECK(conj(Quaternion::e()) == Quaternion::e());
  CHECK(conj(Quaternion{1, 2, 3, 4}) == Quaternion{1, -2, -3, -4});
  CHECK(norm_sq(Quaternion{}) == 0.0);
  CHECK(norm_sq(Quaternion{1, 1, 1, 1}) == 4.0);
  Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    auto a = random_quaternion(rng), b = random_quaternion(rng);
    CHECK(max_abs_diff(conj(a * b), conj(b) * conj(a)) < 1e-14);
    CHECK(norm(a * b) == doctest::Approx(norm(a) * norm(b)).epsilon(1e-13));
    CHECK(max_abs_diff(a * inverse(a), Quaternion::e()) < 1e-13);
  }
}

TEST_CASE("m(C^2) image") {
  auto mi = to_m2c(Quaternion::i());
  CHECK(mi == M2C{{0, 0}, {1, 0}, {-1, 0}, {0, 0}});
  CHECK(to_m2c(Quaternion::e()) == M2C{{1, 0}, {0, 0}, {0, 0}, {1, 0}});
  CHECK(j_conjugate(to_m2c(Quaternion::e())) == to_m2c(Quaternion::e()));

  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    auto a = random_quaternion(rng), b = random_quaternion(rng);
    // Oracle image built directly with Eigen.
    Eigen::Matrix2cd ea = oracle::pauli_image(a), eb = oracle::pauli_image(b);
    Eigen::Matrix2cd eab = ea * eb;
    auto m = to_m2c(a * b);
    CHECK(std::abs(m.r11 - eab(0, 0)) < 1e-12);
    CHECK(std::abs(m.r12 - eab(0, 1)) < 1e-12);
    CHECK(std::abs(m.r21 - eab(1, 0)) < 1e-12);
    CHECK(std::abs(m.r22 - eab(1, 1)) < 1e-12);
    CHECK(std::abs(det(to_m2c(a)) - ea.determinant()) < 1e-12);
    CHECK(det(to_m2c(a)).real() == doctest::Approx(norm_sq(a)));
    CHECK(max_abs_diff(from_m2c(to_m2c(a)), a) == 0.0);
    // Entrywise conjugate of the image.
    auto jc = j_conjugate(to_m2c(a));
    CHECK(std::abs(jc.r11 - std::conj(ea(0, 0))) < 1e-15);
    CHECK(std::abs(jc.r12 - std::conj(ea(0, 1))) < 1e-15);
  }
}

TEST_CASE("malformed m(C^2) rejected") {
  M2C bad{{1, 0}, {0, 0}, {0, 0}, {2, 0}};
  CHECK_ERROR_KIND(from_m2c(bad), ErrorKind::MalformedM2C);
}

}
