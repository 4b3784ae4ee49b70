#include <doctest.h>

#include <cmath>

#include "error_check.hpp"
#include "oracles.hpp"
#include "sympflag/quatmat.hpp"
#include "sympflag/random.hpp"

using namespace sympflag;

TEST_SUITE("quatmat") {

TEST_CASE("identity and 1x1 products") {
  Rng rng(5);
  auto m = random_matrix(rng, 3, 3);
  CHECK(QuatMatrix::identity(3) * m == m);
  QuatMatrix a{{Quaternion::i()}}, b{{Quaternion::j()}};
  CHECK(a * b == QuatMatrix{{Quaternion::k()}});
  CHECK_ERROR_KIND(random_matrix(rng, 2, 3) * random_matrix(rng, 2, 3),
                   ErrorKind::DimensionMismatch);
}

TEST_CASE("adjoint") {
  const Quaternion q{1, 2, 3, 4};
  CHECK(adjoint(QuatMatrix{{q}}) == QuatMatrix{{conj(q)}});
  CHECK(adjoint(QuatMatrix::identity(4)) == QuatMatrix::identity(4));
  Rng rng(6);
  auto a = random_matrix(rng, 2, 3), b = random_matrix(rng, 3, 4);
  CHECK(max_abs_diff(adjoint(a * b), adjoint(b) * adjoint(a)) < 1e-13);
}

TEST_CASE("embedding is a homomorphism") {
  Rng rng(8);
  for (int t = 0; t < 30; ++t) {
    auto a = random_matrix(rng, 3, 2), b = random_matrix(rng, 2, 4);
    CHECK(oracle::max_abs(embed(a) - oracle::embed(a)) == 0.0);
    CHECK(oracle::max_abs(embed(a * b) - oracle::embed(a) * oracle::embed(b)) < 1e-12);
    CHECK(oracle::max_abs(embed(adjoint(a)) - oracle::embed(a).adjoint()) == 0.0);
    CHECK(from_embedding(embed(a)) == a);
  }
}

TEST_CASE("exp of zero and of a rotation block") {
  CHECK(exp(QuatMatrix::zero(3, 3)) == QuatMatrix::identity(3));
  for (double t : {0.1, 1.0, 2.5, 7.0}) {
    QuatMatrix m{{Quaternion{}, Quaternion(t)}, {Quaternion(-t), Quaternion{}}};
    QuatMatrix want{{Quaternion(std::cos(t)), Quaternion(std::sin(t))},
                    {Quaternion(-std::sin(t)), Quaternion(std::cos(t))}};
    CHECK(max_abs_diff(exp(m), want) < 1e-13);
  }
  CHECK_ERROR_KIND(exp(QuatMatrix::zero(2, 3)), ErrorKind::NonSquare);
}

TEST_CASE("exp against a plain Taylor series of the embedding") {
  Rng rng(9);
  for (double scale : {0.1, 1.0, 3.0}) {
    for (int t = 0; t < 10; ++t) {
      auto m = random_matrix(rng, 3, 3, scale);
      auto want = oracle::exp_reference(oracle::embed(m));
      double rel = oracle::max_abs(embed(exp(m)) - want) / std::max(1.0, oracle::max_abs(want));
      CHECK(rel < 1e-11);
    }
  }
}

TEST_CASE("exp of skew-adjoint is in Sp(n)") {
  Rng rng(10);
  for (int t = 0; t < 20; ++t) {
    auto s = random_skew_adjoint(rng, 4, 2.0);
    CHECK(unitarity_residual(exp(s)) < 1e-12);
  }
}

TEST_CASE("inverse") {
  Rng rng(12);
  for (int t = 0; t < 20; ++t) {
    auto m = random_matrix(rng, 3, 3);
    CHECK(max_abs_diff(m * inverse(m), QuatMatrix::identity(3)) < 1e-9);
    CHECK(oracle::max_abs(embed(inverse(m)) - oracle::inv(oracle::embed(m))) < 1e-9);
  }
  QuatMatrix sing{{Quaternion(1), Quaternion(2)}, {Quaternion(2), Quaternion(4)}};
  CHECK_ERROR_KIND(inverse(sing), ErrorKind::SingularMatrix);
}

TEST_CASE("hyper-Hermitian spectrum") {
  auto ev = eigvals_hyperhermitian(QuatMatrix::identity(3));
  REQUIRE(ev.size() == 3);
  for (double v : ev) CHECK(v == doctest::Approx(1.0));

  Rng rng(13);
  auto p = random_hermitian(rng, 3);
  ev = eigvals_hyperhermitian(p);
  // Oracle: complex eigenvalues of the embedding, each appearing twice.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(oracle::embed(p));
  for (int i = 0; i < 3; ++i) {
    CHECK(ev[static_cast<std::size_t>(i)] == doctest::Approx(es.eigenvalues()(2 * i)).epsilon(1e-10));
    CHECK(ev[static_cast<std::size_t>(i)] == doctest::Approx(es.eigenvalues()(2 * i + 1)).epsilon(1e-10));
  }
  CHECK(trace(p).w == doctest::Approx(ev[0] + ev[1] + ev[2]));
  CHECK_ERROR_KIND(eigvals_hyperhermitian(random_matrix(rng, 3, 3)), ErrorKind::NotHyperHermitian);
}

TEST_CASE("spectral functions") {
  CHECK(max_abs_diff(func_hermitian(QuatMatrix::zero(2, 2), ScalarFunction::CosSqrt),
                     QuatMatrix::identity(2)) < 1e-15);
  Rng rng(14);
  auto a = random_matrix(rng, 3, 3);
  auto p = a * adjoint(a) + QuatMatrix::identity(3) * 0.5;
  auto s = func_hermitian(p, ScalarFunction::Sqrt);
  CHECK(max_abs_diff(s * s, p) < 1e-12);
  auto is = func_hermitian(p, ScalarFunction::InvSqrt);
  CHECK(max_abs_diff(is * s, QuatMatrix::identity(3)) < 1e-12);
  auto c = func_hermitian(p, ScalarFunction::CosSqrt);
  auto sn = func_hermitian(p, ScalarFunction::SinSqrt);
  CHECK(max_abs_diff(c * c + sn * sn, QuatMatrix::identity(3)) < 1e-12);
  // cos(sqrt P) = sum (-P)^m / (2m)!
  QuatMatrix series = QuatMatrix::identity(3), term = QuatMatrix::identity(3);
  auto q = p * (1.0 / 9.0);
  auto cq = func_hermitian(q, ScalarFunction::CosSqrt);
  for (int m = 1; m < 30; ++m) {
    term = term * q * (-1.0 / ((2.0 * m - 1) * (2.0 * m)));
    series += term;
  }
  CHECK(max_abs_diff(cq, series) < 1e-13);
  CHECK_ERROR_KIND(func_hermitian(QuatMatrix::zero(2, 2), ScalarFunction::InvSqrt),
                   ErrorKind::SingularInvSqrt);
}

TEST_CASE("group elements and the Sp(2n, C) picture") {
  CHECK(oracle::max_abs(to_sp2nc(GroupElement(QuatMatrix::identity(3))) -
                        Eigen::MatrixXcd::Identity(6, 6)) == 0.0);
  Rng rng(15);
  for (int t = 0; t < 10; ++t) {
    auto g = random_group_element(rng, 3);
    auto G = to_sp2nc(g);
    auto Jn = symplectic_form(3);
    CHECK(oracle::max_abs(G.transpose() * Jn * G - Jn) < 1e-12);
    CHECK(oracle::max_abs(G.adjoint() * G - Eigen::MatrixXcd::Identity(6, 6)) < 1e-12);
    CHECK(max_abs_diff((g * g.inverse()).matrix(), QuatMatrix::identity(3)) < 1e-12);
  }
  QuatMatrix two{{Quaternion(2)}};
  CHECK_ERROR_KIND(GroupElement{two}, ErrorKind::NotGroupElement);
}

}
