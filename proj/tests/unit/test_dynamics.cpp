#include <doctest.h>

#include <cmath>
#include <numbers>

#include "error_check.hpp"
#include "oracles.hpp"
#include "sympflag/dynamics.hpp"
#include "sympflag/random.hpp"

using namespace sympflag;
using namespace sympflag::dynamics;

namespace {

StateVector random_state(Rng& rng, std::size_t n, std::size_t split) {
  StateVector s;
  for (std::size_t i = 0; i < n; ++i) s.components.push_back(random_quaternion(rng));
  s.split = split;
  return s;
}

}  // namespace

TEST_SUITE("dynamics") {

TEST_CASE("evolution conserves the norm") {
  Rng rng(71);
  auto gen = random_skew_adjoint(rng, 4);
  auto psi = random_state(rng, 4, 1);
  auto same = evolve(gen, psi, 0.0);
  for (std::size_t i = 0; i < 4; ++i) CHECK(max_abs_diff(same.components[i], psi.components[i]) == 0.0);
  for (double t = 0; t <= 10.0; t += 0.5)
    CHECK(std::abs(evolve(gen, psi, t).norm_sq() - psi.norm_sq()) < 1e-9);
  // Oracle: embedded exp times the embedded column.
  auto e = oracle::exp_reference(oracle::embed(gen) * 1.7);
  auto want = oracle::unembed(e * oracle::embed(as_column(psi)));
  auto got = evolve(gen, psi, 1.7);
  for (std::size_t i = 0; i < 4; ++i) CHECK(max_abs_diff(got.components[i], want(i, 0)) < 1e-11);
}

TEST_CASE("cocycle and time reversal") {
  Rng rng(72);
  auto gen = random_skew_adjoint(rng, 3);
  CHECK(cocycle_check(gen, 2.7, 0.0) < 1e-14);
  CHECK(cocycle_check(gen, 2.7, 2.7) < 1e-14);
  CHECK(cocycle_check(gen, 2.7, 1.3) < 1e-9);
  CHECK(time_reversal_check(gen, 4.2) < 1e-11);
  CHECK_ERROR_KIND(time_reversal_check(random_matrix(rng, 3, 3), 1.0), ErrorKind::NotSkewAdjoint);
  CHECK_ERROR_KIND(cocycle_check(random_matrix(rng, 3, 3), 1.0, 0.5), ErrorKind::NotSkewAdjoint);
}

TEST_CASE("geodesic block") {
  CHECK(max_abs_diff(geodesic_block(Quaternion::e(), 2.0, 0.0).matrix(), QuatMatrix::identity(2)) == 0.0);
  QuatMatrix quarter{{Quaternion{}, Quaternion::e()}, {-Quaternion::e(), Quaternion{}}};
  CHECK(max_abs_diff(geodesic_block(Quaternion::e(), 1.0, std::numbers::pi / 2).matrix(), quarter) <
        1e-15);
  Rng rng(73);
  for (int t = 0; t < 10; ++t) {
    auto u = random_unit_quaternion(rng);
    const double w = 0.9, time = 3.1;
    QuatMatrix gen{{Quaternion{}, u}, {-conj(u), Quaternion{}}};
    CHECK(max_abs_diff(geodesic_block(u, w, time).matrix(), exp(gen * (w * time))) < 1e-10);
    CHECK(max_abs_diff(geodesic_block(u, w, time).matrix(),
                       geodesic_block(u, w, time + 2 * std::numbers::pi / w).matrix()) < 1e-12);
  }
  CHECK_ERROR_KIND(geodesic_block(Quaternion{1, 1, 0, 0}, 1.0, 1.0), ErrorKind::NotUnitQuaternion);
}

TEST_CASE("transition split") {
  Rng rng(74);
  auto psi = random_state(rng, 3, 1);
  auto gen = random_skew_adjoint(rng, 3);
  auto sp = transition_split(gen, psi);
  auto full = gen * as_column(psi);
  for (std::size_t i = 0; i < 3; ++i) {
    auto sum = sp.system_rotation[i] + sp.surroundings_rotation[i] + sp.exchange_in[i] +
               sp.exchange_out[i];
    CHECK(max_abs_diff(sum, full(i, 0)) < 1e-12);
  }
  QuatMatrix diag = gen;
  diag(0, 1) = diag(0, 2) = diag(1, 0) = diag(2, 0) = Quaternion{};
  auto d = transition_split(diag, psi);
  for (std::size_t i = 0; i < 3; ++i) CHECK(norm_sq(d.exchange_in[i]) + norm_sq(d.exchange_out[i]) == 0.0);
  QuatMatrix off = gen - diag;
  auto o = transition_split(off, psi);
  for (std::size_t i = 0; i < 3; ++i)
    CHECK(norm_sq(o.system_rotation[i]) + norm_sq(o.surroundings_rotation[i]) == 0.0);
  psi.split = 4;
  CHECK_ERROR_KIND(transition_split(gen, psi), ErrorKind::PartitionMismatch);
}

TEST_CASE("trajectory rows") {
  Rng rng(75);
  auto gen = random_skew_adjoint(rng, 3);
  auto psi = random_state(rng, 3, 1);
  auto rows = trajectory(gen, psi, 10.0, 20);
  REQUIRE(rows.size() == 21);
  CHECK(rows.back().t == 10.0);
  for (const auto& r : rows) {
    CHECK(std::abs(r.norm_sq - psi.norm_sq()) < 1e-9);
    CHECK(r.system_norm_sq + r.surroundings_norm_sq == doctest::Approx(r.norm_sq));
  }
}

}
