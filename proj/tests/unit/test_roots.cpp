#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

#include "error_check.hpp"
#include "sympflag/roots.hpp"

using namespace sympflag::roots;
using sympflag::ErrorKind;

namespace {

// Roots of C_n: integer vectors with sum |e_i| = 2 (either one entry +-2
// or two entries +-1).
std::set<Root> brute_force_roots(int n) {
  std::set<Root> out;
  Root r(static_cast<std::size_t>(n), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == r.size()) {
      int l1 = 0, nz = 0;
      for (int v : r) {
        l1 += std::abs(v);
        nz += v != 0;
      }
      if (l1 == 2 && nz >= 1) out.insert(r);
      return;
    }
    for (int v = -2; v <= 2; ++v) {
      r[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace

TEST_SUITE("roots") {

TEST_CASE("counts and membership") {
  for (int n = 1; n <= 6; ++n) {
    auto rs = generate(n);
    CHECK(rs.roots.size() == static_cast<std::size_t>(2 * n * n));
    std::set<Root> got(rs.roots.begin(), rs.roots.end());
    CHECK(got.size() == rs.roots.size());
    CHECK(got == brute_force_roots(n));
  }
  auto one = generate(1);
  CHECK(std::set<Root>(one.roots.begin(), one.roots.end()) == std::set<Root>{{2}, {-2}});
  CHECK(contains(generate(3), Root{1, 0, -1}));
  CHECK_FALSE(contains(generate(3), Root{1, 1, 1}));
  CHECK_ERROR_KIND(generate(0), ErrorKind::InvalidRank);
}

TEST_CASE("embeddings") {
  CHECK(embed_check(1, 2));
  CHECK(embed_check(2, 3));
  CHECK(embed_check(3, 6));
  CHECK_ERROR_KIND(embed_check(3, 2), ErrorKind::InvalidRank);
}

TEST_CASE("particle labels") {
  auto lepton = particle_label({{{2, 0, 0}, Tag::None}});
  CHECK(lepton.cls == ParticleClass::Lepton);
  CHECK(to_string(lepton.cls) == "lepton");

  auto meson = particle_label({{{1, 1, 0}, Tag::None}});
  CHECK(meson.cls == ParticleClass::Meson);
  CHECK(meson.flavors == "ud");
}

TEST_CASE("anti labels use a combining macron") {
  auto anti = particle_label({{{-1, 1, 0}, Tag::None}});
  CHECK(anti.flavors == "u\xCC\x84" "d");
  CHECK(anti.cls == ParticleClass::Meson);
}

TEST_CASE("proton") {
  auto p = particle_label({{{1, 0, 0}, Tag::I}, {{1, 0, 0}, Tag::J}, {{0, 1, 0}, Tag::K}});
  CHECK(p.cls == ParticleClass::Baryon);
  CHECK(p.flavors == "uud");
  CHECK(p.colored == "u(i)u(j)d(k)");
  auto cs = parse_label(p.colored);
  CHECK(cs == p.constituents);
  CHECK(total_weight(cs, 3) == Root{2, 1, 0});
  CHECK_ERROR_KIND(particle_label({{{1, 1, 1, 1}, Tag::None}}), ErrorKind::UnsupportedWeightCount);
  CHECK_ERROR_KIND(parse_label("x(i)"), ErrorKind::ParseError);
}

TEST_CASE("flavor names") {
  CHECK(flavor_name(0) == "u");
  CHECK(flavor_name(3) == "c");
  CHECK(flavor_name(4) == "q5");
}

TEST_CASE("Euler characteristic") {
  CHECK(euler_characteristic(4) == 2);
  CHECK(euler_characteristic(12) == 2);
  CHECK(euler_characteristic(2) == 2);
  CHECK_ERROR_KIND(euler_characteristic(5), ErrorKind::OddDimension);
}

TEST_CASE("projections") {
  auto p = project2d({2, 0, 0});
  CHECK(std::hypot(p[0], p[1]) == doctest::Approx(2.0));
  auto q = project3d({0, -2, 0});
  CHECK(q == std::array<double, 3>{0, -2, 0});
}

}
