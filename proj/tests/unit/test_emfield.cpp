#include <doctest.h>

#include "error_check.hpp"
#include "oracles.hpp"
#include "sympflag/emfield.hpp"
#include "sympflag/random.hpp"

using namespace sympflag;
using namespace sympflag::em;

namespace {

RealPoly x(int i) { return RealPoly::variable(i); }

// Numerical partial derivative of a polynomial; exact for degree <= 4.
double dnum(const RealPoly& p, std::array<double, 4> at, int i) {
  auto central = [&](double h) {
    auto a = at, b = at;
    a[static_cast<std::size_t>(i)] += h;
    b[static_cast<std::size_t>(i)] -= h;
    return (p.evaluate(a) - p.evaluate(b)) / (2 * h);
  };
  return (4 * central(0.05) - central(0.1)) / 3;
}

}  // namespace

TEST_SUITE("emfield") {

TEST_CASE("polynomial arithmetic") {
  auto p = x(0) * x(1) + Rational(2) * x(1) * x(1) * x(3);
  CHECK(p.degree() == 3);
  CHECK(p.derivative(1) == x(0) + Rational(4) * x(1) * x(3));
  CHECK(p.evaluate({1, 2, 3, 4}) == doctest::Approx(2 + 32));
  CHECK(to_string(Rational(-1) * x(0) + Rational(2) * x(1) * x(1) * x(3)) == "2*x1^2*x3 - x0");
}

TEST_CASE("parser") {
  CHECK(parse_poly("x0*x3 - 2*x1^2") == x(0) * x(3) - Rational(2) * x(1) * x(1));
  CHECK(parse_poly("(x1 + 1)^2") == x(1) * x(1) + Rational(2) * x(1) + RealPoly(Rational(1)));
  CHECK(parse_poly("3/4*x2") == Rational(3, 4) * x(2));
  auto f = parse_field("A1=-x2; A2=x1");
  CHECK(f.a[1] == -x(2));
  CHECK(f.a[2] == x(1));
  CHECK(f.a[0].is_zero());
  CHECK_ERROR_KIND(parse_poly("x7"), ErrorKind::ParseError);
  CHECK_ERROR_KIND(parse_poly("x1 +"), ErrorKind::ParseError);
  CHECK_ERROR_KIND(parse_field("B1=x1"), ErrorKind::ParseError);
}

TEST_CASE("zero and constant fields") {
  QPolyField zero;
  CHECK(apply_pstar(zero) == zero);
  QPolyField c;
  for (int r = 0; r < 4; ++r) c.a[static_cast<std::size_t>(r)] = RealPoly(Rational(r + 1));
  auto d = decompose(c);
  CHECK(d.scalar.is_zero());
  for (int i = 0; i < 3; ++i) {
    CHECK(d.e[static_cast<std::size_t>(i)].is_zero());
    CHECK(d.b[static_cast<std::size_t>(i)].is_zero());
  }
}

TEST_CASE("rotation potential has a uniform B") {
  auto d = decompose(parse_field("A1=-x2; A2=x1"));
  CHECK(d.b[0].is_zero());
  CHECK(d.b[1].is_zero());
  CHECK(d.b[2] == RealPoly(Rational(2)));
  for (const auto& e : d.e) CHECK(e.is_zero());
}

TEST_CASE("A0 = x0 x3") {
  auto d = decompose(parse_field("A0=x0*x3"));
  CHECK(d.e[0].is_zero());
  CHECK(d.e[1].is_zero());
  CHECK(d.e[2] == -x(0));
  CHECK(d.scalar == x(3));
}

TEST_CASE("decomposition against numerical derivatives") {
  Rng rng(61);
  const std::array<double, 4> at{0.3, -0.7, 1.1, 0.4};
  for (int t = 0; t < 20; ++t) {
    auto f = random_field(rng, 3);
    auto d = decompose(f);
    double div = 0;
    for (int i = 1; i <= 3; ++i) div += dnum(f.a[static_cast<std::size_t>(i)], at, i);
    CHECK(d.scalar.evaluate(at) == doctest::Approx(dnum(f.a[0], at, 0) - div).epsilon(1e-9));
    for (int i = 1; i <= 3; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      const double e = -dnum(f.a[ui], at, 0) - dnum(f.a[0], at, i);
      CHECK(d.e[ui - 1].evaluate(at) == doctest::Approx(e).epsilon(1e-9));
      const int j = i % 3 + 1, k = (i + 1) % 3 + 1;
      const double b = dnum(f.a[static_cast<std::size_t>(k)], at, j) -
                       dnum(f.a[static_cast<std::size_t>(j)], at, k);
      CHECK(d.b[ui - 1].evaluate(at) == doctest::Approx(b).epsilon(1e-9));
    }
    // Scalar-vector split of the left-acting operator.
    auto ps = apply_pstar(f);
    CHECK(ps.a[0] == d.scalar);
    for (std::size_t i = 0; i < 3; ++i) CHECK(ps.a[i + 1] == d.b[i] - d.e[i]);
  }
}

TEST_CASE("quaternion product identity") {
  CHECK(quaternion_product_identity(Quaternion::i(), Quaternion::j()) < 1e-15);
  Rng rng(62);
  for (int t = 0; t < 100; ++t)
    CHECK(quaternion_product_identity(random_quaternion(rng), random_quaternion(rng)) < 1e-13);
}

}
