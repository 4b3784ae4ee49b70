#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

#include "sympflag/quaternion.hpp"
#include "sympflag/random.hpp"

namespace sympflag::em {

using Rational = boost::rational<long long>;
using Exponents = std::array<int, 4>;  // powers of x0..x3

/// Exact polynomial in the real coordinates x0 (cyclic time), x1, x2, x3.
class RealPoly {
 public:
  RealPoly() = default;
  explicit RealPoly(Rational c);

  static RealPoly variable(int i);

  const std::map<Exponents, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  int degree() const;

  void add_term(const Exponents& e, const Rational& c);
  RealPoly& operator+=(const RealPoly& o);
  RealPoly& operator-=(const RealPoly& o);

  RealPoly derivative(int i) const;
  double evaluate(const std::array<double, 4>& x) const;

  friend bool operator==(const RealPoly&, const RealPoly&) = default;

 private:
  std::map<Exponents, Rational> terms_;
};

RealPoly operator+(RealPoly a, const RealPoly& b);
RealPoly operator-(RealPoly a, const RealPoly& b);
RealPoly operator-(const RealPoly& a);
RealPoly operator*(const RealPoly& a, const RealPoly& b);
RealPoly operator*(const Rational& c, const RealPoly& a);

std::string to_string(const RealPoly& p);

/// psi = A0 e + A1 i + A2 j + A3 k.
struct QPolyField {
  std::array<RealPoly, 4> a;

  friend bool operator==(const QPolyField&, const QPolyField&) = default;
};

QPolyField operator+(const QPolyField& x, const QPolyField& y);
QPolyField operator*(const Rational& c, const QPolyField& x);

/// (d0 + i d1 + j d2 + k d3) psi, the operator acting from the left.
QPolyField apply_pstar(const QPolyField& psi);

struct FieldDecomposition {
  RealPoly scalar;            // A0,0 - div A
  std::array<RealPoly, 3> e;  // -A,0 - grad A0
  std::array<RealPoly, 3> b;  // curl A
};

/// Componentwise formulas, cross-checked against apply_pstar on every call
/// (scalar part equal to `scalar`, vector part equal to -E + B); a mismatch
/// throws std::logic_error.
FieldDecomposition decompose(const QPolyField& psi);

/// max |v w - [(v0 w0 - v.w) + (v0 w + w0 v + v x w)]|.
double quaternion_product_identity(const Quaternion& v, const Quaternion& w);

/// Parses "A1=x1", "A0=x0*x3 - 2*x1^2", ... ; several specs separated by ';'
/// or given as separate calls accumulate. Throws ParseError.
void parse_component(std::string_view spec, QPolyField& into);
QPolyField parse_field(std::string_view specs);
RealPoly parse_poly(std::string_view text);

/// Random field with small integer coefficients and total degree <= max_degree.
QPolyField random_field(Rng& rng, int max_degree);

}  // namespace sympflag::em
