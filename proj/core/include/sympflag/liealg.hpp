#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace sympflag::liealg {

using Rational = boost::rational<long long>;

/// Exact complex number with rational parts.
struct GaussRational {
  Rational re{0};
  Rational im{0};

  GaussRational() = default;
  GaussRational(Rational r, Rational i = Rational(0)) : re(r), im(i) {}
  GaussRational(long long r) : re(r) {}  // NOLINT(google-explicit-constructor)

  bool is_zero() const { return re == Rational(0) && im == Rational(0); }
  GaussRational& operator+=(const GaussRational& o);
  GaussRational& operator-=(const GaussRational& o);
  friend bool operator==(const GaussRational&, const GaussRational&) = default;
};

GaussRational operator+(GaussRational a, const GaussRational& b);
GaussRational operator-(GaussRational a, const GaussRational& b);
GaussRational operator-(const GaussRational& a);
GaussRational operator*(const GaussRational& a, const GaussRational& b);
GaussRational conj(const GaussRational& a);
std::string to_string(const GaussRational& a);

/// Matrix dimensions: Q = (zeta_{alpha a}) is 2k x 2(n-k) complex.
/// Indices are 0-based: alpha in [0, 2k), a in [0, 2(n-k)).
struct Dims {
  int k = 1;
  int n = 2;

  int rows() const { return 2 * k; }
  int cols() const { return 2 * (n - k); }
  int num_vars() const { return rows() * cols(); }
  int var(int alpha, int a) const { return alpha * cols() + a; }
  void check() const;  // throws IndexOutOfRange unless 1 <= k < n
};

/// J = 1 (x) j with j = [[0, 1], [-1, 0]], 0-based.
int J(int i, int j);

/// Sorted multiset of variable ids (for polynomials) or derivative ids (for operators).
using Multiset = std::vector<std::uint16_t>;

/// Sparse polynomial in the zeta variables. The conjugates are not separate
/// symbols: conj(zeta_{alpha a}) = s(alpha) s(a) zeta_{alpha^ a^}, where
/// i^ = i xor 1 and s(i) = -1 for even i, +1 for odd i (the J'QJ rule).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(GaussRational c);

  static Polynomial monomial(Multiset vars, GaussRational c = 1);

  const std::map<Multiset, GaussRational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  int degree() const;

  void add_term(const Multiset& m, const GaussRational& c);
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);

  Polynomial derivative(int var) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::map<Multiset, GaussRational> terms_;
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const GaussRational& c, const Polynomial& a);

Polynomial zeta(const Dims& d, int alpha, int a);
Polynomial zeta_bar(const Dims& d, int alpha, int a);

/// sum_I c_I(zeta) d^I with d^I a product of partial derivatives.
class DiffOperator {
 public:
  DiffOperator() = default;

  const std::map<Multiset, Polynomial>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Highest derivative count present (0 for multiplication operators).
  int order() const;

  void add_term(const Multiset& derivs, const Polynomial& coeff);
  DiffOperator& operator+=(const DiffOperator& o);
  DiffOperator& operator-=(const DiffOperator& o);

  friend bool operator==(const DiffOperator&, const DiffOperator&) = default;

 private:
  std::map<Multiset, Polynomial> terms_;
};

DiffOperator operator+(DiffOperator a, const DiffOperator& b);
DiffOperator operator-(DiffOperator a, const DiffOperator& b);
DiffOperator operator*(const GaussRational& c, const DiffOperator& a);
/// Multiplication by a function on the left: f * (c d^I) = (f c) d^I.
DiffOperator operator*(const Polynomial& f, const DiffOperator& a);

DiffOperator partial(const Dims& d, int alpha, int a);
DiffOperator partial_bar(const Dims& d, int alpha, int a);

Polynomial apply(const DiffOperator& op, const Polynomial& f);
/// The operator a o b, reduced by the Leibniz rule.
DiffOperator compose(const DiffOperator& a, const DiffOperator& b);
/// [a, b] = ab - ba. Throws SecondOrderResidue when a and b are first order
/// but the second-order parts fail to cancel.
DiffOperator commutator(const DiffOperator& a, const DiffOperator& b);
/// Complex conjugate operator: zeta -> zeta-bar, d -> d-bar, coefficients conjugated.
DiffOperator conjugate(const Dims& d, const DiffOperator& a);
/// Drops coefficient monomials of degree > max_degree.
DiffOperator truncate_coefficients(const DiffOperator& a, int max_degree);

enum class GeneratorKind { h, H, p, pbar };

/// h_{ij} (i, j < 2k), H_{ij} (i, j < 2(n-k)), p_{ij} / pbar_{ij} (i < 2k, j < 2(n-k)).
/// Throws IndexOutOfRange.
DiffOperator generator(GeneratorKind kind, int i, int j, const Dims& d);

/// The two rewritten forms of p_{alpha a}.
DiffOperator p_via_H(const Dims& d, int alpha, int a);
DiffOperator p_via_h(const Dims& d, int alpha, int a);

/// All monomials of total degree <= max_degree.
std::vector<Polynomial> monomials_up_to(const Dims& d, int max_degree);

struct RelationReport {
  std::string name;
  std::size_t instances = 0;
  std::size_t symbolic_failures = 0;  // lhs != rhs as operators
  std::size_t applied_failures = 0;   // a(b f) - b(a f) != rhs f for some monomial f

  bool passed() const { return symbolic_failures == 0 && applied_failures == 0; }
};

struct TableReport {
  Dims dims;
  int max_degree = 3;
  std::size_t monomials = 0;
  std::vector<RelationReport> relations;
  /// J-convention rewrites applied to the displayed relations. The conjugation
  /// rule above makes every relation hold as written, so this stays empty.
  std::vector<std::string> substitutions;

  bool all_passed() const;
};

/// The seven commutation relations plus the generator identities (h* = -h,
/// H* = -H, symmetry of Jh and JH, the three forms of p).
TableReport verify_commutation_table(const Dims& d, int max_degree);

/// Eigenvalue of `op` on `v`; throws NotEigenvector.
GaussRational eigenvalue(const DiffOperator& op, const Polynomial& v);

struct LadderReport {
  std::size_t checked = 0;
  std::size_t vacuous = 0;  // ladder image was zero
  std::size_t failures = 0;
};

/// For each v: H_aa(p v) = (n+1) p v, h_aa(pbar v) = (n-1) pbar v, and the
/// interchanged pair h_aa(p v) = (n+1) p v, H_aa(pbar v) = (n-1) pbar v.
/// Throws NotEigenvector if some v is not a Cartan eigenvector.
LadderReport ladder_check(const Dims& d, int alpha, int a, const std::vector<Polynomial>& vs);

/// sum h h-bar + sum H H-bar + sum (p p-bar + p-bar p).
DiffOperator laplace_beltrami(const Dims& d);

std::string to_string(const Dims& d, const Polynomial& f);

}  // namespace sympflag::liealg
