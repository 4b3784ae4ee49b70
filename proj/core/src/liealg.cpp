#include "sympflag/liealg.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <utility>

#include "sympflag/errors.hpp"

namespace sympflag::liealg {

// ---- GaussRational -------------------------------------------------------

GaussRational& GaussRational::operator+=(const GaussRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
GaussRational operator-(const GaussRational& a) { return {-a.re, -a.im}; }

GaussRational operator*(const GaussRational& a, const GaussRational& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussRational conj(const GaussRational& a) { return {a.re, -a.im}; }

std::string to_string(const GaussRational& a) {
  std::ostringstream os;
  auto put = [&os](const Rational& r) {
    os << r.numerator();
    if (r.denominator() != 1) os << '/' << r.denominator();
  };
  if (a.im == Rational(0)) {
    put(a.re);
  } else if (a.re == Rational(0)) {
    put(a.im);
    os << 'i';
  } else {
    os << '(';
    put(a.re);
    os << (a.im > 0 ? "+" : "-");
    put(a.im > 0 ? a.im : -a.im);
    os << "i)";
  }
  return os.str();
}

// ---- index conventions ---------------------------------------------------

void Dims::check() const {
  if (k < 1 || n <= k) {
    std::ostringstream msg;
    msg << "need 1 <= k < n, got k = " << k << ", n = " << n;
    throw Error(ErrorKind::IndexOutOfRange, msg.str());
  }
}

int J(int i, int j) {
  if (i / 2 != j / 2) return 0;
  if (i % 2 == 0 && j % 2 == 1) return 1;
  if (i % 2 == 1 && j % 2 == 0) return -1;
  return 0;
}

namespace {

int sgn(int i) { return i % 2 == 1 ? 1 : -1; }
int partner(int i) { return i ^ 1; }

void check_index(int i, int bound, const char* what) {
  if (i < 0 || i >= bound) {
    std::ostringstream msg;
    msg << what << " index " << i << " outside [0, " << bound << ")";
    throw Error(ErrorKind::IndexOutOfRange, msg.str());
  }
}

// conj(zeta_v) = sign * zeta_{partner}; identical rule for the derivatives.
std::pair<int, int> conjugate_var(const Dims& d, int v) {
  const int alpha = v / d.cols();
  const int a = v % d.cols();
  return {d.var(partner(alpha), partner(a)), sgn(alpha) * sgn(a)};
}

Multiset merged(Multiset a, const Multiset& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  return a;
}

}  // namespace

// ---- Polynomial ----------------------------------------------------------

Polynomial::Polynomial(GaussRational c) {
  if (!c.is_zero()) terms_.emplace(Multiset{}, c);
}

Polynomial Polynomial::monomial(Multiset vars, GaussRational c) {
  std::sort(vars.begin(), vars.end());
  Polynomial p;
  p.add_term(vars, c);
  return p;
}

int Polynomial::degree() const {
  int deg = -1;
  for (const auto& [m, c] : terms_) deg = std::max(deg, static_cast<int>(m.size()));
  return deg;
}

void Polynomial::add_term(const Multiset& m, const GaussRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::derivative(int var) const {
  Polynomial out;
  const auto v = static_cast<std::uint16_t>(var);
  for (const auto& [m, c] : terms_) {
    const auto [lo, hi] = std::equal_range(m.begin(), m.end(), v);
    const auto mult = hi - lo;
    if (mult == 0) continue;
    Multiset rest(m.begin(), lo);
    rest.insert(rest.end(), std::next(lo), m.end());
    out.add_term(rest, GaussRational(static_cast<long long>(mult)) * c);
  }
  return out;
}

Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) out.add_term(merged(ma, mb), ca * cb);
  return out;
}

Polynomial operator*(const GaussRational& c, const Polynomial& a) {
  Polynomial out;
  for (const auto& [m, ca] : a.terms()) out.add_term(m, c * ca);
  return out;
}

Polynomial zeta(const Dims& d, int alpha, int a) {
  check_index(alpha, d.rows(), "row");
  check_index(a, d.cols(), "column");
  return Polynomial::monomial({static_cast<std::uint16_t>(d.var(alpha, a))});
}

Polynomial zeta_bar(const Dims& d, int alpha, int a) {
  check_index(alpha, d.rows(), "row");
  check_index(a, d.cols(), "column");
  return Polynomial::monomial({static_cast<std::uint16_t>(d.var(partner(alpha), partner(a)))},
                              sgn(alpha) * sgn(a));
}

// ---- DiffOperator --------------------------------------------------------

int DiffOperator::order() const {
  int ord = 0;
  for (const auto& [ds, c] : terms_) ord = std::max(ord, static_cast<int>(ds.size()));
  return ord;
}

void DiffOperator::add_term(const Multiset& derivs, const Polynomial& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(derivs, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DiffOperator& DiffOperator::operator+=(const DiffOperator& o) {
  for (const auto& [ds, c] : o.terms_) add_term(ds, c);
  return *this;
}

DiffOperator& DiffOperator::operator-=(const DiffOperator& o) {
  for (const auto& [ds, c] : o.terms_) add_term(ds, GaussRational(-1) * c);
  return *this;
}

DiffOperator operator+(DiffOperator a, const DiffOperator& b) { return a += b; }
DiffOperator operator-(DiffOperator a, const DiffOperator& b) { return a -= b; }

DiffOperator operator*(const GaussRational& c, const DiffOperator& a) {
  DiffOperator out;
  if (c.is_zero()) return out;
  for (const auto& [ds, p] : a.terms()) out.add_term(ds, c * p);
  return out;
}

DiffOperator operator*(const Polynomial& f, const DiffOperator& a) {
  DiffOperator out;
  for (const auto& [ds, p] : a.terms()) out.add_term(ds, f * p);
  return out;
}

DiffOperator partial(const Dims& d, int alpha, int a) {
  check_index(alpha, d.rows(), "row");
  check_index(a, d.cols(), "column");
  DiffOperator op;
  op.add_term({static_cast<std::uint16_t>(d.var(alpha, a))}, Polynomial(1));
  return op;
}

DiffOperator partial_bar(const Dims& d, int alpha, int a) {
  check_index(alpha, d.rows(), "row");
  check_index(a, d.cols(), "column");
  DiffOperator op;
  op.add_term({static_cast<std::uint16_t>(d.var(partner(alpha), partner(a)))},
              Polynomial(sgn(alpha) * sgn(a)));
  return op;
}

Polynomial apply(const DiffOperator& op, const Polynomial& f) {
  Polynomial out;
  for (const auto& [ds, c] : op.terms()) {
    Polynomial g = f;
    for (auto v : ds) {
      g = g.derivative(v);
      if (g.is_zero()) break;
    }
    if (!g.is_zero()) out += c * g;
  }
  return out;
}

DiffOperator compose(const DiffOperator& a, const DiffOperator& b) {
  DiffOperator out;
  for (const auto& [ids, ca] : a.terms()) {
    // d_i o (c d^J) = (d_i c) d^J + c d^{J+i}, innermost derivative first.
    DiffOperator cur = b;
    for (auto it = ids.rbegin(); it != ids.rend(); ++it) {
      DiffOperator next;
      for (const auto& [js, cb] : cur.terms()) {
        next.add_term(js, cb.derivative(*it));
        next.add_term(merged(js, {*it}), cb);
      }
      cur = std::move(next);
    }
    out += ca * cur;
  }
  return out;
}

DiffOperator commutator(const DiffOperator& a, const DiffOperator& b) {
  DiffOperator c = compose(a, b) - compose(b, a);
  if (a.order() <= 1 && b.order() <= 1 && c.order() > 1) {
    throw Error(ErrorKind::SecondOrderResidue,
                "second-order terms of a commutator of first-order operators did not cancel");
  }
  return c;
}

DiffOperator conjugate(const Dims& d, const DiffOperator& a) {
  auto conj_poly = [&d](const Polynomial& p) {
    Polynomial out;
    for (const auto& [m, c] : p.terms()) {
      Multiset vars;
      vars.reserve(m.size());
      int sign = 1;
      for (auto v : m) {
        const auto [w, s] = conjugate_var(d, v);
        vars.push_back(static_cast<std::uint16_t>(w));
        sign *= s;
      }
      std::sort(vars.begin(), vars.end());
      out.add_term(vars, GaussRational(sign) * conj(c));
    }
    return out;
  };
  DiffOperator out;
  for (const auto& [ds, c] : a.terms()) {
    Multiset derivs;
    int sign = 1;
    for (auto v : ds) {
      const auto [w, s] = conjugate_var(d, v);
      derivs.push_back(static_cast<std::uint16_t>(w));
      sign *= s;
    }
    std::sort(derivs.begin(), derivs.end());
    out.add_term(derivs, GaussRational(sign) * conj_poly(c));
  }
  return out;
}

DiffOperator truncate_coefficients(const DiffOperator& a, int max_degree) {
  DiffOperator out;
  for (const auto& [ds, c] : a.terms()) {
    Polynomial kept;
    for (const auto& [m, v] : c.terms())
      if (static_cast<int>(m.size()) <= max_degree) kept.add_term(m, v);
    out.add_term(ds, kept);
  }
  return out;
}

// ---- generators ----------------------------------------------------------

namespace {

DiffOperator make_h(const Dims& d, int alpha, int beta) {
  DiffOperator op;
  for (int b = 0; b < d.cols(); ++b) {
    op += zeta(d, alpha, b) * partial(d, beta, b);
    op -= zeta_bar(d, beta, b) * partial_bar(d, alpha, b);
  }
  return op;
}

DiffOperator make_H(const Dims& d, int a, int b) {
  DiffOperator op;
  for (int mu = 0; mu < d.rows(); ++mu) {
    op += zeta(d, mu, a) * partial(d, mu, b);
    op -= zeta_bar(d, mu, b) * partial_bar(d, mu, a);
  }
  return op;
}

DiffOperator make_p(const Dims& d, int alpha, int a) {
  DiffOperator op = partial_bar(d, alpha, a);
  for (int b = 0; b < d.cols(); ++b)
    for (int mu = 0; mu < d.rows(); ++mu)
      op += (zeta(d, alpha, b) * zeta(d, mu, a)) * partial(d, mu, b);
  return op;
}

}  // namespace

DiffOperator generator(GeneratorKind kind, int i, int j, const Dims& d) {
  d.check();
  switch (kind) {
    case GeneratorKind::h:
      check_index(i, d.rows(), "h row");
      check_index(j, d.rows(), "h column");
      return make_h(d, i, j);
    case GeneratorKind::H:
      check_index(i, d.cols(), "H row");
      check_index(j, d.cols(), "H column");
      return make_H(d, i, j);
    case GeneratorKind::p:
      check_index(i, d.rows(), "p row");
      check_index(j, d.cols(), "p column");
      return make_p(d, i, j);
    case GeneratorKind::pbar:
      check_index(i, d.rows(), "pbar row");
      check_index(j, d.cols(), "pbar column");
      return conjugate(d, make_p(d, i, j));
  }
  return {};
}

DiffOperator p_via_H(const Dims& d, int alpha, int a) {
  // (delta_{alpha beta} + zeta_{alpha b} zeta-bar_{beta b}) dbar_{beta a} + zeta_{alpha b} H_{ab}
  DiffOperator op;
  for (int beta = 0; beta < d.rows(); ++beta) {
    Polynomial c(alpha == beta ? 1 : 0);
    for (int b = 0; b < d.cols(); ++b) c += zeta(d, alpha, b) * zeta_bar(d, beta, b);
    op += c * partial_bar(d, beta, a);
  }
  for (int b = 0; b < d.cols(); ++b) op += zeta(d, alpha, b) * make_H(d, a, b);
  return op;
}

DiffOperator p_via_h(const Dims& d, int alpha, int a) {
  // (delta_{ab} + zeta_{mu a} zeta-bar_{mu b}) dbar_{alpha b} + zeta_{mu a} h_{alpha mu}
  DiffOperator op;
  for (int b = 0; b < d.cols(); ++b) {
    Polynomial c(a == b ? 1 : 0);
    for (int mu = 0; mu < d.rows(); ++mu) c += zeta(d, mu, a) * zeta_bar(d, mu, b);
    op += c * partial_bar(d, alpha, b);
  }
  for (int mu = 0; mu < d.rows(); ++mu) op += zeta(d, mu, a) * make_h(d, alpha, mu);
  return op;
}

std::vector<Polynomial> monomials_up_to(const Dims& d, int max_degree) {
  std::vector<Polynomial> out;
  const int nv = d.num_vars();
  Multiset cur;
  std::function<void(int, int)> rec = [&](int start, int left) {
    out.push_back(Polynomial::monomial(cur));
    if (left == 0) return;
    for (int v = start; v < nv; ++v) {
      cur.push_back(static_cast<std::uint16_t>(v));
      rec(v, left - 1);
      cur.pop_back();
    }
  };
  rec(0, max_degree);
  return out;
}

// ---- commutation table ---------------------------------------------------

namespace {

using Combo = std::vector<std::pair<GaussRational, int>>;  // sum c * generator[id]

class Table {
 public:
  Table(const Dims& d, int max_degree) : d_(d), basis_(monomials_up_to(d, max_degree)) {
    const int g = d.rows();
    const int l = d.cols();
    for (int i = 0; i < g; ++i)
      for (int j = 0; j < g; ++j) add(make_h(d, i, j));
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j) add(make_H(d, i, j));
    for (int i = 0; i < g; ++i)
      for (int j = 0; j < l; ++j) add(make_p(d, i, j));
    for (int i = 0; i < g; ++i)
      for (int j = 0; j < l; ++j) add(conjugate(d, ops_[static_cast<std::size_t>(p(i, j))]));
  }

  int h(int i, int j) const { return i * d_.rows() + j; }
  int H(int i, int j) const { return d_.rows() * d_.rows() + i * d_.cols() + j; }
  int p(int i, int j) const { return h_count() + H_count() + i * d_.cols() + j; }
  int pbar(int i, int j) const { return p(i, j) + d_.rows() * d_.cols(); }

  const DiffOperator& op(int id) const { return ops_[static_cast<std::size_t>(id)]; }
  const std::vector<Polynomial>& basis() const { return basis_; }

  DiffOperator sum(const Combo& c) const {
    DiffOperator out;
    for (const auto& [coef, id] : c) out += coef * op(id);
    return out;
  }

  // Applies generator `id` to f using per-monomial memoization.
  Polynomial apply_gen(int id, const Polynomial& f) {
    Polynomial out;
    auto& memo = cache_[static_cast<std::size_t>(id)];
    for (const auto& [m, c] : f.terms()) {
      auto it = memo.find(m);
      if (it == memo.end()) it = memo.emplace(m, apply(op(id), Polynomial::monomial(m))).first;
      out += c * it->second;
    }
    return out;
  }

  Polynomial apply_combo(const Combo& combo, const Polynomial& f) {
    Polynomial out;
    for (const auto& [coef, id] : combo) out += coef * apply_gen(id, f);
    return out;
  }

  // Checks [x, y] = rhs symbolically and on every basis monomial.
  void check(RelationReport& rep, int x, int y, const Combo& rhs) {
    ++rep.instances;
    if (!(commutator(op(x), op(y)) == sum(rhs))) ++rep.symbolic_failures;
    for (const auto& f : basis_) {
      const Polynomial lhs = apply_gen(x, apply_gen(y, f)) - apply_gen(y, apply_gen(x, f));
      if (!(lhs == apply_combo(rhs, f))) {
        ++rep.applied_failures;
        break;
      }
    }
  }

  // (hJ)_{alpha mu} = sum_nu h_{alpha nu} J_{nu mu}, and the analogues.
  Combo hJ(int alpha, int mu) const {
    Combo c;
    for (int nu = 0; nu < d_.rows(); ++nu)
      if (J(nu, mu)) c.emplace_back(J(nu, mu), h(alpha, nu));
    return c;
  }
  Combo Jh(int beta, int nu) const {
    Combo c;
    for (int g = 0; g < d_.rows(); ++g)
      if (J(beta, g)) c.emplace_back(J(beta, g), h(g, nu));
    return c;
  }
  Combo HJ(int a, int c0) const {
    Combo c;
    for (int dd = 0; dd < d_.cols(); ++dd)
      if (J(dd, c0)) c.emplace_back(J(dd, c0), H(a, dd));
    return c;
  }
  Combo JH(int dd, int b) const {
    Combo c;
    for (int e = 0; e < d_.cols(); ++e)
      if (J(dd, e)) c.emplace_back(J(dd, e), H(e, b));
    return c;
  }
  Combo Jp(int nu, int a) const {
    Combo c;
    for (int g = 0; g < d_.rows(); ++g)
      if (J(nu, g)) c.emplace_back(J(nu, g), p(g, a));
    return c;
  }
  Combo pJ(int alpha, int c0) const {
    Combo c;
    for (int dd = 0; dd < d_.cols(); ++dd)
      if (J(dd, c0)) c.emplace_back(J(dd, c0), p(alpha, dd));
    return c;
  }

 private:
  int h_count() const { return d_.rows() * d_.rows(); }
  int H_count() const { return d_.cols() * d_.cols(); }

  void add(DiffOperator op) {
    ops_.push_back(std::move(op));
    cache_.emplace_back();
  }

  Dims d_;
  std::vector<Polynomial> basis_;
  std::vector<DiffOperator> ops_;
  std::vector<std::map<Multiset, Polynomial>> cache_;
};

void append(Combo& c, GaussRational coef, const Combo& more) {
  if (coef.is_zero()) return;
  for (const auto& [m, id] : more) c.emplace_back(coef * m, id);
}

void append(Combo& c, GaussRational coef, int id) {
  if (!coef.is_zero()) c.emplace_back(coef, id);
}

int delta(int i, int j) { return i == j ? 1 : 0; }

}  // namespace

bool TableReport::all_passed() const {
  return std::all_of(relations.begin(), relations.end(),
                     [](const RelationReport& r) { return r.passed(); });
}

TableReport verify_commutation_table(const Dims& d, int max_degree) {
  d.check();
  Table t(d, max_degree);
  const int g = d.rows();
  const int l = d.cols();

  TableReport report;
  report.dims = d;
  report.max_degree = max_degree;
  report.monomials = t.basis().size();

  RelationReport hh{"[h,h]"};
  for (int al = 0; al < g; ++al)
    for (int be = 0; be < g; ++be)
      for (int mu = 0; mu < g; ++mu)
        for (int nu = 0; nu < g; ++nu) {
          Combo rhs;
          append(rhs, delta(be, mu), t.h(al, nu));
          append(rhs, -delta(al, nu), t.h(mu, be));
          append(rhs, -J(be, nu), t.hJ(al, mu));
          append(rhs, J(mu, al), t.Jh(be, nu));
          t.check(hh, t.h(al, be), t.h(mu, nu), rhs);
        }
  report.relations.push_back(hh);

  RelationReport HH{"[H,H]"};
  for (int a = 0; a < l; ++a)
    for (int b = 0; b < l; ++b)
      for (int c = 0; c < l; ++c)
        for (int dd = 0; dd < l; ++dd) {
          Combo rhs;
          append(rhs, delta(b, c), t.H(a, dd));
          append(rhs, -delta(a, dd), t.H(c, b));
          append(rhs, -J(b, dd), t.HJ(a, c));
          append(rhs, J(c, a), t.JH(dd, b));
          t.check(HH, t.H(a, b), t.H(c, dd), rhs);
        }
  report.relations.push_back(HH);

  RelationReport hH{"[h,H]"};
  for (int al = 0; al < g; ++al)
    for (int be = 0; be < g; ++be)
      for (int a = 0; a < l; ++a)
        for (int b = 0; b < l; ++b) t.check(hH, t.h(al, be), t.H(a, b), {});
  report.relations.push_back(hH);

  RelationReport ph{"[p,h]"};
  for (int al = 0; al < g; ++al)
    for (int a = 0; a < l; ++a)
      for (int mu = 0; mu < g; ++mu)
        for (int nu = 0; nu < g; ++nu) {
          Combo rhs;
          append(rhs, -delta(al, nu), t.p(mu, a));
          append(rhs, -J(al, mu), t.Jp(nu, a));
          t.check(ph, t.p(al, a), t.h(mu, nu), rhs);
        }
  report.relations.push_back(ph);

  RelationReport pH{"[p,H]"};
  for (int al = 0; al < g; ++al)
    for (int a = 0; a < l; ++a)
      for (int b = 0; b < l; ++b)
        for (int c = 0; c < l; ++c) {
          Combo rhs;
          append(rhs, -delta(a, c), t.p(al, b));
          append(rhs, J(a, b), t.pJ(al, c));
          t.check(pH, t.p(al, a), t.H(b, c), rhs);
        }
  report.relations.push_back(pH);

  RelationReport pp{"[p,p]"};
  for (int al = 0; al < g; ++al)
    for (int a = 0; a < l; ++a)
      for (int be = 0; be < g; ++be)
        for (int b = 0; b < l; ++b) {
          Combo rhs;
          append(rhs, -J(a, b), t.hJ(al, be));
          append(rhs, -J(al, be), t.HJ(a, b));
          t.check(pp, t.p(al, a), t.p(be, b), rhs);
        }
  report.relations.push_back(pp);

  RelationReport pbp{"[pbar,p]"};
  for (int al = 0; al < g; ++al)
    for (int a = 0; a < l; ++a)
      for (int be = 0; be < g; ++be)
        for (int b = 0; b < l; ++b) {
          Combo rhs;
          append(rhs, delta(al, be), t.H(b, a));
          append(rhs, delta(a, b), t.h(be, al));
          t.check(pbp, t.pbar(al, a), t.p(be, b), rhs);
        }
  report.relations.push_back(pbp);

  // Generator identities.
  RelationReport skew{"h* = -h, H* = -H"};
  for (int al = 0; al < g; ++al)
    for (int be = 0; be < g; ++be) {
      ++skew.instances;
      if (!(conjugate(d, t.op(t.h(al, be))) == GaussRational(-1) * t.op(t.h(be, al))))
        ++skew.symbolic_failures;
    }
  for (int a = 0; a < l; ++a)
    for (int b = 0; b < l; ++b) {
      ++skew.instances;
      if (!(conjugate(d, t.op(t.H(a, b))) == GaussRational(-1) * t.op(t.H(b, a))))
        ++skew.symbolic_failures;
    }
  report.relations.push_back(skew);

  RelationReport sym{"Jh and JH symmetric"};
  for (int al = 0; al < g; ++al)
    for (int be = 0; be < g; ++be) {
      ++sym.instances;
      if (!(t.sum(t.Jh(al, be)) == t.sum(t.Jh(be, al)))) ++sym.symbolic_failures;
    }
  for (int a = 0; a < l; ++a)
    for (int b = 0; b < l; ++b) {
      ++sym.instances;
      if (!(t.sum(t.JH(a, b)) == t.sum(t.JH(b, a)))) ++sym.symbolic_failures;
    }
  report.relations.push_back(sym);

  RelationReport pforms{"p forms agree"};
  for (int al = 0; al < g; ++al)
    for (int a = 0; a < l; ++a) {
      ++pforms.instances;
      const DiffOperator& pa = t.op(t.p(al, a));
      if (!(p_via_H(d, al, a) == pa) || !(p_via_h(d, al, a) == pa)) ++pforms.symbolic_failures;
    }
  report.relations.push_back(pforms);

  return report;
}

// ---- ladder and Laplace-Beltrami ----------------------------------------

GaussRational eigenvalue(const DiffOperator& op, const Polynomial& v) {
  if (v.is_zero()) throw Error(ErrorKind::NotEigenvector, "zero vector");
  const Polynomial w = apply(op, v);
  // Candidate from the leading term, then confirm w == lambda v exactly.
  const auto& [m, c] = *v.terms().begin();
  GaussRational lambda;
  if (auto it = w.terms().find(m); it != w.terms().end()) {
    const Rational n2 = c.re * c.re + c.im * c.im;
    lambda = it->second * GaussRational(c.re / n2, -c.im / n2);
  }
  if (!(w == lambda * v)) throw Error(ErrorKind::NotEigenvector, "image is not a multiple");
  return lambda;
}

LadderReport ladder_check(const Dims& d, int alpha, int a, const std::vector<Polynomial>& vs) {
  d.check();
  const DiffOperator cartan_big = generator(GeneratorKind::H, a, a, d);
  const DiffOperator cartan_small = generator(GeneratorKind::h, alpha, alpha, d);
  const DiffOperator p = generator(GeneratorKind::p, alpha, a, d);
  const DiffOperator pbar = generator(GeneratorKind::pbar, alpha, a, d);

  LadderReport rep;
  auto step = [&](const DiffOperator& cartan, const DiffOperator& ladder, const Polynomial& v,
                  int shift) {
    ++rep.checked;
    const GaussRational n0 = eigenvalue(cartan, v);
    const Polynomial w = apply(ladder, v);
    if (w.is_zero()) {
      ++rep.vacuous;
      return;
    }
    try {
      if (!(eigenvalue(cartan, w) == n0 + GaussRational(shift))) ++rep.failures;
    } catch (const Error&) {
      ++rep.failures;
    }
  };
  for (const auto& v : vs) {
    step(cartan_big, p, v, +1);
    step(cartan_small, pbar, v, -1);
    step(cartan_small, p, v, +1);
    step(cartan_big, pbar, v, -1);
  }
  return rep;
}

DiffOperator laplace_beltrami(const Dims& d) {
  d.check();
  DiffOperator lap;
  for (int al = 0; al < d.rows(); ++al)
    for (int be = 0; be < d.rows(); ++be) {
      const DiffOperator x = make_h(d, al, be);
      lap += compose(x, conjugate(d, x));
    }
  for (int a = 0; a < d.cols(); ++a)
    for (int b = 0; b < d.cols(); ++b) {
      const DiffOperator x = make_H(d, a, b);
      lap += compose(x, conjugate(d, x));
    }
  for (int al = 0; al < d.rows(); ++al)
    for (int a = 0; a < d.cols(); ++a) {
      const DiffOperator x = make_p(d, al, a);
      const DiffOperator xb = conjugate(d, x);
      lap += compose(x, xb);
      lap += compose(xb, x);
    }
  return lap;
}

std::string to_string(const Dims& d, const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    if (!first) os << " + ";
    first = false;
    os << to_string(c);
    for (auto v : m) os << "*z" << v / d.cols() << '_' << v % d.cols();
  }
  return os.str();
}

}  // namespace sympflag::liealg
