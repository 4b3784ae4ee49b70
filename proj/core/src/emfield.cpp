#include "sympflag/emfield.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "sympflag/errors.hpp"

namespace sympflag::em {

RealPoly::RealPoly(Rational c) {
  if (c != Rational(0)) terms_.emplace(Exponents{}, c);
}

RealPoly RealPoly::variable(int i) {
  RealPoly p;
  Exponents e{};
  e[static_cast<std::size_t>(i)] = 1;
  p.add_term(e, 1);
  return p;
}

int RealPoly::degree() const {
  int deg = -1;
  for (const auto& [e, c] : terms_) deg = std::max(deg, e[0] + e[1] + e[2] + e[3]);
  return deg;
}

void RealPoly::add_term(const Exponents& e, const Rational& c) {
  if (c == Rational(0)) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == Rational(0)) terms_.erase(it);
  }
}

RealPoly& RealPoly::operator+=(const RealPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

RealPoly& RealPoly::operator-=(const RealPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

RealPoly RealPoly::derivative(int i) const {
  RealPoly out;
  const auto k = static_cast<std::size_t>(i);
  for (const auto& [e, c] : terms_) {
    if (e[k] == 0) continue;
    Exponents f = e;
    --f[k];
    out.add_term(f, c * e[k]);
  }
  return out;
}

double RealPoly::evaluate(const std::array<double, 4>& x) const {
  double s = 0.0;
  for (const auto& [e, c] : terms_) {
    double t = boost::rational_cast<double>(c);
    for (std::size_t i = 0; i < 4; ++i) t *= std::pow(x[i], e[i]);
    s += t;
  }
  return s;
}

RealPoly operator+(RealPoly a, const RealPoly& b) { return a += b; }
RealPoly operator-(RealPoly a, const RealPoly& b) { return a -= b; }
RealPoly operator-(const RealPoly& a) { return Rational(-1) * a; }

RealPoly operator*(const RealPoly& a, const RealPoly& b) {
  RealPoly out;
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) {
      Exponents e;
      for (std::size_t i = 0; i < 4; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

RealPoly operator*(const Rational& c, const RealPoly& a) {
  RealPoly out;
  for (const auto& [e, ca] : a.terms()) out.add_term(e, c * ca);
  return out;
}

std::string to_string(const RealPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest total degree first, then the map order.
  std::vector<std::pair<Exponents, Rational>> terms(p.terms().begin(), p.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
    return x.first[0] + x.first[1] + x.first[2] + x.first[3] >
           y.first[0] + y.first[1] + y.first[2] + y.first[3];
  });
  for (const auto& [e, c] : terms) {
    Rational mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool constant = e == Exponents{};
    bool wrote = false;
    if (mag != Rational(1) || constant) {
      os << mag.numerator();
      if (mag.denominator() != 1) os << '/' << mag.denominator();
      wrote = true;
    }
    for (std::size_t i = 0; i < 4; ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << '*';
      os << 'x' << i;
      if (e[i] > 1) os << '^' << e[i];
      wrote = true;
    }
  }
  return os.str();
}

QPolyField operator+(const QPolyField& x, const QPolyField& y) {
  QPolyField out;
  for (std::size_t r = 0; r < 4; ++r) out.a[r] = x.a[r] + y.a[r];
  return out;
}

QPolyField operator*(const Rational& c, const QPolyField& x) {
  QPolyField out;
  for (std::size_t r = 0; r < 4; ++r) out.a[r] = c * x.a[r];
  return out;
}

QPolyField apply_pstar(const QPolyField& psi) {
  QPolyField out;
  for (int mu = 0; mu < 4; ++mu) {
    for (int r = 0; r < 4; ++r) {
      const RealPoly d = psi.a[static_cast<std::size_t>(r)].derivative(mu);
      if (d.is_zero()) continue;
      // e_mu e_r is a signed basis element.
      const Quaternion prod = Quaternion::basis(mu) * Quaternion::basis(r);
      for (int t = 0; t < 4; ++t) {
        const double c = prod[t];
        if (c != 0.0) out.a[static_cast<std::size_t>(t)] += Rational(static_cast<long long>(c)) * d;
      }
    }
  }
  return out;
}

FieldDecomposition decompose(const QPolyField& psi) {
  const auto& a = psi.a;
  FieldDecomposition f;
  f.scalar = a[0].derivative(0) - a[1].derivative(1) - a[2].derivative(2) - a[3].derivative(3);
  for (int i = 1; i <= 3; ++i)
    f.e[static_cast<std::size_t>(i - 1)] =
        -a[static_cast<std::size_t>(i)].derivative(0) - a[0].derivative(i);
  f.b[0] = a[3].derivative(2) - a[2].derivative(3);
  f.b[1] = a[1].derivative(3) - a[3].derivative(1);
  f.b[2] = a[2].derivative(1) - a[1].derivative(2);

  const QPolyField p = apply_pstar(psi);
  bool ok = p.a[0] == f.scalar;
  for (std::size_t i = 0; i < 3; ++i) ok = ok && p.a[i + 1] == f.b[i] - f.e[i];
  if (!ok) throw std::logic_error("p* psi disagrees with (A0,0 - div A) - E + B");
  return f;
}

double quaternion_product_identity(const Quaternion& v, const Quaternion& w) {
  const auto vv = v.vector();
  const auto wv = w.vector();
  const double dot = vv[0] * wv[0] + vv[1] * wv[1] + vv[2] * wv[2];
  const std::array<double, 3> cross{vv[1] * wv[2] - vv[2] * wv[1], vv[2] * wv[0] - vv[0] * wv[2],
                                    vv[0] * wv[1] - vv[1] * wv[0]};
  Quaternion assembled{v.w * w.w - dot, 0, 0, 0};
  for (int i = 0; i < 3; ++i) {
    const auto k = static_cast<std::size_t>(i);
    assembled[i + 1] = v.w * wv[k] + w.w * vv[k] + cross[k];
  }
  return max_abs_diff(v * w, assembled);
}

// ---- parsing -------------------------------------------------------------

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  RealPoly parse() {
    RealPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    std::ostringstream msg;
    msg << what << " at offset " << pos_ << " in \"" << s_ << "\"";
    throw Error(ErrorKind::ParseError, msg.str());
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  long long integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    try {
      return std::stoll(std::string(s_.substr(start, pos_ - start)));
    } catch (const std::out_of_range&) {
      fail("number out of range");
    }
  }

  RealPoly expr() {
    RealPoly p;
    bool negate = false;
    if (eat('-')) negate = true;
    else eat('+');
    p = term();
    if (negate) p = -p;
    for (;;) {
      if (eat('+')) p += term();
      else if (eat('-')) p -= term();
      else return p;
    }
  }

  RealPoly term() {
    RealPoly p = power();
    while (eat('*')) p = p * power();
    return p;
  }

  RealPoly power() {
    RealPoly base = atom();
    if (eat('^')) {
      const long long n = integer();
      if (n > 64) fail("exponent too large");
      RealPoly out(1);
      for (long long i = 0; i < n; ++i) out = out * base;
      return out;
    }
    return base;
  }

  RealPoly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (eat('(')) {
      RealPoly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (s_[pos_] == 'x') {
      ++pos_;
      if (pos_ >= s_.size() || s_[pos_] < '0' || s_[pos_] > '3') fail("expected x0..x3");
      return RealPoly::variable(s_[pos_++] - '0');
    }
    const long long num = integer();
    long long den = 1;
    skip();
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      den = integer();
      if (den == 0) fail("zero denominator");
    }
    return RealPoly(Rational(num, den));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

RealPoly parse_poly(std::string_view text) { return Parser(text).parse(); }

void parse_component(std::string_view spec, QPolyField& into) {
  spec = trim(spec);
  const auto eq = spec.find('=');
  if (eq == std::string_view::npos) {
    throw Error(ErrorKind::ParseError, "expected COMPONENT=POLY, got \"" + std::string(spec) + "\"");
  }
  const std::string_view lhs = trim(spec.substr(0, eq));
  if (lhs.size() != 2 || lhs[0] != 'A' || lhs[1] < '0' || lhs[1] > '3') {
    throw Error(ErrorKind::ParseError, "component must be A0..A3, got \"" + std::string(lhs) + "\"");
  }
  into.a[static_cast<std::size_t>(lhs[1] - '0')] += parse_poly(spec.substr(eq + 1));
}

QPolyField parse_field(std::string_view specs) {
  QPolyField f;
  while (!specs.empty()) {
    const auto semi = specs.find(';');
    const std::string_view one = specs.substr(0, semi);
    if (!trim(one).empty()) parse_component(one, f);
    if (semi == std::string_view::npos) break;
    specs.remove_prefix(semi + 1);
  }
  return f;
}

QPolyField random_field(Rng& rng, int max_degree) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> keep(0, 2);
  QPolyField f;
  for (auto& comp : f.a) {
    for (int e0 = 0; e0 <= max_degree; ++e0)
      for (int e1 = 0; e0 + e1 <= max_degree; ++e1)
        for (int e2 = 0; e0 + e1 + e2 <= max_degree; ++e2)
          for (int e3 = 0; e0 + e1 + e2 + e3 <= max_degree; ++e3) {
            const int c = coeff(rng);
            if (keep(rng) == 0) comp.add_term({e0, e1, e2, e3}, c);
          }
  }
  return f;
}

}  // namespace sympflag::em
