#include "sympflag/roots.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>

#include "sympflag/errors.hpp"

namespace sympflag::roots {

namespace {

constexpr std::string_view kMacron = "\xCC\x84";  // U+0304 combining macron

void check_rank(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidRank, "rank must be >= 1, got " + std::to_string(n));
}

char tag_char(Tag t) {
  switch (t) {
    case Tag::I: return 'i';
    case Tag::J: return 'j';
    case Tag::K: return 'k';
    case Tag::None: break;
  }
  return '?';
}

}  // namespace

RootSystem generate(int n) {
  check_rank(n);
  RootSystem rs;
  rs.n = n;
  const auto un = static_cast<std::size_t>(n);
  for (std::size_t i = 0; i < un; ++i) {
    for (int s : {2, -2}) {
      Root r(un, 0);
      r[i] = s;
      rs.roots.push_back(r);
    }
  }
  for (std::size_t i = 0; i < un; ++i)
    for (std::size_t j = i + 1; j < un; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          Root r(un, 0);
          r[i] = si;
          r[j] = sj;
          rs.roots.push_back(r);
        }
  return rs;
}

bool contains(const RootSystem& rs, const Root& r) {
  return std::find(rs.roots.begin(), rs.roots.end(), r) != rs.roots.end();
}

bool embed_check(int m, int n) {
  check_rank(m);
  if (m >= n) {
    throw Error(ErrorKind::InvalidRank, "need m < n, got m = " + std::to_string(m) +
                                            ", n = " + std::to_string(n));
  }
  const RootSystem small = generate(m);
  const RootSystem big = generate(n);
  return std::all_of(small.roots.begin(), small.roots.end(), [&](const Root& r) {
    Root padded = r;
    padded.resize(static_cast<std::size_t>(n), 0);
    return contains(big, padded);
  });
}

std::string_view to_string(ParticleClass c) {
  switch (c) {
    case ParticleClass::Lepton: return "lepton";
    case ParticleClass::Meson: return "meson";
    case ParticleClass::Baryon: return "baryon";
  }
  return "?";
}

std::string flavor_name(int index) {
  static constexpr std::array<const char*, 4> kNames{"u", "d", "s", "c"};
  if (index >= 0 && index < 4) return kNames[static_cast<std::size_t>(index)];
  return "q" + std::to_string(index + 1);
}

namespace {

std::string render(const std::vector<Constituent>& cs, bool with_tags) {
  std::string out;
  for (const auto& c : cs) {
    if (c.doubled) out += '2';
    out += flavor_name(c.index);
    if (c.anti) out += kMacron;
    if (with_tags && c.tag != Tag::None) {
      out += '(';
      out += tag_char(c.tag);
      out += ')';
    }
  }
  return out;
}

}  // namespace

ParticleLabel particle_label(const std::vector<Weight>& weights) {
  ParticleLabel label;
  for (const auto& w : weights) {
    int nonzero = 0;
    for (int c : w.coeffs) nonzero += c != 0;
    for (std::size_t i = 0; i < w.coeffs.size(); ++i) {
      const int c = w.coeffs[i];
      if (c == 0) continue;
      const bool doubled = std::abs(c) == 2;
      if (std::abs(c) > 2 || (doubled && nonzero != 1)) {
        std::ostringstream msg;
        msg << "coefficient " << c << " on L" << i + 1 << " is not a unit or a lone +-2";
        throw Error(ErrorKind::UnsupportedWeightCount, msg.str());
      }
      label.constituents.push_back({static_cast<int>(i), c < 0, doubled, w.tag});
    }
  }
  switch (label.constituents.size()) {
    case 1: label.cls = ParticleClass::Lepton; break;
    case 2: label.cls = ParticleClass::Meson; break;
    case 3: label.cls = ParticleClass::Baryon; break;
    default:
      throw Error(ErrorKind::UnsupportedWeightCount,
                  std::to_string(label.constituents.size()) + " constituents (need 1, 2 or 3)");
  }
  label.flavors = render(label.constituents, false);
  label.colored = render(label.constituents, true);
  return label;
}

std::vector<Constituent> parse_label(std::string_view s) {
  std::vector<Constituent> out;
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) {
    std::ostringstream msg;
    msg << what << " at offset " << pos << " in \"" << s << "\"";
    throw Error(ErrorKind::ParseError, msg.str());
  };
  while (pos < s.size()) {
    Constituent c;
    if (s[pos] == '2') {
      c.doubled = true;
      ++pos;
    }
    if (pos >= s.size()) fail("expected a flavor");
    switch (s[pos]) {
      case 'u': c.index = 0; ++pos; break;
      case 'd': c.index = 1; ++pos; break;
      case 's': c.index = 2; ++pos; break;
      case 'c': c.index = 3; ++pos; break;
      case 'q': {
        ++pos;
        const std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail("expected digits after q");
        c.index = std::stoi(std::string(s.substr(start, pos - start))) - 1;
        if (c.index < 4) fail("q-names start at q5");
        break;
      }
      default: fail("unknown flavor");
    }
    if (s.substr(pos, kMacron.size()) == kMacron) {
      c.anti = true;
      pos += kMacron.size();
    }
    if (pos < s.size() && s[pos] == '(') {
      if (pos + 2 >= s.size() || s[pos + 2] != ')') fail("malformed color tag");
      switch (s[pos + 1]) {
        case 'i': c.tag = Tag::I; break;
        case 'j': c.tag = Tag::J; break;
        case 'k': c.tag = Tag::K; break;
        default: fail("color tag must be i, j or k");
      }
      pos += 3;
    }
    out.push_back(c);
  }
  return out;
}

Root total_weight(const std::vector<Constituent>& cs, int n) {
  Root r(static_cast<std::size_t>(n), 0);
  for (const auto& c : cs) {
    if (c.index >= n) throw Error(ErrorKind::InvalidRank, "constituent outside rank");
    r[static_cast<std::size_t>(c.index)] += (c.anti ? -1 : 1) * (c.doubled ? 2 : 1);
  }
  return r;
}

int euler_characteristic(int sphere_dim) {
  if (sphere_dim % 2 != 0) {
    throw Error(ErrorKind::OddDimension, "S^" + std::to_string(sphere_dim) + " is odd-dimensional");
  }
  if (sphere_dim < 2) throw Error(ErrorKind::InvalidRank, "sphere dimension must be >= 2");
  return 2;
}

std::array<double, 2> project2d(const Root& r) {
  std::array<double, 2> p{0.0, 0.0};
  const double n = static_cast<double>(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    const double a = 2.0 * std::numbers::pi * static_cast<double>(i) / n;
    p[0] += r[i] * std::cos(a);
    p[1] += r[i] * std::sin(a);
  }
  return p;
}

std::array<double, 3> project3d(const Root& r) {
  std::array<double, 3> p{0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < std::min<std::size_t>(3, r.size()); ++i) p[i] = r[i];
  return p;
}

}  // namespace sympflag::roots
