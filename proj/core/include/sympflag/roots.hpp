#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace sympflag::roots {

using Root = std::vector<int>;  // coefficients in the L basis

struct RootSystem {
  int n = 0;
  std::vector<Root> roots;
};

/// {+-L_i +- L_j : i < j} and {+-2 L_i}, 2n^2 roots in a fixed order. Throws InvalidRank.
RootSystem generate(int n);

bool contains(const RootSystem& rs, const Root& r);

/// Every root of sp(m), zero-padded to length n, is a root of sp(n). Throws InvalidRank.
bool embed_check(int m, int n);

enum class Tag { None, I, J, K };

struct Weight {
  Root coeffs;
  Tag tag = Tag::None;
};

enum class ParticleClass { Lepton, Meson, Baryon };

std::string_view to_string(ParticleClass c);

struct Constituent {
  int index = 0;      // L_{index+1}
  bool anti = false;  // negative coefficient
  bool doubled = false;
  Tag tag = Tag::None;

  friend bool operator==(const Constituent&, const Constituent&) = default;
};

struct ParticleLabel {
  ParticleClass cls = ParticleClass::Lepton;
  std::vector<Constituent> constituents;
  std::string flavors;  // e.g. "uud", "ūd", "2u"
  std::string colored;  // flavors with color tags, e.g. "u(i)u(j)d(k)"
};

/// Flavor letter for L_{index+1}: u, d, s, c, then q5, q6, ...
std::string flavor_name(int index);

/// Expands every unit coefficient into a constituent (a lone +-2 L_i is a
/// single doubled constituent) and classifies by constituent count:
/// 1 lepton, 2 meson, 3 baryon. Throws UnsupportedWeightCount.
ParticleLabel particle_label(const std::vector<Weight>& weights);

/// Inverse of the `colored` (or `flavors`) rendering. Throws ParseError.
std::vector<Constituent> parse_label(std::string_view label);

/// Sum of the constituents' weights as an L-basis vector of length n.
Root total_weight(const std::vector<Constituent>& cs, int n);

/// chi(S^d) = 2 for even d. Throws OddDimension, InvalidRank (d < 2).
int euler_characteristic(int sphere_dim);

/// Planar projection sending L_i to the unit vector at angle 2 pi i / n.
std::array<double, 2> project2d(const Root& r);
/// First three coordinates, zero-padded.
std::array<double, 3> project3d(const Root& r);

}  // namespace sympflag::roots
