#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>

namespace sympflag {

/// Library-wide numeric tolerances. Exact identities are checked against
/// `identity`; anything obtained by numerical differentiation against
/// `differentiated`. Individual checks look themselves up by key so a
/// caller (the CLI's --tol KEY=VAL) can loosen or tighten one without
/// touching the rest.
struct Tolerances {
  double identity = 1e-10;
  double differentiated = 1e-6;
  std::map<std::string, double, std::less<>> overrides;

  double get(std::string_view key, double fallback) const {
    if (auto it = overrides.find(key); it != overrides.end()) return it->second;
    return fallback;
  }
};

}  // namespace sympflag
