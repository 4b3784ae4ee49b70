#include "sympflag/cli/report.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>

#include "sympflag/errors.hpp"

namespace sympflag::cli {

void add_tolerance_override(Tolerances& tol, const std::string& spec) {
  const auto eq = spec.find('=');
  if (eq == std::string::npos || eq == 0)
    throw Error(ErrorKind::ParseError, "--tol expects KEY=VAL, got '" + spec + "'");
  const std::string value = spec.substr(eq + 1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc() || ptr != value.data() + value.size() || !(v >= 0.0))
    throw Error(ErrorKind::ParseError, "bad tolerance value '" + value + "'");
  tol.overrides[spec.substr(0, eq)] = v;
}

std::uint64_t check_seed(std::uint64_t run_seed, const std::string& key) {
  // FNV-1a over the key, mixed with the run seed.
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : key) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h ^ (run_seed * 0x9E3779B97F4A7C15ULL);
}

nlohmann::ordered_json to_json(const std::vector<CheckResult>& checks) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json j;
    j["suite"] = c.suite;
    j["name"] = c.name;
    j["passed"] = c.passed;
    if (std::isfinite(c.residual))
      j["residual"] = c.residual;
    else
      j["residual"] = nullptr;
    if (c.exact)
      j["tolerance"] = "exact";
    else
      j["tolerance"] = c.tolerance;
    j["seed"] = c.seed;
    j["detail"] = c.detail;
    arr.push_back(std::move(j));
  }
  return arr;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, ptr);
}

void write_checks_csv(std::ostream& os, const std::vector<CheckResult>& checks) {
  os << "suite,name,passed,residual,tolerance,seed,detail\n";
  for (const auto& c : checks) {
    os << csv_field(c.suite) << ',' << csv_field(c.name) << ',' << (c.passed ? "true" : "false")
       << ',' << format_double(c.residual) << ','
       << (c.exact ? std::string("exact") : format_double(c.tolerance)) << ',' << c.seed << ','
       << csv_field(c.detail) << '\n';
  }
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + cfg.out + " for writing");
  f << text;
}

}  // namespace sympflag::cli
