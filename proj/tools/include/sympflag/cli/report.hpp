#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sympflag/config.hpp"

namespace sympflag::cli {

enum class Format { Json, Csv };

struct RunConfig {
  std::uint64_t seed = 42;
  std::size_t trials = 100;
  Tolerances tol;
  Format format = Format::Json;
  std::string out;  // empty: stdout
};

/// Parses "KEY=VAL"; throws ParseError.
void add_tolerance_override(Tolerances& tol, const std::string& spec);

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  double residual = 0.0;
  double tolerance = 0.0;
  bool exact = false;  // residual counts failures and must be 0
  std::uint64_t seed = 0;
  std::string detail;
};

/// Seed for one named check, derived from the run seed so that a suite
/// gives the same numbers whether run alone or inside `verify all`.
std::uint64_t check_seed(std::uint64_t run_seed, const std::string& key);

nlohmann::ordered_json to_json(const std::vector<CheckResult>& checks);

/// RFC 4180 quoting when the field contains a comma, quote or newline.
std::string csv_field(const std::string& s);

/// Locale-independent shortest round-trip rendering of a double.
std::string format_double(double v);

void write_checks_csv(std::ostream& os, const std::vector<CheckResult>& checks);

/// Writes `text` to cfg.out, or stdout when empty.
void emit(const RunConfig& cfg, const std::string& text);

inline constexpr const char* kSchemaVersion = "1";

}  // namespace sympflag::cli
