#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sympflag/cli/report.hpp"

namespace sympflag::cli {

/// Suite names accepted by `verify`, in the order `all` runs them.
const std::vector<std::string>& suite_names();

/// Runs one suite (or "all"). Throws UnknownSuite.
std::vector<CheckResult> run_suite(std::string_view suite, const RunConfig& cfg);

}  // namespace sympflag::cli
