#pragma once

namespace sympflag::cli {

enum ExitCode : int { kPass = 0, kCheckFailure = 1, kUsage = 2, kDomain = 3 };

/// Entry point shared by the executable and the tests.
int run(int argc, char** argv);

}  // namespace sympflag::cli
