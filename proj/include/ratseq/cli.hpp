#pragma once

#include "ratseq/verify.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ratseq::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitLimit = 3;

/// Runs the command line given as plain arguments (no program name) and
/// writes to the supplied streams. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Verify driver behind the `verify` subcommand: prints one report line per
/// suite and returns 0 iff everything passed. Exposed with the hook seam so
/// the harness itself can be tested against tampered kernels.
int verify_and_print(Profile profile, const std::optional<std::string>& suite,
                     std::ostream& out, const SuiteHooks& hooks = SuiteHooks::production());

} // namespace ratseq::cli
