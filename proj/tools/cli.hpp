#pragma once

#include <iosfwd>

namespace fglab::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailure = 1,
  kUsageError = 2,
  kDomainError = 3,
};

struct CliConfig {
  unsigned magnus_cap = 8;
  unsigned n_max = 100;
  unsigned d_bound = 12;
  // omega_n doubles in length with n, so the rewriting side of `verify`
  // stops here even when --n-max is larger.
  unsigned recurrence_n_max = 16;
  bool json = false;
};

/// Defaults, with FGLAB_MAGNUS_CAP applied when set to a positive integer.
CliConfig default_config();

/// Runs the command line; never throws.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace fglab::cli
