#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "zhou/zmod.hpp"

namespace zhou::cli {

/// Process exit codes; each failure class has its own.
enum ExitCode : int {
  kOk = 0,
  kSelftestFailed = 1,
  kUnsupportedModulus = 2,
  kMalformedInput = 3,
  kVerificationFailed = 4,
  kOracleNotFound = 5,
  kBudgetExceeded = 6,
  kUsage = 64,
};

struct SelftestOptions {
  std::size_t max_dim = 4;
  std::vector<u64> moduli{2, 3, 4, 5, 6, 8, 9, 10, 12, 15, 30, 45, 60, 360};
  std::size_t count = 50;
  std::uint64_t seed = 42;
  bool exhaustive = false;
  /// Candidate limit, modulus^(dim^2), for oracle cross-checks and
  /// exhaustive sweeps.
  u64 budget = 100'000;
};

/// Random decompose+verify fuzzing, optional exhaustive sweep of
/// M_{max_dim}(Z_n), and oracle cross-checks on cases within budget. Prints a
/// summary that depends only on the options. Returns kOk or kSelftestFailed.
int run_selftest(const SelftestOptions& options, std::ostream& out);

/// Entry point behind the `zhou` binary.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace zhou::cli
