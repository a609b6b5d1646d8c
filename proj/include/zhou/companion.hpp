#pragma once

#include "zhou/matz.hpp"
#include "zhou/rcf.hpp"

namespace zhou {

/// companion(block) = e1 + e2 + shift with e1, e2 tripotent and shift the
/// strict subdiagonal of ones.
struct CompanionSplit {
  MatZ e1;  // last column (c_0, ..., c_{n-2}, +-1)
  MatZ e2;  // zero except possibly the bottom-right corner
  MatZ shift;
  /// Case number in the c_{n-1} dispatch table, 1-based (I..V).
  int case_number;
  /// Both e1 and e2 are idempotent; always true over F_2.
  bool idempotent;
};

/// Case dispatch on the canonical residue of c_{n-1}:
///
///   p = 3:  0 -> (+1, -1)   1 -> (+1, 0)   2 -> (+1, +1)
///   p = 5:  0 -> (+1, -1)   1 -> (+1, 0)   4 -> (-1, 0)   2 -> (+1, +1)   3 -> (-1, -1)
///   p = 2:  0 -> (+1, +1)   1 -> (+1, 0)
///
/// where the pair is (bottom entry of e1, corner entry of e2). A last column
/// ending in +1 is idempotent, one ending in -1 squares to its negative; either
/// way it cubes to itself. Throws UnsupportedModulus for other primes.
CompanionSplit decompose_companion(const CompanionBlock& block);

}  // namespace zhou
