#pragma once

// A = T1 + T2 + N over Z_n, n = 2^k 3^l 5^m, with T1, T2 tripotent and N
// nilpotent.

#include <optional>

#include "zhou/matz.hpp"
#include "zhou/zmod.hpp"

namespace zhou {

struct Decomposition {
  MatZ t1;
  MatZ t2;
  MatZ nil;
  u64 modulus;
  /// nil^bound = 0 is guaranteed; bound = dim * max prime exponent.
  u64 nil_index_bound;
};

struct VerifyReport {
  bool sum_ok = false;
  bool t1_tripotent = false;
  bool t2_tripotent = false;
  bool n_nilpotent = false;
  /// Least j <= nil_index_bound with nil^j = 0, when one exists.
  std::optional<u64> observed_nil_index;

  bool all_ok() const noexcept { return sum_ok && t1_tripotent && t2_tripotent && n_nilpotent; }
};

/// Per prime-power component p^e: reduce mod p, take the Frobenius form,
/// split every companion block, conjugate back, lift the two tripotent sides
/// to Z_{p^e} and take N as the remainder. Components that are already
/// nilpotent mod p yield (0, 0, A). Components are recombined by CRT.
/// Throws UnsupportedModulus.
Decomposition decompose_matrix(const MatZ& a);

/// 1x1 case with the residue tables
///   p = 2: a -> (a, 0)
///   p = 3: 0 -> (0, 0), 1 -> (1, 0), 2 -> (1, 1)
///   p = 5: 0 -> (0, 0), 1 -> (1, 0), 2 -> (1, 1), 3 -> (-1, -1), 4 -> (-1, 0)
/// lifted to each Z_{p^e}. Agrees with decompose_matrix on 1x1 input.
Decomposition decompose_scalar(Residue a);

/// Upper-triangular input: T1, T2 are the diagonal of scalar decompositions
/// and N = A - T1 - T2 has nilpotent diagonal. Throws NotUpperTriangular.
Decomposition decompose_triangular(const MatZ& a);

/// Throws ShapeMismatch if the parts do not match A in modulus and size.
VerifyReport verify(const MatZ& a, const Decomposition& d);

}  // namespace zhou
