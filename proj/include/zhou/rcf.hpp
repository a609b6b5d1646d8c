#pragma once

// Rational (Frobenius) canonical form over a prime field F_p.

#include <cstddef>
#include <vector>

#include "zhou/matz.hpp"
#include "zhou/poly.hpp"

namespace zhou {

/// Companion matrix with 1s on the subdiagonal and last column
/// (c_0, ..., c_{n-1}); its characteristic polynomial is
/// x^n - c_{n-1} x^{n-1} - ... - c_0.
struct CompanionBlock {
  u64 p;
  std::vector<u64> c;

  std::size_t size() const noexcept { return c.size(); }
  /// Coefficient c_{n-1}, the one the decomposition cases dispatch on.
  u64 last() const noexcept { return c.back(); }

  friend bool operator==(const CompanionBlock&, const CompanionBlock&) = default;
};

MatZ companion_matrix(const CompanionBlock& block);
PolyFp block_polynomial(const CompanionBlock& block);
/// Block whose polynomial is the given monic polynomial of degree >= 1.
CompanionBlock companion_of(const PolyFp& monic);

/// Similarity certificate: original = P * direct_sum(blocks) * Pinv over F_p.
struct FrobeniusForm {
  MatZ P;
  MatZ Pinv;
  std::vector<CompanionBlock> blocks;

  MatZ block_diagonal() const;
};

/// Characteristic polynomial via Hessenberg reduction. Shares no code with
/// frobenius_form, so the two can cross-check each other.
PolyFp char_poly(const MatZ& a);

/// Minimal polynomial of A over F_p.
PolyFp min_poly(const MatZ& a);

/// Block-companion similarity. Each stage splits off the cyclic subspace of a
/// vector whose local minimal polynomial equals that of the remaining
/// operator, so blocks come out as invariant factors, largest first.
/// Deterministic. The modulus of A must be prime.
FrobeniusForm frobenius_form(const MatZ& a);

}  // namespace zhou
