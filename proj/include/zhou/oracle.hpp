#pragma once

// Exhaustive ground truth for small rings. Uses its own naive arithmetic and
// nilpotency test so that it never shares a code path with the pipeline.

#include <cstddef>
#include <optional>
#include <vector>

#include "zhou/decompose.hpp"
#include "zhou/matz.hpp"

namespace zhou::oracle {

inline constexpr u64 kDefaultBudget = 10'000'000;

/// modulus^(dim^2), saturating; the number of candidate matrices.
u64 candidate_count(u64 modulus, std::size_t dim);

/// All M with M^3 = M, in lexicographic order of row-major entries.
/// Throws BudgetExceeded when candidate_count exceeds the budget.
std::vector<MatZ> enumerate_tripotents(u64 modulus, std::size_t dim, u64 budget = kDefaultBudget);
/// Single-threaded twin of enumerate_tripotents.
std::vector<MatZ> enumerate_tripotents_serial(u64 modulus, std::size_t dim, u64 budget = kDefaultBudget);

std::size_t count_tripotents(u64 modulus, std::size_t dim, u64 budget = kDefaultBudget);

/// N^(dim * floor(log2 modulus)) = 0, by repeated naive multiplication.
/// Works for any modulus >= 2.
bool brute_nilpotent(const MatZ& n);

/// Lexicographically first (T1, T2) from the list with A - T1 - T2 nilpotent.
std::optional<Decomposition> oracle_decompose(const MatZ& a, const std::vector<MatZ>& tripotents);
std::optional<Decomposition> oracle_decompose(const MatZ& a, u64 budget = kDefaultBudget);

}  // namespace zhou::oracle
