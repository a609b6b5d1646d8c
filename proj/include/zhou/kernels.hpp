#pragma once

// Dense modular kernels. Each parallel kernel keeps a serial twin that the
// tests use as the reference and the benchmark compares against.

#include <cstddef>
#include <span>

#include "zhou/zmod.hpp"

namespace zhou::kernels {

/// Below this dimension mat_mul stays serial; thread start-up dominates.
inline constexpr std::size_t kParallelMulThreshold = 48;

/// c = a * b over Z_m, all three d x d row-major. c must not alias a or b.
void mul_serial(std::span<const u64> a, std::span<const u64> b, std::span<u64> c, std::size_t d, u64 m);
void mul_parallel(std::span<const u64> a, std::span<const u64> b, std::span<u64> c, std::size_t d, u64 m);

/// Picks one of the above by size.
void mul(std::span<const u64> a, std::span<const u64> b, std::span<u64> c, std::size_t d, u64 m);

}  // namespace zhou::kernels
