#pragma once

// Newton-type lifting of idempotents (mod 2) and tripotents (mod odd p) to
// exact solutions over Z_{p^e}.

#include <functional>

#include "zhou/matz.hpp"

namespace zhou {

/// Called after each iteration with the 1-based iteration count and the
/// current iterate. Used by tests to watch the defect's p-adic valuation.
using LiftObserver = std::function<void(int iteration, const MatZ& current)>;

/// Number of Newton rounds used for exponent e: ceil(log2 e) + 1.
int lift_iterations(unsigned exponent);

/// E <- 3E^2 - 2E^3. Modulus must be 2^k. Requires E0^2 = E0 mod 2
/// (NotApproxIdempotent otherwise). Result is exactly idempotent and
/// congruent to E0 mod 2.
MatZ lift_idempotent(const MatZ& e0, const LiftObserver& observe = {});

/// T <- T - (3T^2 - I)^{-1} (T^3 - T). Modulus must be p^e for an odd prime
/// p. Requires T0^3 = T0 mod p (NotApproxTripotent otherwise). Result is
/// exactly tripotent and congruent to T0 mod p.
MatZ lift_tripotent(const MatZ& t0, u64 p, const LiftObserver& observe = {});

}  // namespace zhou
