#pragma once

// Residue arithmetic over Z_n for n = 2^k 3^l 5^m, and the scalar CRT.

#include <cstdint>
#include <vector>

#include "zhou/error.hpp"

namespace zhou {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 add_mod(u64 a, u64 b, u64 m) {
  u64 s = a + b;
  if (s < a || s >= m) s -= m;
  return s;
}

inline u64 sub_mod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + (m - b); }

inline u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

inline u64 neg_mod(u64 a, u64 m) { return a == 0 ? 0 : m - a; }

/// Canonical representative of a signed integer in [0, m).
inline u64 reduce_signed(std::int64_t x, u64 m) {
  if (x >= 0) return static_cast<u64>(x) % m;
  u64 r = (static_cast<u64>(-(x + 1)) % m + 1) % m;  // |x| without overflow at INT64_MIN
  return r == 0 ? 0 : m - r;
}

u64 pow_mod(u64 base, u64 exp, u64 m);

/// Inverse of a modulo m; throws NotAUnit when gcd(a, m) != 1.
u64 inv_mod(u64 a, u64 m);

/// One factor p^e of a supported modulus; q = p^e.
struct PrimePower {
  u64 p;
  unsigned e;
  u64 q;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// A modulus n = 2^k 3^l 5^m with at least one positive exponent.
/// Only obtainable through factor_modulus, so the invariant always holds.
class Modulus {
 public:
  u64 n() const noexcept { return n_; }
  unsigned k() const noexcept { return k_; }
  unsigned l() const noexcept { return l_; }
  unsigned m() const noexcept { return m_; }

  /// Prime-power components in ascending prime order, absent primes skipped.
  std::vector<PrimePower> components() const;
  unsigned max_exponent() const noexcept;

  friend bool operator==(const Modulus&, const Modulus&) = default;
  friend Modulus factor_modulus(u64 n);

 private:
  Modulus(u64 n, unsigned k, unsigned l, unsigned m) : n_(n), k_(k), l_(l), m_(m) {}

  u64 n_;
  unsigned k_;
  unsigned l_;
  unsigned m_;
};

/// Splits n into powers of 2, 3, 5. Throws UnsupportedModulus otherwise.
Modulus factor_modulus(u64 n);

/// True iff n >= 2 and n has no prime factor other than 2, 3, 5.
bool is_supported_modulus(u64 n) noexcept;

struct Residue {
  u64 value;
  u64 modulus;

  static Residue of(std::int64_t x, u64 modulus) { return {reduce_signed(x, modulus), modulus}; }

  friend bool operator==(const Residue&, const Residue&) = default;
};

std::vector<Residue> crt_split(Residue a, const Modulus& mod);

/// Inverse of crt_split. Component moduli must be exactly mod.components()
/// in order; throws ComponentMismatch otherwise.
Residue crt_combine(const std::vector<Residue>& components, const Modulus& mod);

}  // namespace zhou
