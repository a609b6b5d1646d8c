#pragma once

// Test-only helpers. Everything here is written from scratch so it can serve
// as an independent reference for the library.

#include <cstdint>
#include <random>
#include <vector>

#include "zhou/matz.hpp"

namespace zhou::testing {

inline MatZ random_matrix(std::mt19937_64& rng, u64 modulus, std::size_t dim) {
  MatZ a(modulus, dim);
  for (auto& x : a.data()) x = rng() % modulus;
  return a;
}

inline MatZ random_upper(std::mt19937_64& rng, u64 modulus, std::size_t dim) {
  MatZ a(modulus, dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = r; c < dim; ++c) a.set(r, c, rng() % modulus);
  return a;
}

/// Plain triple loop, reduced per product.
inline MatZ naive_mul(const MatZ& a, const MatZ& b) {
  const u64 m = a.modulus();
  MatZ c(m, a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      u64 acc = 0;
      for (std::size_t k = 0; k < a.dim(); ++k)
        acc = static_cast<u64>((static_cast<unsigned __int128>(a(i, k)) * b(k, j) + acc) % m);
      c.set(i, j, acc);
    }
  return c;
}

/// Nilpotent iff some power up to dim * log2(modulus) vanishes.
inline bool naive_nilpotent(const MatZ& a) {
  unsigned log2m = 0;
  for (u64 x = a.modulus(); x > 1; x >>= 1) ++log2m;
  MatZ p = a;
  for (std::size_t i = 1; i <= a.dim() * log2m; ++i) {
    if (p.is_zero()) return true;
    p = naive_mul(p, a);
  }
  return p.is_zero();
}

/// A random matrix that is a unit mod p: lower unitriangular times upper
/// triangular with nonzero diagonal, with a random row swap.
inline MatZ random_unit(std::mt19937_64& rng, u64 modulus, u64 p, std::size_t dim) {
  MatZ l = MatZ::identity(modulus, dim), u(modulus, dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) {
      if (c < r) l.set(r, c, rng() % modulus);
      if (c > r) u.set(r, c, rng() % modulus);
      if (c == r) {
        u64 x;
        do x = rng() % modulus;
        while (x % p == 0);
        u.set(r, c, x);
      }
    }
  MatZ out = naive_mul(l, u);
  if (dim > 1) {
    const std::size_t i = rng() % dim, j = rng() % dim;
    for (std::size_t c = 0; c < dim; ++c) {
      const u64 t = out(i, c);
      out.set(i, c, out(j, c));
      out.set(j, c, t);
    }
  }
  return out;
}

/// Every matrix of M_dim(Z_modulus), lexicographic row-major order.
inline std::vector<MatZ> all_matrices(u64 modulus, std::size_t dim) {
  std::vector<MatZ> out;
  std::size_t cells = dim * dim;
  u64 total = 1;
  for (std::size_t i = 0; i < cells; ++i) total *= modulus;
  for (u64 idx = 0; idx < total; ++idx) {
    MatZ a(modulus, dim);
    u64 rest = idx;
    for (std::size_t k = cells; k-- > 0;) {
      a.data()[k] = rest % modulus;
      rest /= modulus;
    }
    out.push_back(std::move(a));
  }
  return out;
}

}  // namespace zhou::testing
