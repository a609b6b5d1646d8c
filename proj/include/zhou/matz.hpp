#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "zhou/zmod.hpp"

namespace zhou {

/// Dense square matrix over Z_m with canonical entries in [0, m), row-major.
class MatZ {
 public:
  /// Zero matrix.
  MatZ(u64 modulus, std::size_t dim);

  static MatZ identity(u64 modulus, std::size_t dim);
  /// Signed entries are reduced into [0, modulus). Rows must form a square.
  static MatZ from_rows(u64 modulus, const std::vector<std::vector<std::int64_t>>& rows);
  static MatZ from_rows(u64 modulus, std::initializer_list<std::initializer_list<std::int64_t>> rows);

  u64 modulus() const noexcept { return modulus_; }
  std::size_t dim() const noexcept { return dim_; }

  u64 operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }
  /// Stores value mod modulus().
  void set(std::size_t r, std::size_t c, u64 value) { data_[r * dim_ + c] = value % modulus_; }

  std::span<const u64> data() const noexcept { return data_; }
  std::span<u64> data() noexcept { return data_; }

  bool is_zero() const noexcept;
  bool is_upper_triangular() const noexcept;
  bool is_diagonal() const noexcept;

  /// Entries reduced modulo a divisor of modulus().
  MatZ reduce(u64 divisor) const;
  /// Same canonical entries reinterpreted over a multiple of modulus().
  MatZ embed(u64 multiple) const;

  std::vector<std::vector<u64>> rows() const;

  friend bool operator==(const MatZ&, const MatZ&) = default;

 private:
  u64 modulus_;
  std::size_t dim_;
  std::vector<u64> data_;
};

MatZ mat_add(const MatZ& a, const MatZ& b);
MatZ mat_sub(const MatZ& a, const MatZ& b);
MatZ mat_mul(const MatZ& a, const MatZ& b);
MatZ mat_pow(const MatZ& a, u64 e);
MatZ mat_neg(const MatZ& a);
MatZ mat_scale(const MatZ& a, u64 s);

inline MatZ operator+(const MatZ& a, const MatZ& b) { return mat_add(a, b); }
inline MatZ operator-(const MatZ& a, const MatZ& b) { return mat_sub(a, b); }
inline MatZ operator*(const MatZ& a, const MatZ& b) { return mat_mul(a, b); }

bool is_tripotent(const MatZ& a);
bool is_idempotent(const MatZ& a);

/// Decided on the reductions mod each prime p | modulus: (A mod p)^dim = 0.
/// Throws UnsupportedModulus unless the modulus is 2^k 3^l 5^m.
bool is_nilpotent(const MatZ& a);

/// Index bound dim * max-exponent for a nilpotent matrix over the given modulus.
u64 nilpotency_bound(std::size_t dim, const Modulus& mod);

std::vector<MatZ> crt_split_matrix(const MatZ& a, const Modulus& mod);
MatZ crt_combine_matrix(const std::vector<MatZ>& components, const Modulus& mod);

/// Block-diagonal assembly. Throws EmptyInput on an empty list.
MatZ direct_sum(std::span<const MatZ> blocks);

/// Inverse over a prime power p^e by elimination on unit pivots.
/// Throws NotAUnit when no unit pivot exists, i.e. det(A) = 0 mod p.
MatZ invert_unit_matrix(const MatZ& a);

}  // namespace zhou
