#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "zhou/zmod.hpp"

namespace zhou {

/// Polynomial over the prime field F_p, lowest degree first, no trailing zeros.
class PolyFp {
 public:
  explicit PolyFp(u64 p) : p_(p) {}
  /// Coefficients are reduced mod p and trailing zeros dropped.
  PolyFp(u64 p, std::vector<u64> coeffs);

  static PolyFp monomial(u64 p, std::size_t degree, u64 coeff = 1);

  u64 prime() const noexcept { return p_; }
  const std::vector<u64>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  u64 leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }
  u64 coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }

  PolyFp monic() const;
  std::string to_string() const;

  friend bool operator==(const PolyFp&, const PolyFp&) = default;

 private:
  void trim();

  u64 p_;
  std::vector<u64> coeffs_;
};

PolyFp poly_add(const PolyFp& a, const PolyFp& b);
PolyFp poly_sub(const PolyFp& a, const PolyFp& b);
PolyFp poly_mul(const PolyFp& a, const PolyFp& b);
/// (quotient, remainder) with deg r < deg b. Throws DivisionByZeroPoly.
std::pair<PolyFp, PolyFp> poly_divmod(const PolyFp& a, const PolyFp& b);
/// Monic gcd; gcd(0, 0) = 0.
PolyFp poly_gcd(const PolyFp& a, const PolyFp& b);
/// Exact quotient a / b; b must divide a.
PolyFp poly_div_exact(const PolyFp& a, const PolyFp& b);

}  // namespace zhou
