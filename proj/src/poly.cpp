#include "zhou/poly.hpp"

#include <algorithm>

#include "zhou/error.hpp"

namespace zhou {

PolyFp::PolyFp(u64 p, std::vector<u64> coeffs) : p_(p), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c %= p_;
  trim();
}

PolyFp PolyFp::monomial(u64 p, std::size_t degree, u64 coeff) {
  std::vector<u64> c(degree + 1, 0);
  c[degree] = coeff;
  return PolyFp(p, std::move(c));
}

void PolyFp::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

PolyFp PolyFp::monic() const {
  if (is_zero()) return *this;
  const u64 inv = inv_mod(leading(), p_);
  std::vector<u64> c(coeffs_);
  for (auto& x : c) x = mul_mod(x, inv, p_);
  return PolyFp(p_, std::move(c));
}

std::string PolyFp::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (coeffs_[i] != 1 || i == 0) out += std::to_string(coeffs_[i]);
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

namespace {

void require_same_field(const PolyFp& a, const PolyFp& b) {
  if (a.prime() != b.prime()) throw std::invalid_argument("polynomials over different prime fields");
}

}  // namespace

PolyFp poly_add(const PolyFp& a, const PolyFp& b) {
  require_same_field(a, b);
  const u64 p = a.prime();
  std::vector<u64> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = add_mod(a.coeff(i), b.coeff(i), p);
  return PolyFp(p, std::move(c));
}

PolyFp poly_sub(const PolyFp& a, const PolyFp& b) {
  require_same_field(a, b);
  const u64 p = a.prime();
  std::vector<u64> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = sub_mod(a.coeff(i), b.coeff(i), p);
  return PolyFp(p, std::move(c));
}

PolyFp poly_mul(const PolyFp& a, const PolyFp& b) {
  require_same_field(a, b);
  const u64 p = a.prime();
  if (a.is_zero() || b.is_zero()) return PolyFp(p);
  std::vector<u64> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j)
      c[i + j] = add_mod(c[i + j], mul_mod(a.coeffs()[i], b.coeffs()[j], p), p);
  return PolyFp(p, std::move(c));
}

std::pair<PolyFp, PolyFp> poly_divmod(const PolyFp& a, const PolyFp& b) {
  require_same_field(a, b);
  if (b.is_zero()) throw DivisionByZeroPoly("polynomial division by zero");
  const u64 p = a.prime();
  if (a.degree() < b.degree()) return {PolyFp(p), a};
  std::vector<u64> r = a.coeffs();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<u64> q(r.size() - db, 0);
  const u64 inv_lead = inv_mod(b.leading(), p);
  for (std::size_t i = r.size(); i-- > db;) {
    const u64 f = mul_mod(r[i], inv_lead, p);
    if (f == 0) continue;
    q[i - db] = f;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] = sub_mod(r[i - db + j], mul_mod(f, b.coeffs()[j], p), p);
  }
  return {PolyFp(p, std::move(q)), PolyFp(p, std::move(r))};
}

PolyFp poly_gcd(const PolyFp& a, const PolyFp& b) {
  require_same_field(a, b);
  PolyFp x = a, y = b;
  while (!y.is_zero()) {
    PolyFp r = poly_divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

PolyFp poly_div_exact(const PolyFp& a, const PolyFp& b) {
  auto [q, r] = poly_divmod(a, b);
  if (!r.is_zero()) throw std::logic_error("poly_div_exact: " + b.to_string() + " does not divide " + a.to_string());
  return q;
}

}  // namespace zhou
