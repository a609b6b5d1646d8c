#include "zhou/matz.hpp"

#include <numeric>
#include <string>
#include <utility>

#include "zhou/error.hpp"
#include "zhou/kernels.hpp"

namespace zhou {

MatZ::MatZ(u64 modulus, std::size_t dim) : modulus_(modulus), dim_(dim), data_(dim * dim, 0) {
  if (modulus < 2) throw std::invalid_argument("matrix modulus must be at least 2");
}

MatZ MatZ::identity(u64 modulus, std::size_t dim) {
  MatZ out(modulus, dim);
  for (std::size_t i = 0; i < dim; ++i) out.set(i, i, 1);
  return out;
}

MatZ MatZ::from_rows(u64 modulus, const std::vector<std::vector<std::int64_t>>& rows) {
  MatZ out(modulus, rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size())
      throw ShapeMismatch("row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) +
                          " entries, expected " + std::to_string(rows.size()));
    for (std::size_t c = 0; c < rows.size(); ++c) out.data_[r * out.dim_ + c] = reduce_signed(rows[r][c], modulus);
  }
  return out;
}

MatZ MatZ::from_rows(u64 modulus, std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  std::vector<std::vector<std::int64_t>> v;
  for (const auto& r : rows) v.emplace_back(r);
  return from_rows(modulus, v);
}

bool MatZ::is_zero() const noexcept {
  for (u64 x : data_)
    if (x != 0) return false;
  return true;
}

bool MatZ::is_upper_triangular() const noexcept {
  for (std::size_t r = 1; r < dim_; ++r)
    for (std::size_t c = 0; c < r; ++c)
      if ((*this)(r, c) != 0) return false;
  return true;
}

bool MatZ::is_diagonal() const noexcept {
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c)
      if (r != c && (*this)(r, c) != 0) return false;
  return true;
}

MatZ MatZ::reduce(u64 divisor) const {
  if (divisor == 0 || modulus_ % divisor != 0)
    throw std::invalid_argument(std::to_string(divisor) + " does not divide " + std::to_string(modulus_));
  MatZ out(divisor, dim_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] % divisor;
  return out;
}

MatZ MatZ::embed(u64 multiple) const {
  if (multiple % modulus_ != 0)
    throw std::invalid_argument(std::to_string(modulus_) + " does not divide " + std::to_string(multiple));
  MatZ out(multiple, dim_);
  out.data_ = data_;
  return out;
}

std::vector<std::vector<u64>> MatZ::rows() const {
  std::vector<std::vector<u64>> out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) out[r].assign(data_.begin() + r * dim_, data_.begin() + (r + 1) * dim_);
  return out;
}

namespace {

void require_same_shape(const MatZ& a, const MatZ& b, const char* op) {
  if (a.modulus() != b.modulus() || a.dim() != b.dim())
    throw ShapeMismatch(std::string(op) + ": operands are " + std::to_string(a.dim()) + "x" +
                        std::to_string(a.dim()) + " mod " + std::to_string(a.modulus()) + " and " +
                        std::to_string(b.dim()) + "x" + std::to_string(b.dim()) + " mod " +
                        std::to_string(b.modulus()));
}

}  // namespace

MatZ mat_add(const MatZ& a, const MatZ& b) {
  require_same_shape(a, b, "mat_add");
  MatZ out(a.modulus(), a.dim());
  auto o = out.data();
  auto x = a.data(), y = b.data();
  for (std::size_t i = 0; i < o.size(); ++i) o[i] = add_mod(x[i], y[i], a.modulus());
  return out;
}

MatZ mat_sub(const MatZ& a, const MatZ& b) {
  require_same_shape(a, b, "mat_sub");
  MatZ out(a.modulus(), a.dim());
  auto o = out.data();
  auto x = a.data(), y = b.data();
  for (std::size_t i = 0; i < o.size(); ++i) o[i] = sub_mod(x[i], y[i], a.modulus());
  return out;
}

MatZ mat_mul(const MatZ& a, const MatZ& b) {
  require_same_shape(a, b, "mat_mul");
  MatZ out(a.modulus(), a.dim());
  kernels::mul(a.data(), b.data(), out.data(), a.dim(), a.modulus());
  return out;
}

MatZ mat_pow(const MatZ& a, u64 e) {
  MatZ result = MatZ::identity(a.modulus(), a.dim());
  MatZ base = a;
  while (e > 0) {
    if (e & 1) result = mat_mul(result, base);
    e >>= 1;
    if (e > 0) base = mat_mul(base, base);
  }
  return result;
}

MatZ mat_neg(const MatZ& a) {
  MatZ out(a.modulus(), a.dim());
  auto o = out.data();
  auto x = a.data();
  for (std::size_t i = 0; i < o.size(); ++i) o[i] = neg_mod(x[i], a.modulus());
  return out;
}

MatZ mat_scale(const MatZ& a, u64 s) {
  MatZ out(a.modulus(), a.dim());
  auto o = out.data();
  auto x = a.data();
  s %= a.modulus();
  for (std::size_t i = 0; i < o.size(); ++i) o[i] = mul_mod(x[i], s, a.modulus());
  return out;
}

bool is_tripotent(const MatZ& a) {
  const MatZ sq = mat_mul(a, a);
  return mat_mul(sq, a) == a;
}

bool is_idempotent(const MatZ& a) { return mat_mul(a, a) == a; }

bool is_nilpotent(const MatZ& a) {
  const Modulus mod = factor_modulus(a.modulus());
  for (const auto& pp : mod.components())
    if (!mat_pow(a.reduce(pp.p), a.dim()).is_zero()) return false;
  return true;
}

u64 nilpotency_bound(std::size_t dim, const Modulus& mod) { return static_cast<u64>(dim) * mod.max_exponent(); }

std::vector<MatZ> crt_split_matrix(const MatZ& a, const Modulus& mod) {
  if (a.modulus() != mod.n())
    throw ComponentMismatch("matrix modulus " + std::to_string(a.modulus()) + " differs from " +
                            std::to_string(mod.n()));
  std::vector<MatZ> out;
  for (const auto& pp : mod.components()) out.push_back(a.reduce(pp.q));
  return out;
}

MatZ crt_combine_matrix(const std::vector<MatZ>& components, const Modulus& mod) {
  const auto pps = mod.components();
  if (components.size() != pps.size())
    throw ComponentMismatch("expected " + std::to_string(pps.size()) + " matrix components, got " +
                            std::to_string(components.size()));
  const std::size_t d = components.front().dim();
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (components[i].modulus() != pps[i].q)
      throw ComponentMismatch("matrix component " + std::to_string(i) + " has modulus " +
                              std::to_string(components[i].modulus()) + ", expected " + std::to_string(pps[i].q));
    if (components[i].dim() != d) throw ShapeMismatch("CRT matrix components differ in dimension");
  }
  MatZ out(mod.n(), d);
  std::vector<Residue> parts(pps.size());
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) {
      for (std::size_t i = 0; i < pps.size(); ++i) parts[i] = {components[i](r, c), pps[i].q};
      out.set(r, c, crt_combine(parts, mod).value);
    }
  return out;
}

MatZ direct_sum(std::span<const MatZ> blocks) {
  if (blocks.empty()) throw EmptyInput("direct_sum of no blocks");
  const u64 m = blocks.front().modulus();
  std::size_t total = 0;
  for (const auto& b : blocks) {
    if (b.modulus() != m) throw ShapeMismatch("direct_sum blocks have different moduli");
    total += b.dim();
  }
  MatZ out(m, total);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.dim(); ++r)
      for (std::size_t c = 0; c < b.dim(); ++c) out.set(off + r, off + c, b(r, c));
    off += b.dim();
  }
  return out;
}

MatZ invert_unit_matrix(const MatZ& a) {
  const u64 m = a.modulus();
  const std::size_t d = a.dim();
  // Augmented [A | I], reduced to [I | A^-1]. Over a prime power an entry is a
  // unit iff p does not divide it, and some column entry is one iff det is.
  const std::size_t w = 2 * d;
  std::vector<u64> t(d * w, 0);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) t[r * w + c] = a(r, c);
    t[r * w + d + r] = 1 % m;
  }
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t piv = d;
    for (std::size_t r = col; r < d; ++r)
      if (std::gcd(t[r * w + col], m) == 1) {
        piv = r;
        break;
      }
    if (piv == d)
      throw NotAUnit("matrix is not invertible modulo " + std::to_string(m) + " (no unit pivot in column " +
                     std::to_string(col) + ")");
    if (piv != col)
      for (std::size_t c = 0; c < w; ++c) std::swap(t[piv * w + c], t[col * w + c]);
    const u64 inv = inv_mod(t[col * w + col], m);
    for (std::size_t c = 0; c < w; ++c) t[col * w + c] = mul_mod(t[col * w + c], inv, m);
    for (std::size_t r = 0; r < d; ++r) {
      if (r == col) continue;
      const u64 f = t[r * w + col];
      if (f == 0) continue;
      for (std::size_t c = 0; c < w; ++c) t[r * w + c] = sub_mod(t[r * w + c], mul_mod(f, t[col * w + c], m), m);
    }
  }
  MatZ out(m, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) out.set(r, c, t[r * w + d + c]);
  return out;
}

}  // namespace zhou
