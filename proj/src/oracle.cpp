#include "zhou/oracle.hpp"

#include <string>

#include "zhou/error.hpp"

namespace zhou::oracle {

namespace {

std::vector<u64> naive_mul(const std::vector<u64>& a, const std::vector<u64>& b, std::size_t d, u64 m) {
  std::vector<u64> c(d * d, 0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      u128 acc = 0;
      for (std::size_t k = 0; k < d; ++k) acc += static_cast<u128>(a[i * d + k]) * b[k * d + j] % m;
      c[i * d + j] = static_cast<u64>(acc % m);
    }
  return c;
}

// Entries of candidate number `index`, most significant entry first.
std::vector<u64> decode(u64 index, u64 modulus, std::size_t cells) {
  std::vector<u64> e(cells, 0);
  for (std::size_t i = cells; i-- > 0;) {
    e[i] = index % modulus;
    index /= modulus;
  }
  return e;
}

bool naive_tripotent(const std::vector<u64>& e, std::size_t d, u64 m) {
  return naive_mul(naive_mul(e, e, d, m), e, d, m) == e;
}

MatZ to_mat(const std::vector<u64>& e, std::size_t d, u64 m) {
  MatZ out(m, d);
  for (std::size_t i = 0; i < e.size(); ++i) out.data()[i] = e[i];
  return out;
}

u64 checked_count(u64 modulus, std::size_t dim, u64 budget) {
  const u64 total = candidate_count(modulus, dim);
  if (total > budget)
    throw BudgetExceeded("M_" + std::to_string(dim) + "(Z_" + std::to_string(modulus) + ") has more than " +
                         std::to_string(budget) + " candidates");
  return total;
}

}  // namespace

u64 candidate_count(u64 modulus, std::size_t dim) {
  u64 total = 1;
  for (std::size_t i = 0; i < dim * dim; ++i) {
    if (total > UINT64_MAX / modulus) return UINT64_MAX;
    total *= modulus;
  }
  return total;
}

std::vector<MatZ> enumerate_tripotents_serial(u64 modulus, std::size_t dim, u64 budget) {
  const u64 total = checked_count(modulus, dim, budget);
  std::vector<MatZ> out;
  for (u64 idx = 0; idx < total; ++idx) {
    auto e = decode(idx, modulus, dim * dim);
    if (naive_tripotent(e, dim, modulus)) out.push_back(to_mat(e, dim, modulus));
  }
  return out;
}

std::vector<MatZ> enumerate_tripotents(u64 modulus, std::size_t dim, u64 budget) {
  const u64 total = checked_count(modulus, dim, budget);
  std::vector<char> hit(total, 0);
  const auto n = static_cast<long long>(total);
#pragma omp parallel for schedule(static)
  for (long long idx = 0; idx < n; ++idx)
    hit[idx] = naive_tripotent(decode(static_cast<u64>(idx), modulus, dim * dim), dim, modulus);
  std::vector<MatZ> out;
  for (u64 idx = 0; idx < total; ++idx)
    if (hit[idx]) out.push_back(to_mat(decode(idx, modulus, dim * dim), dim, modulus));
  return out;
}

std::size_t count_tripotents(u64 modulus, std::size_t dim, u64 budget) {
  return enumerate_tripotents(modulus, dim, budget).size();
}

bool brute_nilpotent(const MatZ& n) {
  const u64 m = n.modulus();
  const std::size_t d = n.dim();
  unsigned log2m = 0;
  for (u64 x = m; x > 1; x >>= 1) ++log2m;
  const u64 steps = static_cast<u64>(d) * log2m;
  const std::vector<u64> base(n.data().begin(), n.data().end());
  std::vector<u64> power = base;
  for (u64 i = 1; i < steps; ++i) {
    bool zero = true;
    for (u64 x : power) zero = zero && x == 0;
    if (zero) return true;
    power = naive_mul(power, base, d, m);
  }
  for (u64 x : power)
    if (x != 0) return false;
  return true;
}

std::optional<Decomposition> oracle_decompose(const MatZ& a, const std::vector<MatZ>& tripotents) {
  const u64 m = a.modulus();
  const std::size_t d = a.dim();
  unsigned log2m = 0;
  for (u64 x = m; x > 1; x >>= 1) ++log2m;
  for (const auto& t1 : tripotents) {
    const MatZ rest = a - t1;
    for (const auto& t2 : tripotents) {
      MatZ nil = rest - t2;
      if (brute_nilpotent(nil)) return Decomposition{t1, t2, std::move(nil), m, static_cast<u64>(d) * log2m};
    }
  }
  return std::nullopt;
}

std::optional<Decomposition> oracle_decompose(const MatZ& a, u64 budget) {
  return oracle_decompose(a, enumerate_tripotents(a.modulus(), a.dim(), budget));
}

}  // namespace zhou::oracle
