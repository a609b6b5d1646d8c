#include "zhou/kernels.hpp"

#include <algorithm>
#include <vector>

namespace zhou::kernels {

namespace {

// One output row. The i-k-j order streams rows of b; for moduli below 2^32
// products fit in 64 bits and are summed lazily in 128 bits.
inline void mul_row(const u64* a_row, const u64* b, u64* c_row, std::size_t d, u64 m, u128* acc) {
  std::fill(acc, acc + d, u128{0});
  for (std::size_t k = 0; k < d; ++k) {
    const u64 aik = a_row[k];
    if (aik == 0) continue;
    const u64* b_row = b + k * d;
    if (m <= 0xFFFFFFFFull) {
      for (std::size_t j = 0; j < d; ++j) acc[j] += static_cast<u64>(aik * b_row[j]);
    } else {
      for (std::size_t j = 0; j < d; ++j) acc[j] += static_cast<u128>(mul_mod(aik, b_row[j], m));
    }
  }
  for (std::size_t j = 0; j < d; ++j) c_row[j] = static_cast<u64>(acc[j] % m);
}

}  // namespace

void mul_serial(std::span<const u64> a, std::span<const u64> b, std::span<u64> c, std::size_t d, u64 m) {
  std::vector<u128> acc(d);
  for (std::size_t i = 0; i < d; ++i) mul_row(a.data() + i * d, b.data(), c.data() + i * d, d, m, acc.data());
}

void mul_parallel(std::span<const u64> a, std::span<const u64> b, std::span<u64> c, std::size_t d, u64 m) {
  const auto rows = static_cast<long long>(d);
#pragma omp parallel
  {
    std::vector<u128> acc(d);
#pragma omp for schedule(static)
    for (long long i = 0; i < rows; ++i) {
      const auto r = static_cast<std::size_t>(i);
      mul_row(a.data() + r * d, b.data(), c.data() + r * d, d, m, acc.data());
    }
  }
}

void mul(std::span<const u64> a, std::span<const u64> b, std::span<u64> c, std::size_t d, u64 m) {
  if (d >= kParallelMulThreshold)
    mul_parallel(a, b, c, d, m);
  else
    mul_serial(a, b, c, d, m);
}

}  // namespace zhou::kernels
