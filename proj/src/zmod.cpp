#include "zhou/zmod.hpp"

#include <string>

namespace zhou {

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

u64 inv_mod(u64 a, u64 m) {
  // Extended Euclid on signed 128-bit to stay clear of overflow.
  __int128 r0 = static_cast<__int128>(m), r1 = static_cast<__int128>(a % m);
  __int128 s0 = 0, s1 = 1;
  while (r1 != 0) {
    __int128 q = r0 / r1;
    __int128 t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1) throw NotAUnit(std::to_string(a) + " is not a unit modulo " + std::to_string(m));
  __int128 mm = static_cast<__int128>(m);
  s0 %= mm;
  if (s0 < 0) s0 += mm;
  return static_cast<u64>(s0);
}

std::vector<PrimePower> Modulus::components() const {
  std::vector<PrimePower> out;
  const unsigned exps[3] = {k_, l_, m_};
  const u64 primes[3] = {2, 3, 5};
  for (int i = 0; i < 3; ++i) {
    if (exps[i] == 0) continue;
    u64 q = 1;
    for (unsigned j = 0; j < exps[i]; ++j) q *= primes[i];
    out.push_back({primes[i], exps[i], q});
  }
  return out;
}

unsigned Modulus::max_exponent() const noexcept {
  unsigned e = k_;
  if (l_ > e) e = l_;
  if (m_ > e) e = m_;
  return e;
}

namespace {

u64 smallest_prime_factor(u64 x) {
  for (u64 d = 7; d <= 1'000'000 && d * d <= x; d += 2)
    if (x % d == 0) return d;
  return x;
}

}  // namespace

Modulus factor_modulus(u64 n) {
  if (n < 2) throw UnsupportedModulus(n, 0);
  u64 rest = n;
  unsigned exps[3] = {0, 0, 0};
  const u64 primes[3] = {2, 3, 5};
  for (int i = 0; i < 3; ++i)
    while (rest % primes[i] == 0) {
      rest /= primes[i];
      ++exps[i];
    }
  if (rest != 1) throw UnsupportedModulus(n, smallest_prime_factor(rest));
  return Modulus(n, exps[0], exps[1], exps[2]);
}

bool is_supported_modulus(u64 n) noexcept {
  if (n < 2) return false;
  for (u64 p : {2u, 3u, 5u})
    while (n % p == 0) n /= p;
  return n == 1;
}

std::vector<Residue> crt_split(Residue a, const Modulus& mod) {
  std::vector<Residue> out;
  for (const auto& pp : mod.components()) out.push_back({a.value % pp.q, pp.q});
  return out;
}

Residue crt_combine(const std::vector<Residue>& components, const Modulus& mod) {
  const auto pps = mod.components();
  if (components.size() != pps.size())
    throw ComponentMismatch("expected " + std::to_string(pps.size()) + " CRT components, got " +
                            std::to_string(components.size()));
  const u64 n = mod.n();
  u64 x = 0;
  for (std::size_t i = 0; i < pps.size(); ++i) {
    if (components[i].modulus != pps[i].q)
      throw ComponentMismatch("CRT component " + std::to_string(i) + " has modulus " +
                              std::to_string(components[i].modulus) + ", expected " + std::to_string(pps[i].q));
    const u64 cofactor = n / pps[i].q;
    const u64 basis = mul_mod(cofactor, inv_mod(cofactor % pps[i].q, pps[i].q), n);
    x = add_mod(x, mul_mod(components[i].value % pps[i].q, basis, n), n);
  }
  return {x, n};
}

}  // namespace zhou
