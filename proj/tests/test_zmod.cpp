#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limits>
#include <random>

#include "zhou/error.hpp"
#include "zhou/zmod.hpp"

using namespace zhou;

TEST_CASE("factor_modulus splits into powers of 2, 3, 5") {
  auto m = factor_modulus(30);
  CHECK(m.n() == 30);
  CHECK(m.k() == 1);
  CHECK(m.l() == 1);
  CHECK(m.m() == 1);

  m = factor_modulus(360);
  CHECK(m.k() == 3);
  CHECK(m.l() == 2);
  CHECK(m.m() == 1);
  CHECK(m.max_exponent() == 3);

  m = factor_modulus(45);
  REQUIRE(m.components().size() == 2);
  CHECK(m.components()[0] == PrimePower{3, 2, 9});
  CHECK(m.components()[1] == PrimePower{5, 1, 5});
}

TEST_CASE("factor_modulus rejects other primes") {
  try {
    factor_modulus(7);
    FAIL("7 accepted");
  } catch (const UnsupportedModulus& e) {
    CHECK(e.offending_factor() == 7);
  }
  try {
    factor_modulus(2 * 3 * 49);
    FAIL("294 accepted");
  } catch (const UnsupportedModulus& e) {
    CHECK(e.offending_factor() == 7);
  }
  CHECK_THROWS_AS(factor_modulus(1), UnsupportedModulus);
  CHECK_THROWS_AS(factor_modulus(0), UnsupportedModulus);
  CHECK_THROWS_AS(factor_modulus(11 * 13), UnsupportedModulus);
}

TEST_CASE("factor_modulus succeeds exactly on 5-smooth integers up to 10^4") {
  for (u64 n = 2; n <= 10'000; ++n) {
    // Independent smoothness test: every prime factor found by trial division is <= 5.
    bool smooth = true;
    u64 x = n;
    for (u64 d = 2; d * d <= x; ++d)
      while (x % d == 0) {
        if (d > 5) smooth = false;
        x /= d;
      }
    if (x > 5) smooth = false;

    bool accepted = true;
    try {
      const auto m = factor_modulus(n);
      u64 back = 1;
      for (const auto& pp : m.components()) back *= pp.q;
      CHECK(back == n);
    } catch (const UnsupportedModulus&) {
      accepted = false;
    }
    CHECK(accepted == smooth);
    CHECK(is_supported_modulus(n) == smooth);
  }
}

TEST_CASE("crt_split examples") {
  const auto m30 = factor_modulus(30);
  CHECK(crt_split({7, 30}, m30) == std::vector<Residue>{{1, 2}, {1, 3}, {2, 5}});
  CHECK(crt_split({0, 360}, factor_modulus(360)) == std::vector<Residue>{{0, 8}, {0, 9}, {0, 5}});
  CHECK(crt_split({17, 45}, factor_modulus(45)) == std::vector<Residue>{{8, 9}, {2, 5}});
}

TEST_CASE("crt_combine examples") {
  const auto m30 = factor_modulus(30);
  CHECK(crt_combine({{1, 2}, {1, 3}, {2, 5}}, m30) == Residue{7, 30});
  CHECK(crt_combine({{0, 8}, {0, 9}, {0, 5}}, factor_modulus(360)) == Residue{0, 360});

  // Scan oracle for (1 mod 2, 0 mod 3, 0 mod 5).
  u64 expected = 30;
  for (u64 x = 0; x < 30; ++x)
    if (x % 2 == 1 && x % 3 == 0 && x % 5 == 0) expected = x;
  REQUIRE(expected == 15);
  CHECK(crt_combine({{1, 2}, {0, 3}, {0, 5}}, m30) == Residue{expected, 30});
}

TEST_CASE("crt_combine rejects mismatched components") {
  const auto m30 = factor_modulus(30);
  CHECK_THROWS_AS(crt_combine({{1, 2}, {1, 3}}, m30), ComponentMismatch);
  CHECK_THROWS_AS(crt_combine({{1, 2}, {1, 5}, {2, 3}}, m30), ComponentMismatch);
  CHECK_THROWS_AS(crt_combine({{1, 4}, {1, 3}, {2, 5}}, m30), ComponentMismatch);
}

TEST_CASE("crt round trip over every residue") {
  for (u64 n : {2, 6, 12, 30, 45, 60, 360, 1000, 3600}) {
    const auto mod = factor_modulus(n);
    for (u64 a = 0; a < n; ++a) CHECK(crt_combine(crt_split({a, n}, mod), mod) == Residue{a, n});
  }
}

namespace {

// Shift-and-add reference, no 128-bit products.
u64 slow_mul_mod(u64 a, u64 b, u64 m) {
  u64 result = 0;
  a %= m;
  while (b > 0) {
    if (b & 1) result = (result >= m - a) ? result - (m - a) : result + a;
    a = (a >= m - a) ? a - (m - a) : a + a;
    b >>= 1;
  }
  return result;
}

}  // namespace

TEST_CASE("modular arithmetic matches a wide reference") {
  std::mt19937_64 rng(7);
  const u64 big = factor_modulus(u64{1} << 62).n() * 3;  // 3 * 2^62 < 2^64
  for (u64 m : {u64{2}, u64{360}, u64{1} << 32, big, u64{3486784401}}) {
    for (int i = 0; i < 2000; ++i) {
      const u64 a = rng() % m, b = rng() % m;
      CHECK(mul_mod(a, b, m) == slow_mul_mod(a, b, m));
      const u128 sum = static_cast<u128>(a) + b;
      CHECK(add_mod(a, b, m) == static_cast<u64>(sum % m));
      CHECK(add_mod(sub_mod(a, b, m), b, m) == a);
    }
  }
}

TEST_CASE("signed reduction and inverses") {
  CHECK(reduce_signed(-1, 5) == 4);
  CHECK(reduce_signed(-10, 5) == 0);
  CHECK(reduce_signed(std::numeric_limits<std::int64_t>::min(), 3) == 1);  // -2^63 = 3*(-3074457345618258603) + 1
  CHECK(reduce_signed(17, 5) == 2);
  CHECK(inv_mod(2, 5) == 3);
  CHECK(inv_mod(7, 360) * 7 % 360 == 1);
  CHECK_THROWS_AS(inv_mod(6, 9), NotAUnit);
  CHECK(Residue::of(-1, 30) == Residue{29, 30});
}
