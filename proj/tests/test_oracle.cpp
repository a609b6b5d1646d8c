#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "support.hpp"
#include "zhou/decompose.hpp"
#include "zhou/error.hpp"
#include "zhou/oracle.hpp"

using namespace zhou;
using namespace zhou::oracle;

namespace {

std::vector<u64> scalars(const std::vector<MatZ>& ms) {
  std::vector<u64> out;
  for (const auto& m : ms) out.push_back(m(0, 0));
  return out;
}

}  // namespace

TEST_CASE("enumerate_tripotents examples") {
  CHECK(scalars(enumerate_tripotents(3, 1)) == std::vector<u64>{0, 1, 2});
  CHECK(scalars(enumerate_tripotents(9, 1)) == std::vector<u64>{0, 1, 8});

  const auto t22 = enumerate_tripotents(2, 2);
  CHECK(std::find(t22.begin(), t22.end(), MatZ::from_rows(2, {{1, 1}, {0, 1}})) != t22.end());
  std::size_t idempotents = 0;
  for (const auto& m : t22) idempotents += is_idempotent(m);
  CHECK(idempotents == 8);
  CHECK(std::is_sorted(t22.begin(), t22.end(), [](const MatZ& a, const MatZ& b) {
    return std::lexicographical_compare(a.data().begin(), a.data().end(), b.data().begin(), b.data().end());
  }));
}

TEST_CASE("count_tripotents") {
  CHECK(count_tripotents(3, 1) == 3);
  // 2 * 3 * 3 from the prime components 2, 3, 5.
  CHECK(count_tripotents(30, 1) == 18);
  // Minimal polynomial divides x(x+1)^2 over F_2: 0, I, 3 unipotents != I,
  // and 6 rank-one idempotents.
  CHECK(count_tripotents(2, 2) == 11);
}

TEST_CASE("counts are multiplicative across coprime moduli") {
  for (auto [a, b] : {std::pair<u64, u64>{2, 3}, {3, 5}, {4, 9}, {8, 25}, {2, 15}}) {
    CHECK(count_tripotents(a * b, 1) == count_tripotents(a, 1) * count_tripotents(b, 1));
  }
  CHECK(count_tripotents(6, 2) == count_tripotents(2, 2) * count_tripotents(3, 2));
  CHECK(count_tripotents(10, 2) == count_tripotents(2, 2) * count_tripotents(5, 2));
}

TEST_CASE("parallel enumeration matches the serial twin") {
  for (auto [m, d] : {std::pair<u64, std::size_t>{6, 2}, {2, 3}, {30, 1}, {4, 2}})
    CHECK(enumerate_tripotents(m, d) == enumerate_tripotents_serial(m, d));
}

TEST_CASE("budget guard") {
  CHECK_THROWS_AS(enumerate_tripotents(30, 3), BudgetExceeded);
  CHECK_THROWS_AS(enumerate_tripotents(3, 2, 80), BudgetExceeded);
  CHECK_NOTHROW(enumerate_tripotents(3, 2, 81));
  CHECK(candidate_count(360, 10) == UINT64_MAX);
}

TEST_CASE("brute_nilpotent agrees with the library predicate") {
  for (const auto& a : testing::all_matrices(6, 2)) CHECK(brute_nilpotent(a) == is_nilpotent(a));
  CHECK(brute_nilpotent(MatZ::from_rows(8, {{2}})));
  CHECK_FALSE(brute_nilpotent(MatZ::from_rows(7, {{3}})));
}

TEST_CASE("oracle_decompose") {
  const auto zero = oracle_decompose(MatZ(6, 2));
  REQUIRE(zero.has_value());
  CHECK(zero->t1.is_zero());
  CHECK(zero->t2.is_zero());
  CHECK(zero->nil.is_zero());

  const auto trip3 = enumerate_tripotents(3, 2);
  std::size_t found = 0;
  for (const auto& a : testing::all_matrices(3, 2)) {
    auto d = oracle_decompose(a, trip3);
    if (d && verify(a, *d).all_ok()) ++found;
  }
  CHECK(found == 81);

  const auto trip30 = enumerate_tripotents(30, 1);
  found = 0;
  for (std::int64_t a = 0; a < 30; ++a) found += oracle_decompose(MatZ::from_rows(30, {{a}}), trip30).has_value();
  CHECK(found == 30);

  // Z_7 has only the zero nilpotent and tripotents {0, 1, 6}; 3 is not a sum of two.
  CHECK_FALSE(oracle_decompose(MatZ::from_rows(7, {{3}})).has_value());
}
