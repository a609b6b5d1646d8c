#include "zhou/companion.hpp"

#include "zhou/error.hpp"

namespace zhou {

namespace {

struct CaseRow {
  u64 last;
  int e1_bottom;  // +1 or -1
  int e2_corner;  // -1, 0 or +1
};

constexpr CaseRow kCasesF2[] = {{0, 1, 1}, {1, 1, 0}};
constexpr CaseRow kCasesF3[] = {{0, 1, -1}, {1, 1, 0}, {2, 1, 1}};
constexpr CaseRow kCasesF5[] = {{0, 1, -1}, {1, 1, 0}, {4, -1, 0}, {2, 1, 1}, {3, -1, -1}};

template <std::size_t N>
int find_case(const CaseRow (&table)[N], u64 last, CaseRow& out) {
  for (std::size_t i = 0; i < N; ++i)
    if (table[i].last == last) {
      out = table[i];
      return static_cast<int>(i) + 1;
    }
  return 0;
}

}  // namespace

CompanionSplit decompose_companion(const CompanionBlock& block) {
  const u64 p = block.p;
  const std::size_t n = block.size();
  if (n == 0) throw EmptyInput("companion block with no coefficients");
  const u64 last = block.last() % p;

  CaseRow row{};
  int number = 0;
  switch (p) {
    case 2: number = find_case(kCasesF2, last, row); break;
    case 3: number = find_case(kCasesF3, last, row); break;
    case 5: number = find_case(kCasesF5, last, row); break;
    default: throw UnsupportedModulus(p, p);
  }

  MatZ e1(p, n), e2(p, n), shift(p, n);
  for (std::size_t i = 0; i + 1 < n; ++i) e1.set(i, n - 1, block.c[i]);
  e1.set(n - 1, n - 1, reduce_signed(row.e1_bottom, p));
  e2.set(n - 1, n - 1, reduce_signed(row.e2_corner, p));
  for (std::size_t i = 1; i < n; ++i) shift.set(i, i - 1, 1);

  const bool idempotent = is_idempotent(e1) && is_idempotent(e2);
  return {std::move(e1), std::move(e2), std::move(shift), number, idempotent};
}

}  // namespace zhou
