// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "support.hpp"
#include "zhou/companion.hpp"
#include "zhou/decompose.hpp"
#include "zhou/error.hpp"
#include "zhou/lift.hpp"
#include "zhou/oracle.hpp"
#include "zhou/rcf.hpp"

using namespace zhou;
using zhou::testing::all_matrices;
using zhou::testing::random_matrix;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

bool full_check(const MatZ& a, const Decomposition& d) {
  return verify(a, d).all_ok() && mat_pow(d.nil, d.nil_index_bound).is_zero();
}

bool decomposes(const MatZ& a) {
  try {
    return full_check(a, decompose_matrix(a));
  } catch (const std::exception&) {
    return false;
  }
}

std::size_t count_parallel(const std::vector<MatZ>& ms, const std::function<bool(const MatZ&)>& pred) {
  std::vector<char> ok(ms.size(), 0);
  const auto n = static_cast<long long>(ms.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (long long i = 0; i < n; ++i) ok[i] = pred(ms[i]);
  std::size_t total = 0;
  for (char c : ok) total += c;
  return total;
}

std::vector<CompanionBlock> all_blocks(u64 p, std::size_t max_n) {
  std::vector<CompanionBlock> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    u64 total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= p;
    for (u64 idx = 0; idx < total; ++idx) {
      CompanionBlock b{p, std::vector<u64>(n)};
      u64 rest = idx;
      for (auto& x : b.c) {
        x = rest % p;
        rest /= p;
      }
      out.push_back(std::move(b));
    }
  }
  return out;
}

bool split_ok(const CompanionBlock& b, const CompanionSplit& s) {
  return is_tripotent(s.e1) && is_tripotent(s.e2) && mat_pow(s.shift, b.size()).is_zero() &&
         s.e1 + s.e2 + s.shift == companion_matrix(b);
}

std::string ratio(std::size_t a, std::size_t b) { return std::to_string(a) + "/" + std::to_string(b); }

// 1. Every matrix in M_2(Z_3) and M_3(Z_3); companion E-sides tripotent.
Outcome criterion_z3_exhaustive() {
  const auto m2 = all_matrices(3, 2);
  const auto m3 = all_matrices(3, 3);
  const std::size_t ok2 = count_parallel(m2, decomposes);
  const std::size_t ok3 = count_parallel(m3, decomposes);
  std::size_t blocks_ok = 0;
  const auto blocks = all_blocks(3, 3);
  for (const auto& b : blocks) {
    const auto s = decompose_companion(b);
    blocks_ok += is_tripotent(s.e1) && is_tripotent(s.e2);
  }
  return {ok2 == 81 && m2.size() == 81 && ok3 == 19683 && m3.size() == 19683 && blocks_ok == blocks.size(),
          "M_2 " + ratio(ok2, m2.size()) + ", M_3 " + ratio(ok3, m3.size()) + ", blocks " +
              ratio(blocks_ok, blocks.size())};
}

// 2. All 155 companion blocks over F_5 with n <= 3, every case hit; 1000 random M_d(Z_5).
Outcome criterion_f5() {
  const auto blocks = all_blocks(5, 3);
  std::size_t ok = 0;
  std::set<int> cases;
  for (const auto& b : blocks) {
    const auto s = decompose_companion(b);
    const MatZ c = companion_matrix(b);
    ok += split_ok(b, s) && verify(c, {s.e1, s.e2, s.shift, 5, b.size()}).all_ok();
    cases.insert(s.case_number);
  }
  std::mt19937_64 rng(202);
  std::vector<MatZ> randoms;
  for (int i = 0; i < 1000; ++i) randoms.push_back(random_matrix(rng, 5, 1 + rng() % 5));
  const std::size_t rok = count_parallel(randoms, decomposes);
  return {blocks.size() == 155 && ok == 155 && cases == std::set<int>{1, 2, 3, 4, 5} && rok == 1000,
          "blocks " + ratio(ok, blocks.size()) + ", cases " + std::to_string(cases.size()) + "/5, random " +
              ratio(rok, 1000)};
}

// 3. 200 random matrices, d <= 4, for each listed modulus.
Outcome criterion_zn_end_to_end() {
  const std::vector<u64> moduli{2, 3, 4, 5, 6, 8, 9, 10, 12, 15, 30, 45, 60, 360};
  std::mt19937_64 rng(303);
  std::vector<MatZ> all;
  for (u64 n : moduli)
    for (int i = 0; i < 200; ++i) all.push_back(random_matrix(rng, n, 1 + rng() % 4));
  const std::size_t ok = count_parallel(all, decomposes);
  return {ok == all.size() && all.size() == 2800, ratio(ok, all.size()) + " over " + std::to_string(moduli.size()) + " moduli"};
}

// 4. Unsupported moduli are refused, never answered.
Outcome criterion_gate() {
  std::size_t refused = 0, total = 0;
  std::mt19937_64 rng(404);
  for (u64 n : {7, 11, 14, 21, 35}) {
    for (int i = 0; i < 10; ++i) {
      ++total;
      try {
        decompose_matrix(random_matrix(rng, n, 1 + rng() % 4));
      } catch (const UnsupportedModulus&) {
        ++refused;
      } catch (...) {
      }
    }
  }
  return {refused == total, ratio(refused, total) + " refused"};
}

// 5. Brute-force oracle finds a decomposition everywhere it is asked.
Outcome criterion_oracle() {
  std::string detail;
  bool ok = true;
  auto sweep = [&](u64 n, std::size_t d, std::size_t expected) {
    const auto trips = oracle::enumerate_tripotents(n, d);
    const auto ms = all_matrices(n, d);
    const std::size_t found = count_parallel(ms, [&](const MatZ& a) {
      auto r = oracle::oracle_decompose(a, trips);
      return r.has_value() && verify(a, *r).all_ok();
    });
    ok = ok && found == expected && ms.size() == expected;
    detail += (detail.empty() ? "" : ", ") + std::string("M_") + std::to_string(d) + "(Z_" + std::to_string(n) +
              ") " + ratio(found, ms.size());
  };
  sweep(3, 2, 81);
  sweep(2, 2, 16);
  sweep(6, 2, 1296);
  sweep(30, 1, 30);
  return {ok, detail};
}

// 6. Lifts are exact and reduce to their inputs.
Outcome criterion_lifting() {
  std::size_t good = 0, total = 0;
  for (auto [m, p] : {std::pair<u64, u64>{9, 3}, {27, 3}, {25, 5}}) {
    for (u64 x = 0; x < m; ++x) {
      if ((x % p) * (x % p) * (x % p) % p != x % p) continue;
      ++total;
      MatZ a(m, 1);
      a.set(0, 0, x);
      const MatZ t = lift_tripotent(a, p);
      good += is_tripotent(t) && t.reduce(p) == a.reduce(p);
    }
  }
  for (const auto& a : all_matrices(4, 2)) {
    if (!is_idempotent(a.reduce(2))) continue;
    ++total;
    const MatZ e = lift_idempotent(a);
    good += e * e == e && e.reduce(2) == a.reduce(2);
  }
  return {good == total && total > 0, ratio(good, total) + " lifts exact"};
}

// 7. Frobenius certificates on random matrices over F_2, F_3, F_5.
Outcome criterion_frobenius() {
  std::mt19937_64 rng(707);
  std::size_t good = 0, total = 0;
  for (u64 p : {2, 3, 5}) {
    for (int i = 0; i < 500; ++i) {
      ++total;
      const MatZ a = random_matrix(rng, p, 1 + rng() % 8);
      const auto f = frobenius_form(a);
      PolyFp product(p, {1});
      for (const auto& b : f.blocks) product = poly_mul(product, block_polynomial(b));
      good += f.P * f.block_diagonal() * f.Pinv == a && f.P * f.Pinv == MatZ::identity(p, a.dim()) &&
              product == char_poly(a);
    }
  }
  return {good == total, ratio(good, total) + " certificates"};
}

// 8. Upper-triangular elements of T_s(Z_30).
Outcome criterion_triangular() {
  std::mt19937_64 rng(808);
  std::size_t good = 0;
  for (int i = 0; i < 500; ++i) {
    const MatZ a = testing::random_upper(rng, 30, 1 + rng() % 5);
    const auto d = decompose_triangular(a);
    good += full_check(a, d) && d.t1.is_diagonal() && d.t2.is_diagonal();
  }
  return {good == 500, ratio(good, 500) + " verified with diagonal tripotents"};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit_seconds;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"1 M_2(Z_3), M_3(Z_3) exhaustive", 10, criterion_z3_exhaustive},
      {"2 F_5 companion cases + random M_d(Z_5)", 10, criterion_f5},
      {"3 Z_n end-to-end, 14 moduli", 60, criterion_zn_end_to_end},
      {"4 modulus gate", 1, criterion_gate},
      {"5 oracle equivalence", 60, criterion_oracle},
      {"6 lifting exactness", 30, criterion_lifting},
      {"7 Frobenius certificates", 30, criterion_frobenius},
      {"8 upper-triangular T_s(Z_30)", 10, criterion_triangular},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = out.ok && secs < c.limit_seconds;
    failures += !pass;
    std::printf("[%s] %-42s %s (%.2fs, limit %.0fs)\n", pass ? "PASS" : "FAIL", c.name, out.detail.c_str(), secs,
                c.limit_seconds);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
  return failures == 0 ? 0 : 1;
}
