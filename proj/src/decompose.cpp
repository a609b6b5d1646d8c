#include "zhou/decompose.hpp"

#include <array>
#include <string>
#include <utility>

#include "zhou/companion.hpp"
#include "zhou/error.hpp"
#include "zhou/lift.hpp"
#include "zhou/rcf.hpp"

namespace zhou {

namespace {

MatZ lift_side(const MatZ& mod_p, const PrimePower& pp) {
  const MatZ start = mod_p.embed(pp.q);
  if (pp.e == 1) return start;
  return pp.p == 2 ? lift_idempotent(start) : lift_tripotent(start, pp.p);
}

struct Parts {
  MatZ t1;
  MatZ t2;
  MatZ nil;
};

Parts decompose_component(const MatZ& a, const PrimePower& pp) {
  const std::size_t d = a.dim();
  const MatZ a_mod_p = a.reduce(pp.p);
  if (mat_pow(a_mod_p, d).is_zero()) return {MatZ(pp.q, d), MatZ(pp.q, d), a};

  const FrobeniusForm form = frobenius_form(a_mod_p);
  std::vector<MatZ> e1_blocks, e2_blocks;
  for (const auto& block : form.blocks) {
    CompanionSplit split = decompose_companion(block);
    e1_blocks.push_back(std::move(split.e1));
    e2_blocks.push_back(std::move(split.e2));
  }
  const MatZ e1 = form.P * direct_sum(e1_blocks) * form.Pinv;
  const MatZ e2 = form.P * direct_sum(e2_blocks) * form.Pinv;

  MatZ t1 = lift_side(e1, pp);
  MatZ t2 = lift_side(e2, pp);
  MatZ nil = a - t1 - t2;
  return {std::move(t1), std::move(t2), std::move(nil)};
}

// Tripotent pair (t1, t2) in F_p with t1 + t2 = a mod p.
std::pair<std::int64_t, std::int64_t> scalar_pair(u64 a, u64 p) {
  switch (p) {
    case 2: return {static_cast<std::int64_t>(a), 0};
    case 3: {
      constexpr std::array<std::pair<int, int>, 3> table{{{0, 0}, {1, 0}, {1, 1}}};
      return table[a];
    }
    case 5: {
      constexpr std::array<std::pair<int, int>, 5> table{{{0, 0}, {1, 0}, {1, 1}, {-1, -1}, {-1, 0}}};
      return table[a];
    }
    default: throw UnsupportedModulus(p, p);
  }
}

// Scalar tripotents t1, t2 over Z_q for one component.
std::pair<u64, u64> scalar_component(u64 a, const PrimePower& pp) {
  const auto [s1, s2] = scalar_pair(a % pp.p, pp.p);
  auto lift = [&](std::int64_t s) {
    MatZ m(pp.q, 1);
    m.set(0, 0, reduce_signed(s, pp.q));
    return lift_side(m.reduce(pp.p), pp)(0, 0);
  };
  return {lift(s1), lift(s2)};
}

}  // namespace

Decomposition decompose_matrix(const MatZ& a) {
  const Modulus mod = factor_modulus(a.modulus());
  const auto pps = mod.components();
  const auto components = crt_split_matrix(a, mod);
  std::vector<MatZ> t1s, t2s, nils;
  for (std::size_t i = 0; i < pps.size(); ++i) {
    Parts parts = decompose_component(components[i], pps[i]);
    t1s.push_back(std::move(parts.t1));
    t2s.push_back(std::move(parts.t2));
    nils.push_back(std::move(parts.nil));
  }
  return {crt_combine_matrix(t1s, mod), crt_combine_matrix(t2s, mod), crt_combine_matrix(nils, mod), mod.n(),
          nilpotency_bound(a.dim(), mod)};
}

Decomposition decompose_scalar(Residue a) {
  const Modulus mod = factor_modulus(a.modulus);
  std::vector<Residue> t1s, t2s;
  for (const auto& pp : mod.components()) {
    const auto [t1, t2] = scalar_component(a.value % pp.q, pp);
    t1s.push_back({t1, pp.q});
    t2s.push_back({t2, pp.q});
  }
  const u64 n = mod.n();
  const u64 t1 = crt_combine(t1s, mod).value;
  const u64 t2 = crt_combine(t2s, mod).value;
  MatZ m1(n, 1), m2(n, 1), w(n, 1);
  m1.set(0, 0, t1);
  m2.set(0, 0, t2);
  w.set(0, 0, sub_mod(sub_mod(a.value % n, t1, n), t2, n));
  return {std::move(m1), std::move(m2), std::move(w), n, nilpotency_bound(1, mod)};
}

Decomposition decompose_triangular(const MatZ& a) {
  const Modulus mod = factor_modulus(a.modulus());
  if (!a.is_upper_triangular()) throw NotUpperTriangular("input has nonzero entries below the diagonal");
  const std::size_t s = a.dim();
  const u64 n = mod.n();
  MatZ t1(n, s), t2(n, s);
  for (std::size_t i = 0; i < s; ++i) {
    const Decomposition diag = decompose_scalar({a(i, i), n});
    t1.set(i, i, diag.t1(0, 0));
    t2.set(i, i, diag.t2(0, 0));
  }
  MatZ nil = a - t1 - t2;
  return {std::move(t1), std::move(t2), std::move(nil), n, nilpotency_bound(s, mod)};
}

VerifyReport verify(const MatZ& a, const Decomposition& d) {
  for (const MatZ* part : {&d.t1, &d.t2, &d.nil})
    if (part->modulus() != a.modulus() || part->dim() != a.dim())
      throw ShapeMismatch("decomposition parts do not match the input's modulus and dimension");
  if (d.modulus != a.modulus()) throw ShapeMismatch("decomposition modulus does not match the input");

  VerifyReport report;
  report.sum_ok = d.t1 + d.t2 + d.nil == a;
  report.t1_tripotent = is_tripotent(d.t1);
  report.t2_tripotent = is_tripotent(d.t2);

  if (is_nilpotent(d.nil)) {
    MatZ power = d.nil;
    for (u64 j = 1; j <= d.nil_index_bound; ++j) {
      if (power.is_zero()) {
        report.observed_nil_index = j;
        break;
      }
      power = power * d.nil;
    }
  }
  report.n_nilpotent = report.observed_nil_index.has_value();
  return report;
}

}  // namespace zhou
