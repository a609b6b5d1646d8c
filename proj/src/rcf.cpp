#include "zhou/rcf.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace zhou {

MatZ companion_matrix(const CompanionBlock& block) {
  const std::size_t n = block.size();
  MatZ out(block.p, n);
  for (std::size_t i = 1; i < n; ++i) out.set(i, i - 1, 1);
  for (std::size_t i = 0; i < n; ++i) out.set(i, n - 1, block.c[i]);
  return out;
}

PolyFp block_polynomial(const CompanionBlock& block) {
  const u64 p = block.p;
  std::vector<u64> coeffs(block.size() + 1, 0);
  for (std::size_t i = 0; i < block.size(); ++i) coeffs[i] = neg_mod(block.c[i] % p, p);
  coeffs.back() = 1;
  return PolyFp(p, std::move(coeffs));
}

CompanionBlock companion_of(const PolyFp& monic) {
  if (monic.degree() < 1 || monic.leading() != 1)
    throw std::invalid_argument("companion_of needs a monic polynomial of degree >= 1");
  const u64 p = monic.prime();
  CompanionBlock b{p, std::vector<u64>(static_cast<std::size_t>(monic.degree()))};
  for (std::size_t i = 0; i < b.c.size(); ++i) b.c[i] = neg_mod(monic.coeff(i), p);
  return b;
}

MatZ FrobeniusForm::block_diagonal() const {
  std::vector<MatZ> mats;
  mats.reserve(blocks.size());
  for (const auto& b : blocks) mats.push_back(companion_matrix(b));
  return direct_sum(mats);
}

namespace {

using Vec = std::vector<u64>;

void require_prime_modulus(const MatZ& a) {
  const u64 p = a.modulus();
  for (u64 d = 2; d * d <= p; ++d)
    if (p % d == 0) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
}

Vec mat_vec(const MatZ& m, const Vec& v) {
  const u64 p = m.modulus();
  const std::size_t n = m.dim();
  Vec out(n, 0);
  for (std::size_t r = 0; r < n; ++r) {
    u64 acc = 0;
    for (std::size_t c = 0; c < n; ++c) acc = add_mod(acc, mul_mod(m(r, c), v[c], p), p);
    out[r] = acc;
  }
  return out;
}

bool is_zero_vec(const Vec& v) {
  for (u64 x : v)
    if (x != 0) return false;
  return true;
}

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n, 0);
  v[i] = 1;
  return v;
}

// f(M) v by Horner.
Vec apply_poly(const MatZ& m, const PolyFp& f, const Vec& v) {
  const u64 p = m.modulus();
  Vec acc(v.size(), 0);
  for (std::size_t i = f.coeffs().size(); i-- > 0;) {
    acc = mat_vec(m, acc);
    for (std::size_t j = 0; j < v.size(); ++j) acc[j] = add_mod(acc[j], mul_mod(f.coeffs()[i], v[j], p), p);
  }
  return acc;
}

// Minimal polynomial of v under M: the first Krylov vector M^j v that depends
// on its predecessors. Each stored row remembers, as a polynomial, which
// combination of Krylov vectors it is.
PolyFp vector_min_poly(const MatZ& m, const Vec& v) {
  const u64 p = m.modulus();
  struct Row {
    Vec vec;
    std::size_t pivot;
    PolyFp rep;
  };
  std::vector<Row> basis;
  Vec cur = v;
  for (std::size_t j = 0;; ++j) {
    Vec w = cur;
    PolyFp rep = PolyFp::monomial(p, j);
    for (const auto& row : basis) {
      const u64 x = w[row.pivot];
      if (x == 0) continue;
      const u64 f = mul_mod(x, inv_mod(row.vec[row.pivot], p), p);
      for (std::size_t k = 0; k < w.size(); ++k) w[k] = sub_mod(w[k], mul_mod(f, row.vec[k], p), p);
      rep = poly_sub(rep, poly_mul(PolyFp(p, {f}), row.rep));
    }
    std::size_t pivot = 0;
    while (pivot < w.size() && w[pivot] == 0) ++pivot;
    if (pivot == w.size()) return rep;
    basis.push_back({std::move(w), pivot, std::move(rep)});
    cur = mat_vec(m, cur);
  }
}

// Split lcm(f, g) = F * S with F | f, S | g and gcd(F, S) = 1.
std::pair<PolyFp, PolyFp> coprime_split(const PolyFp& f, const PolyFp& g) {
  const u64 p = f.prime();
  PolyFp s = poly_div_exact(g, poly_gcd(f, g));
  if (s.degree() == 0) return {f, PolyFp(p, {1})};
  PolyFp t = poly_div_exact(g, s);
  for (;;) {
    PolyFp d = poly_gcd(t, s);
    if (d.degree() <= 0) break;
    s = poly_mul(s, d);
    t = poly_div_exact(t, d);
  }
  PolyFp big_f = f;
  for (;;) {
    PolyFp d = poly_gcd(big_f, s);
    if (d.degree() <= 0) break;
    big_f = poly_div_exact(big_f, d);
  }
  return {big_f.monic(), s.monic()};
}

// A vector whose local minimal polynomial is the minimal polynomial of M,
// assembled from the standard basis in index order.
std::pair<Vec, PolyFp> maximal_vector(const MatZ& m) {
  const std::size_t n = m.dim();
  Vec v = unit_vec(n, 0);
  PolyFp mu = vector_min_poly(m, v);
  for (std::size_t i = 1; i < n; ++i) {
    Vec e = unit_vec(n, i);
    if (is_zero_vec(apply_poly(m, mu, e))) continue;
    PolyFp mu_e = vector_min_poly(m, e);
    auto [keep, take] = coprime_split(mu, mu_e);
    Vec a = apply_poly(m, poly_div_exact(mu, keep), v);
    Vec b = apply_poly(m, poly_div_exact(mu_e, take), e);
    for (std::size_t k = 0; k < n; ++k) a[k] = add_mod(a[k], b[k], m.modulus());
    v = std::move(a);
    mu = vector_min_poly(m, v);
    if (mu != poly_mul(keep, take)) throw std::logic_error("frobenius_form: maximal vector combination failed");
  }
  return {std::move(v), std::move(mu)};
}

// Row-reduce an r x c system in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<Vec>& rows, std::size_t cols, u64 p) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    const u64 inv = inv_mod(rows[r][c], p);
    for (auto& x : rows[r]) x = mul_mod(x, inv, p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const u64 f = rows[i][c];
      for (std::size_t k = 0; k < rows[i].size(); ++k) rows[i][k] = sub_mod(rows[i][k], mul_mod(f, rows[r][k], p), p);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Any x with sum_j rows[i][j] x_j = rhs[i].
Vec solve(std::vector<Vec> rows, const Vec& rhs, std::size_t cols, u64 p) {
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i].push_back(rhs[i]);
  const auto pivots = rref(rows, cols, p);
  for (std::size_t i = pivots.size(); i < rows.size(); ++i)
    if (rows[i][cols] != 0) throw std::logic_error("frobenius_form: inconsistent linear system");
  Vec x(cols, 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = rows[i][cols];
  return x;
}

std::vector<Vec> kernel(std::vector<Vec> rows, std::size_t cols, u64 p) {
  const auto pivots = rref(rows, cols, p);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> out;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec x(cols, 0);
    x[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = neg_mod(rows[i][free], p);
    out.push_back(std::move(x));
  }
  return out;
}

MatZ embed_lower_right(const MatZ& q, std::size_t total) {
  const std::size_t off = total - q.dim();
  MatZ out = MatZ::identity(q.modulus(), total);
  for (std::size_t r = 0; r < q.dim(); ++r)
    for (std::size_t c = 0; c < q.dim(); ++c) out.set(off + r, off + c, q(r, c));
  return out;
}

}  // namespace

PolyFp char_poly(const MatZ& a) {
  require_prime_modulus(a);
  const u64 p = a.modulus();
  const std::size_t n = a.dim();
  std::vector<Vec> h(n, Vec(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) h[r][c] = a(r, c);

  // Upper Hessenberg by elementary similarities.
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && h[piv][j] == 0) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      std::swap(h[piv], h[j + 1]);
      for (std::size_t r = 0; r < n; ++r) std::swap(h[r][piv], h[r][j + 1]);
    }
    const u64 inv = inv_mod(h[j + 1][j], p);
    for (std::size_t r = j + 2; r < n; ++r) {
      const u64 f = mul_mod(h[r][j], inv, p);
      if (f == 0) continue;
      for (std::size_t c = 0; c < n; ++c) h[r][c] = sub_mod(h[r][c], mul_mod(f, h[j + 1][c], p), p);
      for (std::size_t k = 0; k < n; ++k) h[k][j + 1] = add_mod(h[k][j + 1], mul_mod(f, h[k][r], p), p);
    }
  }

  // chi_m = (x - h_mm) chi_{m-1} - sum_{r<m} h_rm * (h_{r+1,r} ... h_{m,m-1}) * chi_{r-1}
  std::vector<PolyFp> chi;
  chi.reserve(n + 1);
  chi.emplace_back(p, Vec{1});
  for (std::size_t m = 0; m < n; ++m) {
    PolyFp next = poly_mul(PolyFp(p, {neg_mod(h[m][m], p), 1}), chi[m]);
    u64 t = 1;
    for (std::size_t r = m; r-- > 0;) {
      t = mul_mod(t, h[r + 1][r], p);
      const u64 coeff = mul_mod(h[r][m], t, p);
      if (coeff != 0) next = poly_sub(next, poly_mul(PolyFp(p, {coeff}), chi[r]));
    }
    chi.push_back(std::move(next));
  }
  return chi.back();
}

PolyFp min_poly(const MatZ& a) {
  require_prime_modulus(a);
  return maximal_vector(a).second;
}

FrobeniusForm frobenius_form(const MatZ& a) {
  require_prime_modulus(a);
  const u64 p = a.modulus();
  const std::size_t n = a.dim();
  MatZ P = MatZ::identity(p, n);
  MatZ Pinv = MatZ::identity(p, n);
  std::vector<CompanionBlock> blocks;

  MatZ rest = a;
  while (rest.dim() > 0) {
    const std::size_t r = rest.dim();
    auto [v, mu] = maximal_vector(rest);
    const auto d = static_cast<std::size_t>(mu.degree());

    std::vector<Vec> krylov;
    krylov.push_back(v);
    for (std::size_t i = 1; i < d; ++i) krylov.push_back(mat_vec(rest, krylov.back()));

    // Functional w with w.M^i v = 0 for i < d-1 and 1 at i = d-1; the
    // common kernel of w, wM, ..., wM^{d-1} is an invariant complement.
    Vec rhs(d, 0);
    rhs[d - 1] = 1;
    Vec w = solve(krylov, rhs, r, p);
    std::vector<Vec> functionals{w};
    const MatZ rest_t = [&] {
      MatZ t(p, r);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) t.set(i, j, rest(j, i));
      return t;
    }();
    for (std::size_t i = 1; i < d; ++i) functionals.push_back(mat_vec(rest_t, functionals.back()));
    std::vector<Vec> complement = kernel(functionals, r, p);
    if (complement.size() != r - d) throw std::logic_error("frobenius_form: complement has wrong dimension");

    MatZ q(p, r);
    for (std::size_t c = 0; c < d; ++c)
      for (std::size_t i = 0; i < r; ++i) q.set(i, c, krylov[c][i]);
    for (std::size_t c = 0; c < complement.size(); ++c)
      for (std::size_t i = 0; i < r; ++i) q.set(i, d + c, complement[c][i]);
    const MatZ qinv = invert_unit_matrix(q);
    const MatZ split = qinv * rest * q;

    CompanionBlock block = companion_of(mu);
    const MatZ block_matrix = companion_matrix(block);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        const bool top = i < d, left = j < d;
        if (top != left && split(i, j) != 0) throw std::logic_error("frobenius_form: complement is not invariant");
        if (top && left && split(i, j) != block_matrix(i, j))
          throw std::logic_error("frobenius_form: Krylov block is not companion");
      }

    P = P * embed_lower_right(q, n);
    Pinv = embed_lower_right(qinv, n) * Pinv;
    blocks.push_back(std::move(block));

    if (r == d) break;
    MatZ next(p, r - d);
    for (std::size_t i = 0; i < r - d; ++i)
      for (std::size_t j = 0; j < r - d; ++j) next.set(i, j, split(d + i, d + j));
    rest = std::move(next);
  }
  return {std::move(P), std::move(Pinv), std::move(blocks)};
}

}  // namespace zhou
