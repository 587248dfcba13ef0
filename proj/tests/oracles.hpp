#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's arithmetic or matroid code: determinants use Laplace expansion,
// kernels use their own elimination, finite hypersums use counting rules.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Matrix = std::vector<std::vector<Q>>;
using Mask = std::uint32_t;

inline std::vector<int> members(Mask s) {
  std::vector<int> out;
  for (int e = 0; e < 32; ++e)
    if ((s >> e) & 1u) out.push_back(e);
  return out;
}

// Laplace expansion along the first row.
inline Q laplace_det(const Matrix& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  Q total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (a[0][c] == 0) continue;
    Matrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Q> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(a[r][k]);
      minor.push_back(row);
    }
    Q term = a[0][c] * laplace_det(minor);
    total += (c % 2 == 0) ? term : Q(-term);
  }
  return total;
}

inline Matrix columns(const Matrix& a, Mask s) {
  Matrix out;
  for (const auto& row : a) {
    std::vector<Q> r;
    for (int e : members(s)) r.push_back(row[e]);
    out.push_back(r);
  }
  return out;
}

// Rank by fraction-exact row reduction of the selected columns.
inline int column_rank(const Matrix& a, Mask s) {
  Matrix m = columns(a, s);
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      Q f = m[r][c] / m[rank][c];
      for (std::size_t k = 0; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

// Minimal dependent column sets of a matrix, by brute force.
inline std::vector<Mask> matrix_circuits(const Matrix& a, int m) {
  std::vector<Mask> out;
  for (Mask s = 1; s < (Mask{1} << m); ++s) {
    int k = __builtin_popcount(s);
    if (column_rank(a, s) != k - 1) continue;
    bool minimal = true;
    for (int e : members(s))
      if (column_rank(a, s & ~(Mask{1} << e)) != k - 1) minimal = false;
    if (minimal) out.push_back(s);
  }
  return out;
}

// A kernel vector of the columns in circuit c (unique up to scale), as a full
// length vector with zeros off c. Solves by reduced row echelon form.
inline std::vector<Q> circuit_kernel_vector(const Matrix& a, Mask c, int m) {
  auto idx = members(c);
  Matrix mat = columns(a, c);
  const std::size_t rows = mat.size(), cols = idx.size();
  std::vector<int> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t p = rank;
    while (p < rows && mat[p][col] == 0) ++p;
    if (p == rows) continue;
    std::swap(mat[p], mat[rank]);
    Q lead = mat[rank][col];
    for (auto& x : mat[rank]) x /= lead;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || mat[r][col] == 0) continue;
      Q f = mat[r][col];
      for (std::size_t k = 0; k < cols; ++k) mat[r][k] -= f * mat[rank][k];
    }
    pivot_col.push_back(static_cast<int>(col));
    ++rank;
  }
  std::size_t free_col = 0;
  while (std::find(pivot_col.begin(), pivot_col.end(), static_cast<int>(free_col)) != pivot_col.end()) ++free_col;
  std::vector<Q> local(cols, 0);
  local[free_col] = 1;
  for (std::size_t r = 0; r < pivot_col.size(); ++r) local[pivot_col[r]] = -mat[r][free_col];
  std::vector<Q> out(m, 0);
  for (std::size_t i = 0; i < cols; ++i) out[idx[i]] = local[i];
  return out;
}

inline int sgn(const Q& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

inline Matrix random_integer_matrix(int r, int m, int lo, int hi, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(lo, hi);
  Matrix a(r, std::vector<Q>(m));
  for (auto& row : a)
    for (auto& x : row) x = d(rng);
  return a;
}

// Finite hyperfields as small integer codes: Krasner {0,1}, sign {-1,0,1},
// GF(p) residues. 0 in the hypersum of the given terms, by counting rules.
enum class Finite { Krasner, Sign, GF };

inline bool zero_in(Finite kind, const std::vector<int>& terms, int p = 0) {
  int nonzero = 0, pos = 0, neg = 0;
  long sum = 0;
  for (int t : terms) {
    if (t != 0) ++nonzero;
    if (t > 0) ++pos;
    if (t < 0) ++neg;
    sum += t;
  }
  switch (kind) {
    case Finite::Krasner: return nonzero != 1;
    case Finite::Sign: return nonzero == 0 || (pos > 0 && neg > 0);
    case Finite::GF: return ((sum % p) + p) % p == 0;
  }
  return false;
}

inline int times(Finite kind, int a, int b, int p) {
  if (kind == Finite::GF) return static_cast<int>((static_cast<long>(a) * b) % p);
  return a * b;
}

inline std::vector<int> alphabet(Finite kind, int p) {
  switch (kind) {
    case Finite::Krasner: return {0, 1};
    case Finite::Sign: return {-1, 0, 1};
    case Finite::GF: {
      std::vector<int> out;
      for (int i = 0; i < p; ++i) out.push_back(i);
      return out;
    }
  }
  return {};
}

// SuppMin(C-perp minus 0) by enumeration of F^E, one representative per support
// (over these hyperfields each support-minimal class is determined up to units).
inline std::vector<std::vector<int>> brute_force_dual(Finite kind, int p, int m,
                                                      const std::vector<std::vector<int>>& circuits) {
  auto alpha = alphabet(kind, p);
  std::vector<std::vector<int>> perp;
  std::vector<std::size_t> digit(m, 0);
  while (true) {
    std::vector<int> v(m);
    for (int i = 0; i < m; ++i) v[i] = alpha[digit[i]];
    bool nonzero = std::any_of(v.begin(), v.end(), [](int x) { return x != 0; });
    if (nonzero) {
      bool ok = true;
      for (const auto& c : circuits) {
        std::vector<int> terms;
        for (int e = 0; e < m; ++e) terms.push_back(times(kind, c[e], v[e], p));
        if (!zero_in(kind, terms, p)) {
          ok = false;
          break;
        }
      }
      if (ok) perp.push_back(v);
    }
    int i = 0;
    while (i < m && ++digit[i] == alpha.size()) digit[i++] = 0;
    if (i == m) break;
  }
  auto supp = [](const std::vector<int>& v) {
    Mask s = 0;
    for (std::size_t e = 0; e < v.size(); ++e)
      if (v[e] != 0) s |= Mask{1} << e;
    return s;
  };
  std::vector<std::vector<int>> out;
  for (const auto& v : perp) {
    Mask s = supp(v);
    bool minimal = std::none_of(perp.begin(), perp.end(), [&](const std::vector<int>& w) {
      Mask t = supp(w);
      return t != s && (t & ~s) == 0;
    });
    if (minimal) out.push_back(v);
  }
  return out;
}

// Height of each union of circuits in the lattice of all unions of circuits,
// computed as the longest chain from the empty set.
class UnionLattice {
 public:
  explicit UnionLattice(const std::vector<Mask>& circuits) {
    std::set<Mask> all{0};
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<Mask> current(all.begin(), all.end());
      for (Mask u : current)
        for (Mask c : circuits)
          if (all.insert(u | c).second) grew = true;
    }
    std::vector<Mask> sorted(all.begin(), all.end());
    std::sort(sorted.begin(), sorted.end(),
              [](Mask a, Mask b) { return __builtin_popcount(a) < __builtin_popcount(b); });
    for (Mask u : sorted) {
      int h = 0;
      for (Mask v : sorted) {
        if (v == u || (v & ~u) != 0) continue;
        auto it = height_.find(v);
        if (it != height_.end()) h = std::max(h, it->second + 1);
      }
      height_[u] = h;
    }
  }
  std::optional<int> height(Mask u) const {
    auto it = height_.find(u);
    if (it == height_.end()) return std::nullopt;
    return it->second;
  }
  // Modular family: the union has height equal to the family size.
  bool modular(const std::vector<Mask>& family) const {
    Mask u = 0;
    for (Mask c : family) u |= c;
    auto h = height(u);
    return h && *h == static_cast<int>(family.size());
  }

 private:
  std::map<Mask, int> height_;
};

}  // namespace oracle
