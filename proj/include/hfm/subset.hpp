#pragma once

// Subsets of a ground set {0, ..., m-1} stored as bit masks.

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace hfm {

using Subset = std::uint32_t;

// Ground sets are capped so that rank tables over all subsets stay small.
inline constexpr int kMaxGroundSize = 16;

constexpr Subset bit(int e) { return Subset{1} << e; }
constexpr bool contains(Subset s, int e) { return (s >> e) & 1u; }
constexpr bool is_subset(Subset a, Subset b) { return (a & ~b) == 0; }
constexpr int cardinality(Subset s) { return std::popcount(s); }
constexpr Subset full_set(int m) { return m >= 32 ? ~Subset{0} : (bit(m) - 1); }
constexpr int lowest(Subset s) { return std::countr_zero(s); }

inline std::vector<int> elements(Subset s) {
  std::vector<int> out;
  out.reserve(cardinality(s));
  for (; s != 0; s &= s - 1) out.push_back(lowest(s));
  return out;
}

inline Subset from_elements(std::span<const int> es) {
  Subset s = 0;
  for (int e : es) s |= bit(e);
  return s;
}

// All k-subsets of {0..m-1}, in lexicographic order of their sorted element lists.
inline std::vector<Subset> k_subsets(int m, int k) {
  std::vector<Subset> out;
  if (k < 0 || k > m) return out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    out.push_back(from_elements(idx));
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

// Number of elements of s strictly below e.
constexpr int count_below(Subset s, int e) { return cardinality(s & (bit(e) - 1)); }

// Parity of the permutation sorting a tuple of distinct entries: true when odd.
inline bool odd_permutation(std::span<const int> tuple) {
  bool odd = false;
  for (std::size_t i = 0; i < tuple.size(); ++i)
    for (std::size_t j = i + 1; j < tuple.size(); ++j)
      if (tuple[i] > tuple[j]) odd = !odd;
  return odd;
}

// Parity of the shuffle that puts a followed by b (disjoint) into sorted order.
inline bool odd_shuffle(Subset a, Subset b) {
  int inversions = 0;
  for (int x : elements(a)) inversions += count_below(b, x);
  return inversions & 1;
}

// Re-index the members of s that lie in keep onto 0..|keep|-1, preserving order.
inline Subset compress(Subset s, Subset keep) {
  Subset out = 0;
  int pos = 0;
  for (Subset k = keep; k != 0; k &= k - 1, ++pos)
    if (contains(s, lowest(k))) out |= bit(pos);
  return out;
}

// Inverse of compress: spread bits 0..|keep|-1 onto the members of keep.
inline Subset expand(Subset s, Subset keep) {
  Subset out = 0;
  int pos = 0;
  for (Subset k = keep; k != 0; k &= k - 1, ++pos)
    if (contains(s, pos)) out |= bit(lowest(k));
  return out;
}

}  // namespace hfm
