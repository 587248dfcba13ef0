#pragma once

// Classical matroids on {0..m-1}, stored as full rank tables (m <= 16).

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hfm/subset.hpp"

namespace hfm {

struct CircuitViolation {
  enum class Kind { Empty, Comparable, Elimination } kind;
  Subset c1 = 0, c2 = 0;
  int e = -1;
  std::string describe() const;
};

// Circuit axioms: nonempty, pairwise incomparable, and elimination. Elimination is
// decided on modular pairs (lattice definition) and cross-checked against
// elimination over all pairs; the witness is the first failing pair in input order.
std::optional<CircuitViolation> validate_circuits(int m, std::span<const Subset> sets);

class Matroid {
 public:
  // Throws InputError carrying the violation when the sets are not matroid circuits.
  static Matroid from_circuits(int m, std::vector<Subset> circuits);
  // Throws InputError when basis exchange fails.
  static Matroid from_bases(int m, std::span<const Subset> bases);
  static Matroid uniform(int r, int m);

  int size() const { return m_; }
  int rank() const { return rank_.back(); }
  int rank(Subset a) const { return rank_.at(a); }
  int nullity(Subset a) const { return cardinality(a) - rank(a); }
  bool independent(Subset a) const { return rank(a) == cardinality(a); }
  bool is_basis(Subset a) const { return cardinality(a) == rank() && independent(a); }
  bool is_circuit(Subset a) const;
  bool is_loop(int e) const { return rank(bit(e)) == 0; }

  // Sorted by the lexicographic order of their element lists.
  const std::vector<Subset>& circuits() const { return circuits_; }
  const std::vector<Subset>& bases() const { return bases_; }
  std::vector<Subset> cocircuits() const { return dual().circuits(); }

  Matroid dual() const;
  // The unique circuit inside B + e (e not in B).
  Subset fundamental_circuit(Subset basis, int e) const;
  // The unique cocircuit inside (E \ B) + f (f in B).
  Subset fundamental_cocircuit(Subset basis, int f) const;
  // A maximal independent subset of a, built greedily in ground-set order.
  Subset max_independent_subset(Subset a) const;
  // Extend an independent set to a basis, greedily in ground-set order.
  Subset extend_to_basis(Subset independent_set) const;

  // r(C1 u C2) = |C1 u C2| - 2 for distinct circuits.
  bool modular_pair(Subset c1, Subset c2) const;
  // The union has nullity equal to the family size.
  bool modular_family(std::span<const Subset> family) const;

  // Minors, re-indexed onto the surviving elements in order.
  Matroid deletion(Subset a) const;
  Matroid contraction(Subset a) const;

  friend bool operator==(const Matroid& a, const Matroid& b) { return a.m_ == b.m_ && a.circuits_ == b.circuits_; }

 private:
  Matroid(int m, std::vector<std::uint8_t> rank);
  static std::vector<std::uint8_t> rank_from_circuits(int m, std::span<const Subset> circuits);

  int m_ = 0;
  std::vector<std::uint8_t> rank_;
  std::vector<Subset> circuits_;
  std::vector<Subset> bases_;
};

// Lexicographic order on sorted element lists.
bool lex_less(Subset a, Subset b);
void sort_lex(std::vector<Subset>& sets);

}  // namespace hfm
