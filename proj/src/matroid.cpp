#include "hfm/matroid.hpp"

#include <algorithm>

#include "hfm/error.hpp"

namespace hfm {

namespace {

std::string show(Subset s) {
  std::string out = "{";
  bool first = true;
  for (int e : elements(s)) {
    out += (first ? "" : ",") + std::to_string(e);
    first = false;
  }
  return out + "}";
}

// dep[a] is true iff a contains one of the sets.
std::vector<bool> containment_table(int m, std::span<const Subset> sets) {
  std::vector<bool> dep(std::size_t{1} << m, false);
  for (Subset c : sets) dep[c] = true;
  for (Subset a = 1; a < dep.size(); ++a)
    if (!dep[a])
      for (Subset r = a; r != 0 && !dep[a]; r &= r - 1)
        if (dep[a & ~(r & -r)]) dep[a] = true;
  return dep;
}

// Def. of modular pair via the lattice of unions: no two distinct sets have a
// union properly inside c1 u c2.
bool lattice_modular(std::span<const Subset> sets, Subset c1, Subset c2) {
  Subset u = c1 | c2;
  std::vector<Subset> inside;
  for (Subset c : sets)
    if (is_subset(c, u)) inside.push_back(c);
  for (std::size_t i = 0; i < inside.size(); ++i)
    for (std::size_t j = i + 1; j < inside.size(); ++j)
      if ((inside[i] | inside[j]) != u) return false;
  return true;
}

}  // namespace

bool lex_less(Subset a, Subset b) {
  auto ea = elements(a), eb = elements(b);
  return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
}

void sort_lex(std::vector<Subset>& sets) { std::sort(sets.begin(), sets.end(), lex_less); }

std::string CircuitViolation::describe() const {
  switch (kind) {
    case Kind::Empty: return "empty circuit";
    case Kind::Comparable: return "comparable circuits " + show(c1) + " and " + show(c2);
    case Kind::Elimination:
      return "no circuit inside (" + show(c1) + " u " + show(c2) + ") \\ " + std::to_string(e);
  }
  return "";
}

std::optional<CircuitViolation> validate_circuits(int m, std::span<const Subset> sets) {
  if (m < 0 || m > kMaxGroundSize) throw InputError("ground set size out of range");
  for (Subset c : sets) {
    if (c == 0) return CircuitViolation{CircuitViolation::Kind::Empty};
    if (!is_subset(c, full_set(m))) throw InputError("circuit outside the ground set");
  }
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = 0; j < sets.size(); ++j)
      if (i != j && is_subset(sets[i], sets[j]))
        return CircuitViolation{CircuitViolation::Kind::Comparable, sets[i], sets[j]};

  auto dep = containment_table(m, sets);
  std::optional<CircuitViolation> full, modular;
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      bool is_modular = !modular && sets.size() <= 400 ? lattice_modular(sets, sets[i], sets[j]) : false;
      for (int e : elements(sets[i] & sets[j])) {
        if (dep[(sets[i] | sets[j]) & ~bit(e)]) continue;
        CircuitViolation v{CircuitViolation::Kind::Elimination, sets[i], sets[j], e};
        if (!full) full = v;
        if (is_modular && !modular) modular = v;
      }
    }
  if (sets.size() <= 400 && full.has_value() != modular.has_value())
    throw ConsistencyError("modular-pair elimination disagrees with full elimination");
  return full;
}

// ---------------------------------------------------------------- Matroid

std::vector<std::uint8_t> Matroid::rank_from_circuits(int m, std::span<const Subset> circuits) {
  auto dep = containment_table(m, circuits);
  std::vector<std::uint8_t> rank(std::size_t{1} << m, 0);
  for (Subset a = 1; a < rank.size(); ++a) {
    if (!dep[a]) {
      rank[a] = static_cast<std::uint8_t>(cardinality(a));
      continue;
    }
    std::uint8_t best = 0;
    for (Subset r = a; r != 0; r &= r - 1) best = std::max(best, rank[a & ~(r & -r)]);
    rank[a] = best;
  }
  return rank;
}

Matroid::Matroid(int m, std::vector<std::uint8_t> rank) : m_(m), rank_(std::move(rank)) {
  int r = rank_.back();
  for (Subset a = 0; a < rank_.size(); ++a) {
    int n = cardinality(a);
    if (n == r && rank_[a] == r) bases_.push_back(a);
    if (rank_[a] == n - 1) {
      bool minimal = true;
      for (Subset s = a; s != 0 && minimal; s &= s - 1)
        minimal = rank_[a & ~(s & -s)] == n - 1;
      if (minimal) circuits_.push_back(a);
    }
  }
  sort_lex(circuits_);
  sort_lex(bases_);
}

Matroid Matroid::from_circuits(int m, std::vector<Subset> circuits) {
  if (auto v = validate_circuits(m, circuits)) throw InputError("not the circuits of a matroid: " + v->describe());
  return Matroid(m, rank_from_circuits(m, circuits));
}

Matroid Matroid::from_bases(int m, std::span<const Subset> bases) {
  if (m < 0 || m > kMaxGroundSize) throw InputError("ground set size out of range");
  if (bases.empty()) throw InputError("a matroid needs at least one basis");
  int r = cardinality(bases.front());
  std::vector<bool> is_base(std::size_t{1} << m, false);
  for (Subset b : bases) {
    if (cardinality(b) != r) throw InputError("bases of different sizes");
    if (!is_subset(b, full_set(m))) throw InputError("basis outside the ground set");
    is_base[b] = true;
  }
  for (Subset b1 : bases)
    for (Subset b2 : bases)
      for (int x : elements(b1 & ~b2)) {
        bool ok = false;
        for (int y : elements(b2 & ~b1))
          if (is_base[(b1 & ~bit(x)) | bit(y)]) ok = true;
        if (!ok) throw InputError("basis exchange fails for " + show(b1) + ", " + show(b2) + " at " + std::to_string(x));
      }
  std::vector<std::uint8_t> indep(std::size_t{1} << m, 0);
  for (Subset b : bases) indep[b] = 1;
  for (Subset a = full_set(m);; --a) {
    if (indep[a])
      for (Subset s = a; s != 0; s &= s - 1) indep[a & ~(s & -s)] = 1;
    if (a == 0) break;
  }
  std::vector<std::uint8_t> rank(std::size_t{1} << m, 0);
  for (Subset a = 1; a < rank.size(); ++a) {
    if (indep[a]) {
      rank[a] = static_cast<std::uint8_t>(cardinality(a));
      continue;
    }
    std::uint8_t best = 0;
    for (Subset s = a; s != 0; s &= s - 1) best = std::max(best, rank[a & ~(s & -s)]);
    rank[a] = best;
  }
  return Matroid(m, std::move(rank));
}

Matroid Matroid::uniform(int r, int m) {
  auto bases = k_subsets(m, r);
  return from_bases(m, bases);
}

bool Matroid::is_circuit(Subset a) const {
  return std::binary_search(circuits_.begin(), circuits_.end(), a, lex_less);
}

Matroid Matroid::dual() const {
  std::vector<Subset> cobases;
  for (Subset b : bases_) cobases.push_back(full_set(m_) & ~b);
  return from_bases(m_, cobases);
}

Subset Matroid::fundamental_circuit(Subset basis, int e) const {
  if (!is_basis(basis)) throw InputError("fundamental_circuit: not a basis");
  if (contains(basis, e)) throw InputError("fundamental_circuit: element lies in the basis");
  Subset s = basis | bit(e);
  for (Subset c : circuits_)
    if (is_subset(c, s)) return c;
  throw ConsistencyError("no circuit inside B + e");
}

Subset Matroid::fundamental_cocircuit(Subset basis, int f) const {
  if (!is_basis(basis)) throw InputError("fundamental_cocircuit: not a basis");
  if (!contains(basis, f)) throw InputError("fundamental_cocircuit: element outside the basis");
  return dual().fundamental_circuit(full_set(m_) & ~basis, f);
}

Subset Matroid::max_independent_subset(Subset a) const {
  Subset out = 0;
  for (int e : elements(a))
    if (independent(out | bit(e))) out |= bit(e);
  return out;
}

Subset Matroid::extend_to_basis(Subset s) const {
  if (!independent(s)) throw InputError("extend_to_basis: set is dependent");
  for (int e = 0; e < m_; ++e)
    if (!contains(s, e) && independent(s | bit(e))) s |= bit(e);
  return s;
}

bool Matroid::modular_pair(Subset c1, Subset c2) const {
  if (c1 == c2 || !is_circuit(c1) || !is_circuit(c2))
    throw InputError("modular_pair needs two distinct circuits");
  Subset u = c1 | c2;
  return rank(u) == cardinality(u) - 2;
}

bool Matroid::modular_family(std::span<const Subset> family) const {
  Subset u = 0;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (!is_circuit(family[i])) throw InputError("modular_family needs circuits");
    for (std::size_t j = 0; j < i; ++j)
      if (family[i] == family[j]) throw InputError("modular_family needs distinct circuits");
    u |= family[i];
  }
  return nullity(u) == static_cast<int>(family.size());
}

Matroid Matroid::deletion(Subset a) const {
  Subset keep = full_set(m_) & ~a;
  int n = cardinality(keep);
  std::vector<std::uint8_t> rank(std::size_t{1} << n, 0);
  for (Subset s = 0; s < rank.size(); ++s) rank[s] = rank_[expand(s, keep)];
  return Matroid(n, std::move(rank));
}

Matroid Matroid::contraction(Subset a) const {
  Subset keep = full_set(m_) & ~a;
  int n = cardinality(keep);
  int ra = rank(a);
  std::vector<std::uint8_t> rank(std::size_t{1} << n, 0);
  for (Subset s = 0; s < rank.size(); ++s) rank[s] = static_cast<std::uint8_t>(rank_[expand(s, keep) | a] - ra);
  return Matroid(n, std::move(rank));
}

}  // namespace hfm
