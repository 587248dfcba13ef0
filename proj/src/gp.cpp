#include "hfm/gp.hpp"

#include <algorithm>
#include <deque>

#include "hfm/error.hpp"
#include "hfm/parallel.hpp"

namespace hfm {

GPFunction::GPFunction(Hyperfield field, GroundSet ground, int rank)
    : field_(field), ground_(std::move(ground)), rank_(rank) {
  if (rank < 0 || rank > ground_.size()) throw InputError("GP rank outside [0, |E|]");
  values_.assign(std::size_t{1} << ground_.size(), field_.zero());
}

Element GPFunction::value(Subset s) const {
  if (cardinality(s) != rank_ || !is_subset(s, full_set(size()))) return field_.zero();
  return values_[s];
}

void GPFunction::set(Subset s, Element v) {
  if (cardinality(s) != rank_ || !is_subset(s, full_set(size())))
    throw InputError("GP value on a set of size other than the rank: " + ground_.format(s));
  if (!(v.field() == field_)) throw InputError("GP value outside " + field_.name());
  values_[s] = std::move(v);
}

Element GPFunction::evaluate(std::span<const int> tuple) const {
  if (static_cast<int>(tuple.size()) != rank_)
    throw InputError("GP evaluated on a tuple of length " + std::to_string(tuple.size()) + ", rank is " +
                     std::to_string(rank_));
  Subset s = 0;
  for (int e : tuple) {
    if (e < 0 || e >= size()) throw InputError("GP argument outside the ground set");
    if (contains(s, e)) return field_.zero();
    s |= bit(e);
  }
  return signed_power(values_[s], odd_permutation(tuple) ? 1 : 0);
}

std::vector<Subset> GPFunction::support() const {
  std::vector<Subset> out;
  for (Subset s : k_subsets(size(), rank_))
    if (!values_[s].is_zero()) out.push_back(s);
  return out;
}

bool GPFunction::identically_zero() const { return support().empty(); }

GPFunction scalar_mul(const Element& alpha, const GPFunction& phi) {
  GPFunction out(phi.field(), phi.ground(), phi.rank());
  for (Subset s : k_subsets(phi.size(), phi.rank())) out.set(s, mul(alpha, phi.value(s)));
  return out;
}

bool projectively_equal(const GPFunction& phi, const GPFunction& psi) {
  if (!(phi.field() == psi.field()) || phi.size() != psi.size() || phi.rank() != psi.rank()) return false;
  auto sp = phi.support();
  if (sp != psi.support()) return false;
  if (sp.empty()) return true;
  Element alpha = div(phi.value(sp.front()), psi.value(sp.front()));
  return std::all_of(sp.begin(), sp.end(), [&](Subset s) { return phi.value(s) == mul(alpha, psi.value(s)); });
}

// ------------------------------------------------------------------ relations

std::vector<Element> relation_terms(const GPFunction& phi, std::span<const int> I, std::span<const int> J) {
  const int r = phi.rank();
  if (static_cast<int>(I.size()) != r + 1 || static_cast<int>(J.size()) != r - 1)
    throw InputError("relation needs |I| = r + 1 and |J| = r - 1");
  Subset is = from_elements(I), js = from_elements(J);
  std::vector<Element> terms;
  for (std::size_t k = 0; k < I.size(); ++k) {
    int x = I[k];
    Element left = phi.value(is & ~bit(x));
    Element right = contains(js, x) ? phi.field().zero() : signed_power(phi.value(js | bit(x)), count_below(js, x));
    // Positions are 1-based in the alternating sign.
    terms.push_back(signed_power(mul(left, right), static_cast<int>(k + 1)));
  }
  return terms;
}

bool relation_holds(const std::vector<Element>& terms) { return terms.empty() || zero_in_sum(terms); }

namespace {

std::optional<GPWitness> check_relations(const GPFunction& phi, bool three_term_only) {
  const int m = phi.size(), r = phi.rank();
  auto Is = k_subsets(m, r + 1);
  auto Js = k_subsets(m, r - 1);
  return first_witness<GPWitness>(Is.size(), [&](std::size_t a) -> std::optional<GPWitness> {
    auto I = elements(Is[a]);
    for (Subset js : Js) {
      if (three_term_only && cardinality(Is[a] & ~js) != 3) continue;
      auto J = elements(js);
      auto terms = relation_terms(phi, I, J);
      if (!relation_holds(terms))
        return GPWitness{three_term_only ? "GP3'" : "GP3", "0 is not in the relation hypersum", I, J, terms};
    }
    return std::nullopt;
  });
}

std::optional<GPWitness> check_gp1(const GPFunction& phi) {
  if (phi.identically_zero()) return GPWitness{"GP1", "identically zero", {}, {}, {}};
  return std::nullopt;
}

}  // namespace

std::optional<GPWitness> check_gp_weak(const GPFunction& phi) {
  if (auto w = check_gp1(phi)) return w;
  try {
    underlying_matroid(phi);
  } catch (const InputError& e) {
    return GPWitness{"basis-exchange", e.what(), {}, {}, {}};
  }
  return check_relations(phi, true);
}

std::optional<GPWitness> check_gp_strong(const GPFunction& phi) {
  if (auto w = check_gp1(phi)) return w;
  return check_relations(phi, false);
}

bool pluecker_relation_check(const GPFunction& phi, Subset I, Subset J) {
  const int r = phi.rank();
  if (cardinality(I) != r + 1 || cardinality(J) != r - 1) throw InputError("relation needs |I| = r + 1 and |J| = r - 1");
  std::vector<Element> terms;
  for (int i : elements(I)) {
    if (contains(J, i)) continue;
    int s = cardinality(I & ~(bit(i + 1) - 1)) + cardinality(J & ~(bit(i + 1) - 1));
    terms.push_back(signed_power(mul(phi.value(J | bit(i)), phi.value(I & ~bit(i))), s));
  }
  return relation_holds(terms);
}

std::optional<GPWitness> check_dressian(const GPFunction& phi) {
  if (phi.field().kind() != HyperfieldKind::Tropical) throw InputError("the Dressian check needs tropical values");
  const int m = phi.size(), r = phi.rank();
  if (r < 2) return std::nullopt;
  for (Subset a : k_subsets(m, r - 2)) {
    auto rest = elements(full_set(m) & ~a);
    const int n = static_cast<int>(rest.size());
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q)
        for (int u = q + 1; u < n; ++u)
          for (int v = u + 1; v < n; ++v) {
            int i = rest[p], j = rest[q], k = rest[u], l = rest[v];
            auto pv = [&](int x, int y) { return phi.value(a | bit(x) | bit(y)); };
            std::vector<Element> terms{mul(pv(i, j), pv(k, l)), neg(mul(pv(i, k), pv(j, l))), mul(pv(i, l), pv(j, k))};
            if (!relation_holds(terms)) {
              auto A = elements(a);
              return GPWitness{"dressian", "3-term tropical relation fails", A, {i, j, k, l}, terms};
            }
          }
  }
  return std::nullopt;
}

Matroid underlying_matroid(const GPFunction& phi) {
  auto bases = phi.support();
  if (bases.empty()) throw InputError("GP function is identically zero");
  return Matroid::from_bases(phi.size(), bases);
}

GPFunction dual_gp(const GPFunction& phi) {
  const int m = phi.size();
  GPFunction out(phi.field(), phi.ground(), m - phi.rank());
  for (Subset s : k_subsets(m, m - phi.rank())) {
    Subset c = full_set(m) & ~s;
    out.set(s, signed_power(invol(phi.value(c)), odd_shuffle(s, c) ? 1 : 0));
  }
  return out;
}

// ------------------------------------------------------------------ circuits

namespace {

// phi(x, rest...) with rest in increasing order.
Element lead_value(const GPFunction& phi, int x, Subset rest) {
  if (contains(rest, x)) return phi.field().zero();
  return signed_power(phi.value(rest | bit(x)), count_below(rest, x));
}

}  // namespace

Signature circuits_from_gp(const GPFunction& phi) {
  auto M = underlying_matroid(phi);
  const auto& field = phi.field();
  Signature out{field, phi.ground(), {}};
  for (Subset c : M.circuits()) {
    int x0 = lowest(c);
    Subset b0 = M.extend_to_basis(c & ~bit(x0));
    FVector x = FVector::zero(field, phi.size());
    x.set(x0, field.one());
    for (int f : elements(c & ~bit(x0))) {
      Subset rest = b0 & ~bit(f);
      x.set(f, neg(div(lead_value(phi, x0, rest), lead_value(phi, f, rest))));
    }
    for (int e : elements(c))
      for (Subset b : M.bases()) {
        if (!is_subset(c & ~bit(e), b)) continue;
        for (int f : elements(c & ~bit(e))) {
          Subset rest = b & ~bit(f);
          Element expected = neg(div(lead_value(phi, e, rest), lead_value(phi, f, rest)));
          if (!(div(x[f], x[e]) == expected))
            throw ConsistencyError("GP inconsistency: circuit ratio on " + phi.ground().format(c) +
                                   " depends on the basis " + phi.ground().format(b));
        }
      }
    out.vectors.push_back(std::move(x));
  }
  return out;
}

Signature cocircuits_from_gp(const GPFunction& phi) { return circuits_from_gp(dual_gp(phi)); }

GPFunction gp_from_dual_pair(const Signature& circuits, const Signature& cocircuits) {
  if (!(circuits.field == cocircuits.field) || !(circuits.ground == cocircuits.ground))
    throw InputError("circuits and cocircuits live over different hyperfields or ground sets");
  if (auto w = check_C0_C2(circuits)) throw InputError("(DP1) fails: " + w->message);
  if (auto w = check_C0_C2(cocircuits)) throw InputError("(DP2) fails: " + w->message);
  auto M = underlying_matroid(circuits);
  auto dsup = cocircuits.supports();
  sort_lex(dsup);
  if (dsup != M.cocircuits()) throw InputError("(DP2) fails: supports are not the cocircuits of the matroid");
  if (auto w = check_dual_pair(circuits, cocircuits, 3))
    throw InputError("(DP3)' fails: " + w->vectors[0].to_string() + " and " + w->vectors[1].to_string());

  const int m = circuits.size();
  const auto& field = circuits.field;
  std::vector<std::optional<Element>> val(std::size_t{1} << m);
  Subset root = M.bases().front();
  val[root] = field.one();
  std::deque<Subset> queue{root};
  while (!queue.empty()) {
    Subset b = queue.front();
    queue.pop_front();
    for (int e : elements(full_set(m) & ~b)) {
      Subset c = M.fundamental_circuit(b, e);
      const FVector& x = *circuits.with_support(c);
      for (int f : elements(c & ~bit(e))) {
        Subset rest = b & ~bit(f);
        Subset next = rest | bit(e);
        // phi(e, rest) = -phi(f, rest) X(f)/X(e), converted to sorted values.
        Element lead_f = signed_power(*val[b], count_below(rest, f));
        Element lead_e = neg(mul(lead_f, div(x[f], x[e])));
        Element v = signed_power(lead_e, count_below(rest, e));
        if (!val[next]) {
          val[next] = v;
          queue.push_back(next);
        } else if (!(*val[next] == v)) {
          throw InputError("not a dual pair: basis exchange values disagree at " + circuits.ground.format(next));
        }
      }
    }
  }
  GPFunction phi(field, circuits.ground, M.rank());
  for (Subset b : M.bases()) phi.set(b, *val[b]);

  if (auto w = check_gp_weak(phi)) throw InputError("not a dual pair: the constructed function fails " + w->axiom);
  if (!check_dual_pair(circuits, cocircuits, -1) && check_gp_strong(phi))
    throw ConsistencyError("dual pair satisfies (DP3) but the constructed function is not strong");
  if (!signatures_equal(circuits_from_gp(phi), circuits))
    throw ConsistencyError("circuits of the constructed function differ from the input circuits");
  if (!signatures_equal(cocircuits_from_gp(phi), cocircuits))
    throw ConsistencyError("cocircuits of the constructed function differ from the input cocircuits");
  return phi;
}

}  // namespace hfm
