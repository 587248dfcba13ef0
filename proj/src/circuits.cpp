#include "hfm/circuits.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "hfm/error.hpp"
#include "hfm/parallel.hpp"

namespace hfm {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

std::vector<SumSet> coordinate_sums(const Hyperfield& field, int m, const std::vector<FVector>& xs) {
  std::vector<SumSet> out;
  out.reserve(m);
  for (int f = 0; f < m; ++f) {
    std::vector<Element> terms;
    for (const auto& x : xs)
      if (!x[f].is_zero()) terms.push_back(x[f]);
    out.push_back(terms.empty() ? SumSet::singleton(field.zero()) : fold_sum(terms));
  }
  return out;
}

// Candidate scalars alpha when no coordinate pins alpha down. For each
// representation the feasible set of alpha is a finite union of points and
// intervals/arcs whose endpoints are the breakpoints below, so breakpoints plus
// midpoints between consecutive breakpoints meet every nonempty feasible set.
std::vector<Element> scaling_candidates(const FVector& w, const std::vector<SumSet>& targets) {
  const auto& field = w.field();
  std::vector<Element> out;
  Subset s = w.support();
  switch (field.kind()) {
    case HyperfieldKind::Krasner:
    case HyperfieldKind::Sign:
    case HyperfieldKind::FiniteField: return field.units();
    case HyperfieldKind::Rational: return {};
    case HyperfieldKind::Tropical: {
      for (int f : elements(s)) {
        const auto& d = std::get<SumSet::DownSet>(targets[f].representation());
        Rational b = d.bound / w[f].rational();
        if (sgn(b) > 0) {
          out.push_back(Element::tropical(b));
          out.push_back(Element::tropical(b / 2));
        }
      }
      return out;
    }
    case HyperfieldKind::Triangle: {
      std::vector<double> bp;
      for (int f : elements(s))
        for (const auto& [lo, hi] : std::get<SumSet::Intervals>(targets[f].representation()).parts) {
          bp.push_back(lo / w[f].real());
          bp.push_back(hi / w[f].real());
        }
      std::sort(bp.begin(), bp.end());
      for (std::size_t i = 0; i < bp.size(); ++i) {
        if (bp[i] > 0) out.push_back(Element::triangle(bp[i]));
        if (i + 1 < bp.size()) out.push_back(Element::triangle((bp[i] + bp[i + 1]) / 2));
      }
      return out;
    }
    case HyperfieldKind::Phase: {
      std::vector<double> bp;
      for (int f : elements(s)) {
        const auto& a = std::get<SumSet::Arcs>(targets[f].representation());
        double shift = w[f].real();
        for (double p : a.points) bp.push_back(p - shift);
        for (const auto& arc : a.arcs) {
          bp.push_back(arc.start - shift);
          bp.push_back(arc.start + arc.length - shift);
        }
      }
      for (auto& b : bp) b = std::fmod(std::fmod(b, kTwoPi) + kTwoPi, kTwoPi);
      std::sort(bp.begin(), bp.end());
      out.push_back(Element::phase_angle(0, field.involution()));
      for (std::size_t i = 0; i < bp.size(); ++i) {
        double next = i + 1 < bp.size() ? bp[i + 1] : bp.front() + kTwoPi;
        out.push_back(Element::phase_angle(bp[i], field.involution()));
        out.push_back(Element::phase_angle((bp[i] + next) / 2, field.involution()));
      }
      return out;
    }
  }
  return out;
}

std::optional<Element> fit_scaling(const FVector& w, const std::vector<SumSet>& targets) {
  Subset s = w.support();
  auto fits = [&](const Element& alpha) {
    for (int f : elements(s))
      if (!targets[f].contains(mul(alpha, w[f]))) return false;
    return true;
  };
  for (int f : elements(s))
    if (auto p = targets[f].as_point()) {
      if (p->is_zero()) return std::nullopt;
      Element alpha = div(*p, w[f]);
      return fits(alpha) ? std::optional<Element>(alpha) : std::nullopt;
    }
  for (const auto& alpha : scaling_candidates(w, targets))
    if (!alpha.is_zero() && fits(alpha)) return alpha;
  return std::nullopt;
}

// Scale y so that y(e) = -x(e).
FVector cancel_at(const FVector& x, const FVector& y, int e) { return scalar_mul(div(neg(x[e]), y[e]), y); }

std::optional<Witness> precondition_witness(const Signature& sig) {
  if (auto w = check_C0_C2(sig)) return w;
  auto supports = sig.supports();
  if (auto v = validate_circuits(sig.size(), supports))
    return Witness{"matroid", "supports are not the circuits of a matroid: " + v->describe(), {}, {}, 0};
  return std::nullopt;
}

}  // namespace

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::InvalidSignature: return "InvalidSignature";
    case Verdict::UnderlyingNotMatroid: return "UnderlyingNotMatroid";
    case Verdict::WeakOnly: return "WeakOnly";
    case Verdict::Strong: return "Strong";
  }
  return "?";
}

std::optional<Witness> check_C0_C2(const Signature& sig) {
  const int m = sig.size();
  for (const auto& v : sig.vectors) {
    if (!(v.field() == sig.field) || v.size() != m)
      return Witness{"C1", "representative outside " + sig.field.name() + "^E", {v}, {}, 0};
    if (v.is_zero()) return Witness{"C0", "the zero vector is not a circuit", {v}, {}, 0};
  }
  const auto& vs = sig.vectors;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < vs.size(); ++j) {
      if (i == j) continue;
      Subset a = vs[i].support(), b = vs[j].support();
      if (a == b && j > i) {
        if (projectively_equal(vs[i], vs[j]))
          return Witness{"C1", "two representatives of one projective class", {vs[i], vs[j]}, {}, 0};
        return Witness{"C2", "equal supports but not projectively equal", {vs[i], vs[j]}, {}, 0};
      }
      if (a != b && is_subset(a, b))
        return Witness{"C2", "support properly contained in another support", {vs[i], vs[j]}, {}, 0};
    }
  return std::nullopt;
}

Matroid underlying_matroid(const Signature& sig) { return Matroid::from_circuits(sig.size(), sig.supports()); }

std::vector<FVector> find_eliminants(const Signature& sig, const std::vector<FVector>& xs, Subset eliminated) {
  const int m = sig.size();
  Subset uni = 0;
  for (const auto& x : xs) uni |= x.support();
  Subset allowed = uni & ~eliminated;
  auto targets = coordinate_sums(sig.field, m, xs);
  const Element zero = sig.field.zero();
  std::vector<FVector> out;
  for (const auto& w : sig.vectors) {
    Subset s = w.support();
    if (!is_subset(s, allowed)) continue;
    bool zeros_ok = true;
    for (int f : elements(allowed & ~s)) zeros_ok = zeros_ok && targets[f].contains(zero);
    if (!zeros_ok) continue;
    if (auto alpha = fit_scaling(w, targets)) out.push_back(scalar_mul(*alpha, w));
  }
  return out;
}

std::optional<Witness> check_weak_elimination(const Signature& sig) {
  if (auto w = precondition_witness(sig)) return w;
  auto M = underlying_matroid(sig);
  const auto& vs = sig.vectors;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < static_cast<int>(vs.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(vs.size()); ++j)
      if ((vs[i].support() & vs[j].support()) != 0 && M.modular_pair(vs[i].support(), vs[j].support()))
        pairs.emplace_back(i, j);
  return first_witness<Witness>(pairs.size(), [&](std::size_t idx) -> std::optional<Witness> {
    const auto& x = vs[pairs[idx].first];
    const auto& y = vs[pairs[idx].second];
    for (int e : elements(x.support() & y.support())) {
      FVector ys = cancel_at(x, y, e);
      if (find_eliminants(sig, {x, ys}, bit(e)).empty())
        return Witness{"C3'", "no eliminant for a modular pair", {x, ys}, {e}, 0};
    }
    return std::nullopt;
  });
}

std::optional<Witness> check_strong_elimination(const Signature& sig, int k_max) {
  if (auto w = precondition_witness(sig)) return w;
  auto M = underlying_matroid(sig);
  if (k_max < 0) k_max = M.size() - M.rank();
  const auto& vs = sig.vectors;
  const int n = static_cast<int>(vs.size());

  return first_witness<Witness>(vs.size(), [&](std::size_t i0) -> std::optional<Witness> {
    const FVector& x = vs[i0];
    const Subset sx = x.support();
    std::vector<int> family;
    std::optional<Witness> found;

    // Sets E_i = (X n X_i) \ U_{j != i} X_j for the current family.
    auto choice_sets = [&]() {
      std::vector<Subset> sets;
      for (std::size_t a = 0; a < family.size(); ++a) {
        Subset others = 0;
        for (std::size_t b = 0; b < family.size(); ++b)
          if (a != b) others |= vs[family[b]].support();
        sets.push_back(sx & vs[family[a]].support() & ~others);
      }
      return sets;
    };

    auto test_family = [&](const std::vector<Subset>& sets) {
      const std::size_t k = family.size();
      std::vector<int> es(k);
      std::function<bool(std::size_t)> pick = [&](std::size_t a) -> bool {
        if (a == k) {
          std::vector<FVector> xs{x};
          Subset eliminated = 0;
          for (std::size_t b = 0; b < k; ++b) {
            xs.push_back(cancel_at(x, vs[family[b]], es[b]));
            eliminated |= bit(es[b]);
          }
          if (find_eliminants(sig, xs, eliminated).empty()) {
            found = Witness{"C3", "no eliminant for a modular family of size " + std::to_string(k + 1), xs, es, 0};
            return true;
          }
          return false;
        }
        for (int e : elements(sets[a])) {
          es[a] = e;
          if (pick(a + 1)) return true;
        }
        return false;
      };
      return pick(0);
    };

    std::function<bool(int, Subset)> extend = [&](int start, Subset uni) -> bool {
      for (int j = start; j < n; ++j) {
        if (j == static_cast<int>(i0)) continue;
        Subset sj = vs[j].support();
        Subset nu = uni | sj;
        if (is_subset(sx, nu)) continue;
        if (M.nullity(sx | nu) > k_max + 1) continue;
        family.push_back(j);
        auto sets = choice_sets();
        bool viable = std::all_of(sets.begin(), sets.end(), [](Subset s) { return s != 0; });
        if (viable) {
          int k = static_cast<int>(family.size());
          if (M.nullity(sx | nu) == k + 1 && test_family(sets)) return true;
          if (k < k_max && extend(j + 1, nu)) return true;
        }
        family.pop_back();
      }
      return false;
    };
    if (k_max >= 1) extend(0, 0);
    return found;
  });
}

std::optional<Witness> check_C3_doubleprime(const Signature& sig) {
  if (auto w = precondition_witness(sig)) return w;
  auto M = underlying_matroid(sig);
  const int m = sig.size();
  const auto& bases = M.bases();
  return first_witness<Witness>(sig.vectors.size(), [&](std::size_t i) -> std::optional<Witness> {
    const FVector& x = sig.vectors[i];
    for (Subset b : bases) {
      std::vector<FVector> fundamentals;
      for (int e : elements(x.support() & ~b)) {
        Subset c = M.fundamental_circuit(b, e);
        const FVector* rep = sig.with_support(c);
        if (!rep) return Witness{"missing-circuit", "no representative for a fundamental circuit", {x}, {e}, b};
        fundamentals.push_back(scalar_mul(inv((*rep)[e]), *rep));
      }
      std::vector<int> outside = elements(x.support() & ~b);
      for (int f = 0; f < m; ++f) {
        std::vector<Element> terms;
        for (std::size_t t = 0; t < outside.size(); ++t) {
          Element v = mul(x[outside[t]], fundamentals[t][f]);
          if (!v.is_zero()) terms.push_back(v);
        }
        bool ok = terms.empty() ? x[f].is_zero() : member_of_sum(x[f], terms);
        if (!ok) {
          std::vector<FVector> vecs{x};
          vecs.insert(vecs.end(), fundamentals.begin(), fundamentals.end());
          return Witness{"C3''", "X(f) outside the span of the fundamental circuits of B", vecs, {f}, b};
        }
      }
    }
    return std::nullopt;
  });
}

std::optional<Witness> check_weak_nonmodular_elimination(const Signature& sig) {
  if (auto w = precondition_witness(sig)) return w;
  const auto& vs = sig.vectors;
  auto supports = sig.supports();
  for (const auto& x : vs)
    for (const auto& y : vs) {
      if (&x == &y) continue;
      for (int e : elements(x.support() & y.support())) {
        FVector ys = cancel_at(x, y, e);
        Subset room = (x.support() | y.support()) & ~bit(e);
        for (int f : elements(x.support() | y.support())) {
          if (ys[f] == neg(x[f])) continue;
          bool ok = std::any_of(supports.begin(), supports.end(),
                                [&](Subset z) { return contains(z, f) && is_subset(z, room); });
          if (!ok) return Witness{"support-elimination", "no circuit through f inside (X u Y) \\ e", {x, ys}, {e, f}, 0};
        }
      }
    }
  return std::nullopt;
}

namespace {

Classification classify_impl(const Signature& sig, bool via_doubleprime, int k_max) {
  if (auto w = check_C0_C2(sig)) return {Verdict::InvalidSignature, w};
  if (auto w = precondition_witness(sig)) return {Verdict::UnderlyingNotMatroid, w};
  if (auto w = check_weak_elimination(sig)) return {Verdict::InvalidSignature, w};
  auto c3 = via_doubleprime ? check_C3_doubleprime(sig) : check_strong_elimination(sig, k_max);
  if (!via_doubleprime) {
    auto c3pp = check_C3_doubleprime(sig);
    if (c3.has_value() != c3pp.has_value())
      throw ConsistencyError("strong elimination and the fundamental-circuit span test disagree");
  }
  if (c3) return {Verdict::WeakOnly, c3};
  return {Verdict::Strong, std::nullopt};
}

}  // namespace

Classification classify(const Signature& sig, int k_max) { return classify_impl(sig, false, k_max); }

Classification classify_via_doubleprime(const Signature& sig) { return classify_impl(sig, true, -1); }

Signature cocircuit_signature(const Signature& circuits) {
  auto M = underlying_matroid(circuits);
  const int m = circuits.size();
  const Subset ground = full_set(m);
  Signature out{circuits.field, circuits.ground, {}};
  auto circuit_on = [&](Subset support) -> const FVector& {
    const FVector* rep = circuits.with_support(support);
    if (!rep) throw InputError("signature has no representative for circuit " + circuits.ground.format(support));
    return *rep;
  };
  for (Subset d : M.cocircuits()) {
    Subset a = M.max_independent_subset(ground & ~d);
    // The circuit inside A + e + f is the fundamental circuit of f for the basis A + e.
    auto x_def = [&](int e, int f) -> const FVector& { return circuit_on(M.fundamental_circuit(a | bit(e), f)); };
    std::vector<int> members = elements(d);
    int f0 = members.front();
    FVector w = FVector::zero(circuits.field, m);
    w.set(f0, circuits.field.one());
    for (int e : members)
      if (e != f0) {
        const FVector& x = x_def(e, f0);
        w.set(e, neg(div(x[f0], x[e])));
      }
    for (int e : members)
      for (int f : members) {
        if (e == f) continue;
        const FVector& x = x_def(e, f);
        if (!(div(w[e], w[f]) == neg(div(x[f], x[e]))))
          throw ConsistencyError("cocircuit ratios disagree on " + circuits.ground.format(d) + " at (" +
                                 circuits.ground.label(e) + ", " + circuits.ground.label(f) + ")");
      }
    std::vector<Element> entries;
    for (const auto& v : w.entries()) entries.push_back(invol(v));
    out.vectors.emplace_back(circuits.field, std::move(entries));
  }
  return out;
}

std::optional<Witness> check_dual_pair(const Signature& circuits, const Signature& cocircuits, int k) {
  for (const auto& x : circuits.vectors)
    for (const auto& y : cocircuits.vectors) {
      if (k >= 0 && cardinality(x.support() & y.support()) > k) continue;
      if (!orthogonal(x, y)) return Witness{"DP3", "circuit and cocircuit are not orthogonal", {x, y}, {}, 0};
    }
  return std::nullopt;
}

}  // namespace hfm
