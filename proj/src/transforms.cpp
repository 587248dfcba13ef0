#include "hfm/transforms.hpp"

#include <algorithm>
#include <charconv>

#include "hfm/error.hpp"
#include "hfm/random.hpp"

namespace hfm {

Signature dual_circuits(const Signature& circuits) { return cocircuit_signature(circuits); }

// ------------------------------------------------------------------ minors

namespace {

GPFunction pin_trailing(const GPFunction& phi, Subset removed, int new_rank, Subset pinned) {
  const int m = phi.size();
  Subset keep = full_set(m) & ~removed;
  GPFunction out(phi.field(), phi.ground().without(removed), new_rank);
  auto tail = elements(pinned);
  for (Subset s : k_subsets(cardinality(keep), new_rank)) {
    auto tuple = elements(expand(s, keep));
    tuple.insert(tuple.end(), tail.begin(), tail.end());
    out.set(s, phi.evaluate(tuple));
  }
  return out;
}

void require_proper(const GPFunction& phi, Subset a) {
  if (!is_subset(a, full_set(phi.size()))) throw InputError("minor set outside the ground set");
  if (a == full_set(phi.size())) throw InputError("cannot remove the whole ground set");
}

}  // namespace

GPFunction contract_gp(const GPFunction& phi, Subset a) {
  require_proper(phi, a);
  return contract_gp(phi, a, underlying_matroid(phi).max_independent_subset(a));
}

GPFunction contract_gp(const GPFunction& phi, Subset a, Subset pinned) {
  require_proper(phi, a);
  auto M = underlying_matroid(phi);
  if (!is_subset(pinned, a) || !M.independent(pinned) || cardinality(pinned) != M.rank(a))
    throw InputError("pinned set is not a maximal independent subset of A");
  return pin_trailing(phi, a, phi.rank() - M.rank(a), pinned);
}

GPFunction delete_gp(const GPFunction& phi, Subset a) {
  require_proper(phi, a);
  auto M = underlying_matroid(phi);
  Subset rest = full_set(phi.size()) & ~a;
  Subset b = M.extend_to_basis(M.max_independent_subset(rest));
  return delete_gp(phi, a, b & a);
}

GPFunction delete_gp(const GPFunction& phi, Subset a, Subset pinned) {
  require_proper(phi, a);
  auto M = underlying_matroid(phi);
  Subset rest = full_set(phi.size()) & ~a;
  int k = M.rank(rest);
  // pinned is a basis of M/(E \ A) iff it lies in A and r(pinned u (E \ A)) = r with |pinned| = r - k.
  if (!is_subset(pinned, a) || cardinality(pinned) != M.rank() - k || M.rank(pinned | rest) != M.rank())
    throw InputError("pinned set is not a basis of the contraction onto A");
  return pin_trailing(phi, a, k, pinned);
}

Signature minor_circuits(const Signature& sig, Subset del, Subset con) {
  const int m = sig.size();
  if (!is_subset(del | con, full_set(m))) throw InputError("minor set outside the ground set");
  if (del & con) throw InputError("deleted and contracted sets overlap");
  Subset keep = full_set(m) & ~(del | con);
  Signature out{sig.field, sig.ground.without(del | con), {}};
  std::vector<FVector> restricted;
  for (const auto& x : sig.vectors) {
    if (x.support() & del) continue;
    FVector y = restrict_to(x, keep);
    if (!y.is_zero()) restricted.push_back(std::move(y));
  }
  out.vectors = supp_min(restricted);
  normalize_signature(out);
  return out;
}

// ------------------------------------------------------------------ homomorphisms

HyperfieldHom HyperfieldHom::to_krasner(const Hyperfield& source) {
  return HyperfieldHom(HomRule::ToKrasner, source, Hyperfield::krasner());
}

HyperfieldHom HyperfieldHom::rational_sign() {
  return HyperfieldHom(HomRule::RationalSign, Hyperfield::rational(), Hyperfield::sign());
}

HyperfieldHom HyperfieldHom::rational_padic(std::int64_t p) {
  // Reuse the primality check of the finite fields.
  Hyperfield::finite_field(p);
  return HyperfieldHom(HomRule::RationalPAdic, Hyperfield::rational(), Hyperfield::tropical(), p);
}

HyperfieldHom HyperfieldHom::identity(const Hyperfield& field) { return HyperfieldHom(HomRule::Identity, field, field); }

HyperfieldHom HyperfieldHom::parse(std::string_view name, const Hyperfield& source) {
  if (name == "krasner") return to_krasner(source);
  if (name == "identity") return identity(source);
  if (name == "sign") {
    if (source.kind() == HyperfieldKind::Rational) return rational_sign();
    if (source.kind() == HyperfieldKind::Sign) return identity(source);
    throw InputError("no sign homomorphism from " + source.name());
  }
  if (name.starts_with("padic:")) {
    if (source.kind() != HyperfieldKind::Rational) throw InputError("p-adic homomorphism needs rational input");
    std::int64_t p = 0;
    auto digits = name.substr(6);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) throw InputError("bad prime in " + std::string(name));
    return rational_padic(p);
  }
  throw InputError("unknown homomorphism: " + std::string(name));
}

std::string HyperfieldHom::name() const {
  switch (rule_) {
    case HomRule::ToKrasner: return source_.name() + "->krasner";
    case HomRule::RationalSign: return "rational->sign";
    case HomRule::RationalPAdic: return "rational->tropical (" + std::to_string(p_) + "-adic)";
    case HomRule::Identity: return "identity on " + source_.name();
  }
  return "?";
}

namespace {

int p_adic_order(mpz_class n, std::int64_t p) {
  int ord = 0;
  mpz_class q = static_cast<long>(p);
  while (n % q == 0) {
    n /= q;
    ++ord;
  }
  return ord;
}

}  // namespace

Element HyperfieldHom::operator()(const Element& x) const {
  if (!(x.field() == source_)) throw InputError("homomorphism " + name() + " applied to an element of " + x.field().name());
  switch (rule_) {
    case HomRule::ToKrasner: return Element::krasner(x.is_zero() ? 0 : 1);
    case HomRule::RationalSign: return Element::sign(sgn(x.rational()));
    case HomRule::RationalPAdic: {
      if (x.is_zero()) return target_.zero();
      const Rational& q = x.rational();
      int ord = p_adic_order(abs(q.get_num()), p_) - p_adic_order(q.get_den(), p_);
      mpz_class pk;
      mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p_), static_cast<unsigned long>(std::abs(ord)));
      // Norm p^(-ord): large order means small norm.
      Rational norm = ord >= 0 ? Rational(1, pk) : Rational(pk, 1);
      norm.canonicalize();
      return Element::tropical(norm);
    }
    case HomRule::Identity: return x;
  }
  return x;
}

AxiomReport validate_hom(const HyperfieldHom& f, int samples, std::uint64_t seed) {
  const auto& src = f.source();
  AxiomReport report;
  report.field = src;
  report.exhaustive = src.is_finite();
  AxiomCheck unital{"unital", true, {}}, mult{"multiplicative", true, {}}, add{"additive", true, {}};
  if (!f(src.zero()).is_zero()) {
    unital.passed = false;
    unital.witness = "f(0) != 0";
  }
  if (!(f(src.one()) == f.target().one())) {
    unital.passed = false;
    unital.witness = "f(1) != 1";
  }
  auto check_pair = [&](const Element& x, const Element& y) {
    if (mult.passed && !(f(mul(x, y)) == mul(f(x), f(y)))) {
      mult.passed = false;
      mult.witness = "x = " + x.to_string() + ", y = " + y.to_string();
    }
    if (!add.passed) return;
    std::vector<Element> images{f(x), f(y)};
    for (const auto& z : sum_set(x, y).sample_points())
      if (!member_of_sum(f(z), images)) {
        add.passed = false;
        add.witness = "f(" + z.to_string() + ") outside f(" + x.to_string() + ") + f(" + y.to_string() + ")";
        return;
      }
  };
  if (src.is_finite()) {
    auto els = src.elements();
    for (const auto& x : els)
      for (const auto& y : els) check_pair(x, y);
  } else {
    Rng rng(seed);
    for (int i = 0; i < samples; ++i) {
      Element x = random_element(src, rng);
      // Mix in exact negatives so that cancellation is exercised.
      Element y = i % 4 == 0 ? neg(x) : random_element(src, rng);
      check_pair(x, y);
    }
  }
  report.axioms = {unital, mult, add};
  return report;
}

FVector pushforward(const HyperfieldHom& f, const FVector& x) {
  std::vector<Element> out;
  out.reserve(x.size());
  for (const auto& v : x.entries()) out.push_back(f(v));
  return FVector(f.target(), std::move(out));
}

Signature pushforward_circuits(const HyperfieldHom& f, const Signature& sig) {
  if (!(sig.field == f.source())) throw InputError("signature is not over the source of " + f.name());
  Signature out{f.target(), sig.ground, {}};
  for (const auto& x : sig.vectors) out.vectors.push_back(pushforward(f, x));
  normalize_signature(out);
  return out;
}

GPFunction pushforward_gp(const HyperfieldHom& f, const GPFunction& phi) {
  if (!(phi.field() == f.source())) throw InputError("GP function is not over the source of " + f.name());
  GPFunction out(f.target(), phi.ground(), phi.rank());
  for (Subset s : k_subsets(phi.size(), phi.rank())) out.set(s, f(phi.value(s)));
  return out;
}

PushforwardComparison compare_pushforwards(const HyperfieldHom& f, const GPFunction& phi) {
  PushforwardComparison cmp;
  cmp.via_circuits = pushforward_circuits(f, circuits_from_gp(phi));
  cmp.via_cocircuits = dual_circuits(pushforward_circuits(f, cocircuits_from_gp(phi)));
  cmp.via_gp = circuits_from_gp(pushforward_gp(f, phi));
  cmp.coincide = signatures_equal(cmp.via_circuits, cmp.via_gp) && signatures_equal(cmp.via_cocircuits, cmp.via_gp);
  return cmp;
}

}  // namespace hfm
