#pragma once

// Duality, minors, hyperfield homomorphisms and push-forwards.

#include <cstdint>
#include <optional>
#include <string>

#include "hfm/gp.hpp"

namespace hfm {

// The cocircuit signature, via the constructive ratio description.
Signature dual_circuits(const Signature& circuits);

// phi/A: pins a maximal independent subset of A as trailing arguments. The
// overload takes the pinned set explicitly (must be a maximal independent subset of A).
GPFunction contract_gp(const GPFunction& phi, Subset a);
GPFunction contract_gp(const GPFunction& phi, Subset a, Subset pinned);
// phi\A: pins a basis of M/(E \ A) taken from A.
GPFunction delete_gp(const GPFunction& phi, Subset a);
GPFunction delete_gp(const GPFunction& phi, Subset a, Subset pinned);

// Delete `del`, then contract `con`, on the restricted ground set.
Signature minor_circuits(const Signature& sig, Subset del, Subset con);

enum class HomRule { ToKrasner, RationalSign, RationalPAdic, Identity };

class HyperfieldHom {
 public:
  // The canonical map to Krasner (0 to 0, units to 1) from any hyperfield.
  static HyperfieldHom to_krasner(const Hyperfield& source);
  static HyperfieldHom rational_sign();
  // x -> p^(-ord_p x) in the multiplicative presentation of the tropical hyperfield.
  static HyperfieldHom rational_padic(std::int64_t p);
  static HyperfieldHom identity(const Hyperfield& field);
  // krasner | sign | padic:<p> | identity
  static HyperfieldHom parse(std::string_view name, const Hyperfield& source);

  HomRule rule() const { return rule_; }
  const Hyperfield& source() const { return source_; }
  const Hyperfield& target() const { return target_; }
  std::int64_t prime() const { return p_; }
  std::string name() const;

  Element operator()(const Element& x) const;

 private:
  HyperfieldHom(HomRule rule, Hyperfield source, Hyperfield target, std::int64_t p = 0)
      : rule_(rule), source_(source), target_(target), p_(p) {}
  HomRule rule_;
  Hyperfield source_, target_;
  std::int64_t p_;
};

// f(0) = 0, f(1) = 1, multiplicativity and f(x + y) inside f(x) + f(y);
// exhaustive for finite sources, otherwise `samples` random pairs.
AxiomReport validate_hom(const HyperfieldHom& f, int samples = 1000, std::uint64_t seed = 1);

FVector pushforward(const HyperfieldHom& f, const FVector& x);
Signature pushforward_circuits(const HyperfieldHom& f, const Signature& sig);
GPFunction pushforward_gp(const HyperfieldHom& f, const GPFunction& phi);

// The three push-forward constructions of a matroid given by phi: circuits of
// f_*(C), the circuits dual to f_*(D), and the circuits of f_* phi.
struct PushforwardComparison {
  Signature via_circuits, via_cocircuits, via_gp;
  bool coincide = false;
};
PushforwardComparison compare_pushforwards(const HyperfieldHom& f, const GPFunction& phi);

}  // namespace hfm
