#pragma once

// Circuit axioms for signatures over a hyperfield: weak (modular pairs) and
// strong (modular families) elimination, the fundamental-circuit span test, and
// the cocircuit signature of a weak matroid.
//
// Signatures store one representative per projective class. Every axiom is
// invariant under rescaling, so the checkers fix scalings (X as stored, partners
// scaled to cancel X at the eliminated element) instead of ranging over F^x.

#include <optional>
#include <string>
#include <vector>

#include "hfm/fvector.hpp"
#include "hfm/matroid.hpp"

namespace hfm {

struct Witness {
  // C0, C1, C2, matroid, C3', C3, C3'', support-elimination, missing-circuit
  std::string axiom;
  std::string message;
  // The concrete, scaled vectors involved: X first, then the partners.
  std::vector<FVector> vectors;
  // Eliminated elements (or e, f for the non-modular variant).
  std::vector<int> elements;
  Subset basis = 0;
};

enum class Verdict { InvalidSignature, UnderlyingNotMatroid, WeakOnly, Strong };
std::string verdict_name(Verdict v);

struct Classification {
  Verdict verdict;
  std::optional<Witness> witness;
};

std::optional<Witness> check_C0_C2(const Signature& sig);
// The classical matroid on the supports; throws InputError if they are not circuits.
Matroid underlying_matroid(const Signature& sig);

// (C3)': modular pairs.
std::optional<Witness> check_weak_elimination(const Signature& sig);
// (C3): modular families {X, X_1..X_k} with k <= k_max (default: corank).
std::optional<Witness> check_strong_elimination(const Signature& sig, int k_max = -1);
// (C3)'': X(f) in sum over e outside B of X(e) X_{B,e}(f), for all X and bases B.
std::optional<Witness> check_C3_doubleprime(const Signature& sig);
// Support-level elimination for arbitrary (not necessarily modular) pairs.
std::optional<Witness> check_weak_nonmodular_elimination(const Signature& sig);

// Members Z of the signature, suitably scaled, with support inside
// (union of supports) \ eliminated and Z(f) in the hypersum of xs[i](f) for all f.
std::vector<FVector> find_eliminants(const Signature& sig, const std::vector<FVector>& xs, Subset eliminated);

// Strong elimination decides the strong/weak split.
Classification classify(const Signature& sig, int k_max = -1);
// Same pipeline, but with (C3)'' deciding the strong/weak split.
Classification classify_via_doubleprime(const Signature& sig);

// The cocircuit signature D of a weak matroid (ratios W(e)/W(f) = -X(f)/X(e)
// along circuits X inside A + e + f, A maximal independent in the complement of
// the cocircuit), with the involution applied so that C and D are orthogonal.
// Throws ConsistencyError if the ratios disagree.
Signature cocircuit_signature(const Signature& circuits);

// (DP3)_k: X orthogonal to Y whenever |supp X n supp Y| <= k. Returns the first
// failing pair as a witness.
std::optional<Witness> check_dual_pair(const Signature& circuits, const Signature& cocircuits, int k);

}  // namespace hfm
