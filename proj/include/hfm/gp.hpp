#pragma once

// Grassmann-Pluecker functions: values on sorted r-subsets, tuple evaluation by
// the alternating rule, relation checks and the conversions to and from
// circuit signatures.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hfm/circuits.hpp"
#include "hfm/fvector.hpp"
#include "hfm/matroid.hpp"

namespace hfm {

class GPFunction {
 public:
  // All values zero; callers fill them with set(). Rank 0 is allowed (the
  // constant function on the empty tuple), which minors of full rank produce.
  GPFunction(Hyperfield field, GroundSet ground, int rank);

  const Hyperfield& field() const { return field_; }
  const GroundSet& ground() const { return ground_; }
  int size() const { return ground_.size(); }
  int rank() const { return rank_; }

  // p_S for an r-subset S (the value on its sorted tuple); 0 for other sizes.
  Element value(Subset s) const;
  void set(Subset s, Element v);
  // phi(x_1..x_r): 0 on repeats, otherwise the sorting sign times p_S.
  Element evaluate(std::span<const int> tuple) const;

  // Supporting r-subsets, lexicographic.
  std::vector<Subset> support() const;
  bool identically_zero() const;

 private:
  Hyperfield field_;
  GroundSet ground_;
  int rank_;
  std::vector<Element> values_;  // indexed by subset mask
};

GPFunction scalar_mul(const Element& alpha, const GPFunction& phi);
// phi = alpha * psi for some nonzero alpha.
bool projectively_equal(const GPFunction& phi, const GPFunction& psi);

struct GPWitness {
  std::string axiom;  // GP1, basis-exchange, GP3', GP3, dressian
  std::string message;
  std::vector<int> I, J;
  std::vector<Element> terms;
};

// The r+1 terms (-1)^k phi(I minus x_k) phi(x_k, J) for sorted I, J (k from 1).
std::vector<Element> relation_terms(const GPFunction& phi, std::span<const int> I, std::span<const int> J);
bool relation_holds(const std::vector<Element>& terms);

// (GP1), basis exchange on the support, and the 3-term relations |I \ J| = 3.
std::optional<GPWitness> check_gp_weak(const GPFunction& phi);
// (GP1) and every relation.
std::optional<GPWitness> check_gp_strong(const GPFunction& phi);
// The relation in Pluecker coordinates with sign(i; I, J) = (-1)^s.
bool pluecker_relation_check(const GPFunction& phi, Subset I, Subset J);
// Tropical 3-term relations over all A of size r-2 and i < j < k < l outside A.
std::optional<GPWitness> check_dressian(const GPFunction& phi);

// Throws InputError if the support fails basis exchange.
Matroid underlying_matroid(const GPFunction& phi);

// phi*(S) = sign(S, S') invol(p_{S'}) with S' the complement.
GPFunction dual_gp(const GPFunction& phi);

// One representative per circuit C, normalized to 1 at min C, from
// X(f)/X(e) = -phi(e, rest)/phi(f, rest) for bases {f} + rest containing C \ e.
// Every admissible basis is checked; disagreement throws ConsistencyError.
Signature circuits_from_gp(const GPFunction& phi);
// circuits_from_gp(dual_gp(phi)).
Signature cocircuits_from_gp(const GPFunction& phi);

// A GP function for a weak dual pair, normalized to 1 on the lex-first basis.
// Throws InputError when (DP1), (DP2) or (DP3)' fail and ConsistencyError when
// the values propagated along basis exchanges disagree.
GPFunction gp_from_dual_pair(const Signature& circuits, const Signature& cocircuits);

}  // namespace hfm
