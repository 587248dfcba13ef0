#pragma once

// Vectors in F^E over a fixed, ordered ground set.

#include <optional>
#include <string>
#include <vector>

#include "hfm/hyperfield.hpp"
#include "hfm/subset.hpp"

namespace hfm {

// Ordered labels of E. The order is the total order used for signs of permutations.
class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::vector<std::string> labels, bool numeric = false);
  // Integer labels first, first+1, ..., first+m-1.
  static GroundSet range(int m, int first = 1);

  int size() const { return static_cast<int>(labels_.size()); }
  bool numeric() const { return numeric_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int e) const { return labels_.at(e); }
  // Throws InputError on unknown labels.
  int index_of(std::string_view label) const;
  Subset subset_of(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(Subset s) const;
  // "{1,2,3}" style rendering for reports.
  std::string format(Subset s) const;
  // The ground set with the members of `removed` dropped, order preserved.
  GroundSet without(Subset removed) const;

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  std::vector<std::string> labels_;
  bool numeric_ = false;
};

class FVector {
 public:
  FVector(Hyperfield field, std::vector<Element> entries);
  static FVector zero(const Hyperfield& field, int m);

  const Hyperfield& field() const { return field_; }
  int size() const { return static_cast<int>(entries_.size()); }
  const Element& operator[](int e) const { return entries_.at(e); }
  void set(int e, Element x);
  const std::vector<Element>& entries() const { return entries_; }
  Subset support() const;
  bool is_zero() const { return support() == 0; }
  std::string to_string() const;

  // Coordinatewise equality (tolerance-aware for triangle and phase).
  friend bool operator==(const FVector& a, const FVector& b);

 private:
  Hyperfield field_;
  std::vector<Element> entries_;
};

FVector scalar_mul(const Element& alpha, const FVector& x);
// The nonzero terms X(e) * invol(Y(e)), in ground-set order.
std::vector<Element> inner_terms(const FVector& x, const FVector& y);
// 0 in the hypersum of X(e) * invol(Y(e)).
bool orthogonal(const FVector& x, const FVector& y);
// alpha with x = alpha * y, if it exists.
std::optional<Element> projective_ratio(const FVector& x, const FVector& y);
bool projectively_equal(const FVector& x, const FVector& y);
// Members whose support properly contains no other member's support.
std::vector<FVector> supp_min(const std::vector<FVector>& vectors);
// Restrict to the coordinates in keep, re-indexed in order.
FVector restrict_to(const FVector& x, Subset keep);

// A candidate F-circuit set: one representative per projective class.
struct Signature {
  Hyperfield field;
  GroundSet ground;
  std::vector<FVector> vectors;

  int size() const { return ground.size(); }
  std::vector<Subset> supports() const;
  // The representative with the given support, if any.
  const FVector* with_support(Subset s) const;
};

// Collapse projectively equal representatives. Returns the number removed.
int normalize_signature(Signature& sig);
// Same ground set and the same projective classes.
bool signatures_equal(const Signature& a, const Signature& b);

// v is orthogonal to every member of `cocircuits` (resp. `circuits`).
bool is_vector_of(const FVector& v, const Signature& cocircuits);
bool is_covector_of(const FVector& v, const Signature& circuits);

}  // namespace hfm
