#include "hfm/fvector.hpp"

#include <algorithm>
#include <unordered_set>

#include "hfm/error.hpp"

namespace hfm {

GroundSet::GroundSet(std::vector<std::string> labels, bool numeric) : labels_(std::move(labels)), numeric_(numeric) {
  if (static_cast<int>(labels_.size()) > kMaxGroundSize)
    throw InputError("ground set larger than " + std::to_string(kMaxGroundSize) + " elements");
  std::unordered_set<std::string> seen;
  for (const auto& l : labels_)
    if (!seen.insert(l).second) throw InputError("duplicate ground set label: " + l);
}

GroundSet GroundSet::range(int m, int first) {
  std::vector<std::string> labels;
  for (int i = 0; i < m; ++i) labels.push_back(std::to_string(first + i));
  return GroundSet(std::move(labels), true);
}

int GroundSet::index_of(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw InputError("unknown ground set label: " + std::string(label));
  return static_cast<int>(it - labels_.begin());
}

Subset GroundSet::subset_of(const std::vector<std::string>& labels) const {
  Subset s = 0;
  for (const auto& l : labels) s |= bit(index_of(l));
  return s;
}

std::vector<std::string> GroundSet::labels_of(Subset s) const {
  std::vector<std::string> out;
  for (int e : elements(s)) out.push_back(labels_.at(e));
  return out;
}

std::string GroundSet::format(Subset s) const {
  std::string out = "{";
  bool first = true;
  for (int e : elements(s)) {
    out += (first ? "" : ",") + labels_.at(e);
    first = false;
  }
  return out + "}";
}

GroundSet GroundSet::without(Subset removed) const {
  std::vector<std::string> keep;
  for (int e = 0; e < size(); ++e)
    if (!contains(removed, e)) keep.push_back(labels_[e]);
  return GroundSet(std::move(keep), numeric_);
}

FVector::FVector(Hyperfield field, std::vector<Element> entries) : field_(field), entries_(std::move(entries)) {
  for (const auto& x : entries_)
    if (!(x.field() == field_)) throw InputError("vector entry outside " + field_.name());
}

FVector FVector::zero(const Hyperfield& field, int m) { return FVector(field, std::vector<Element>(m, field.zero())); }

void FVector::set(int e, Element x) {
  if (!(x.field() == field_)) throw InputError("vector entry outside " + field_.name());
  entries_.at(e) = std::move(x);
}

Subset FVector::support() const {
  Subset s = 0;
  for (int e = 0; e < size(); ++e)
    if (!entries_[e].is_zero()) s |= bit(e);
  return s;
}

std::string FVector::to_string() const {
  std::string out = "(";
  for (int e = 0; e < size(); ++e) out += (e ? ", " : "") + entries_[e].to_string();
  return out + ")";
}

bool operator==(const FVector& a, const FVector& b) {
  return a.field_ == b.field_ && a.size() == b.size() && std::equal(a.entries_.begin(), a.entries_.end(), b.entries_.begin());
}

namespace {

void require_compatible(const FVector& x, const FVector& y) {
  if (!(x.field() == y.field())) throw InputError("hyperfield mismatch between vectors");
  if (x.size() != y.size()) throw InputError("vectors over different ground sets");
}

}  // namespace

FVector scalar_mul(const Element& alpha, const FVector& x) {
  std::vector<Element> out;
  out.reserve(x.size());
  for (const auto& v : x.entries()) out.push_back(mul(alpha, v));
  return FVector(x.field(), std::move(out));
}

std::vector<Element> inner_terms(const FVector& x, const FVector& y) {
  require_compatible(x, y);
  std::vector<Element> terms;
  for (int e : elements(x.support() & y.support())) terms.push_back(mul(x[e], invol(y[e])));
  return terms;
}

bool orthogonal(const FVector& x, const FVector& y) {
  auto terms = inner_terms(x, y);
  return terms.empty() || zero_in_sum(terms);
}

std::optional<Element> projective_ratio(const FVector& x, const FVector& y) {
  require_compatible(x, y);
  Subset s = x.support();
  if (s != y.support()) return std::nullopt;
  if (s == 0) return x.field().one();
  int e = lowest(s);
  Element alpha = div(x[e], y[e]);
  if (!(scalar_mul(alpha, y) == x)) return std::nullopt;
  return alpha;
}

bool projectively_equal(const FVector& x, const FVector& y) { return projective_ratio(x, y).has_value(); }

std::vector<FVector> supp_min(const std::vector<FVector>& vectors) {
  std::vector<FVector> out;
  for (const auto& x : vectors) {
    Subset sx = x.support();
    bool minimal = std::none_of(vectors.begin(), vectors.end(), [&](const FVector& y) {
      Subset sy = y.support();
      return sy != sx && is_subset(sy, sx);
    });
    if (minimal) out.push_back(x);
  }
  return out;
}

FVector restrict_to(const FVector& x, Subset keep) {
  std::vector<Element> out;
  for (int e : elements(keep)) out.push_back(x[e]);
  return FVector(x.field(), std::move(out));
}

std::vector<Subset> Signature::supports() const {
  std::vector<Subset> out;
  for (const auto& v : vectors) out.push_back(v.support());
  return out;
}

const FVector* Signature::with_support(Subset s) const {
  for (const auto& v : vectors)
    if (v.support() == s) return &v;
  return nullptr;
}

int normalize_signature(Signature& sig) {
  std::vector<FVector> kept;
  for (auto& v : sig.vectors)
    if (std::none_of(kept.begin(), kept.end(), [&](const FVector& k) { return projectively_equal(k, v); }))
      kept.push_back(std::move(v));
  int removed = static_cast<int>(sig.vectors.size() - kept.size());
  sig.vectors = std::move(kept);
  return removed;
}

bool signatures_equal(const Signature& a, const Signature& b) {
  if (!(a.field == b.field) || a.size() != b.size()) return false;
  auto covered = [](const Signature& p, const Signature& q) {
    return std::all_of(p.vectors.begin(), p.vectors.end(), [&](const FVector& x) {
      return std::any_of(q.vectors.begin(), q.vectors.end(), [&](const FVector& y) { return projectively_equal(x, y); });
    });
  };
  return covered(a, b) && covered(b, a);
}

bool is_vector_of(const FVector& v, const Signature& cocircuits) {
  return std::all_of(cocircuits.vectors.begin(), cocircuits.vectors.end(),
                     [&](const FVector& d) { return orthogonal(v, d); });
}

bool is_covector_of(const FVector& v, const Signature& circuits) {
  return std::all_of(circuits.vectors.begin(), circuits.vectors.end(),
                     [&](const FVector& c) { return orthogonal(v, c); });
}

}  // namespace hfm
