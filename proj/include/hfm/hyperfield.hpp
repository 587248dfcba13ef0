#pragma once

// Exact arithmetic for the built-in hyperfields.
//
// Every hyperfield has single-valued multiplication and a multivalued addition
// whose results are represented symbolically by SumSet. Krasner, sign, finite
// fields and the rationals are exact. The tropical hyperfield uses its
// multiplicative presentation on nonnegative rationals, so ties are exact. The
// triangle and phase hyperfields carry doubles and compare with an absolute
// tolerance (see tolerance()).

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace hfm {

using Rational = mpq_class;

enum class HyperfieldKind : std::uint8_t {
  Krasner,
  Sign,
  Tropical,
  Triangle,
  Phase,
  Rational,
  FiniteField,
};

enum class Involution : std::uint8_t { Identity, Conjugation };

// Absolute tolerance for triangle lengths and phase angles. Initialised from the
// HFM_EPS environment variable (default 1e-9).
double tolerance();
void set_tolerance(double eps);

class Element;

class Hyperfield {
 public:
  static Hyperfield krasner() { return Hyperfield(HyperfieldKind::Krasner); }
  static Hyperfield sign() { return Hyperfield(HyperfieldKind::Sign); }
  static Hyperfield tropical() { return Hyperfield(HyperfieldKind::Tropical); }
  static Hyperfield triangle() { return Hyperfield(HyperfieldKind::Triangle); }
  static Hyperfield phase(Involution inv = Involution::Conjugation);
  static Hyperfield rational() { return Hyperfield(HyperfieldKind::Rational); }
  static Hyperfield finite_field(std::int64_t p);

  // Accepts the names produced by name(): krasner, sign, tropical, triangle,
  // phase, phase:identity, rational, gf:<p>.
  static Hyperfield parse(std::string_view name);

  HyperfieldKind kind() const { return kind_; }
  Involution involution() const { return involution_; }
  std::int64_t characteristic() const { return p_; }
  bool is_finite() const;
  // Fields, Krasner, sign and tropical are doubly distributive; triangle and phase are not.
  bool is_doubly_distributive() const;
  bool uses_tolerance() const;
  std::string name() const;

  Element zero() const;
  Element one() const;
  // All elements; only for finite hyperfields.
  std::vector<Element> elements() const;
  std::vector<Element> units() const;

  // Defaults to the Krasner hyperfield.
  Hyperfield() = default;
  friend bool operator==(const Hyperfield&, const Hyperfield&) = default;

 private:
  explicit Hyperfield(HyperfieldKind k) : kind_(k) {}
  HyperfieldKind kind_ = HyperfieldKind::Krasner;
  Involution involution_ = Involution::Identity;
  std::int64_t p_ = 0;
};

// A single hyperfield element. Payload by kind:
//   Krasner 0/1, Sign -1/0/1, FiniteField residue in [0, p): integer
//   Tropical magnitude >= 0, Rational: Rational
//   Triangle length >= 0: double
//   Phase: angle in [0, 2pi) as double; the zero element carries the integer 0.
class Element {
 public:
  static Element krasner(int bit);
  static Element sign(int s);
  static Element tropical(Rational magnitude);
  static Element triangle(double length);
  static Element phase_angle(double radians, Involution inv = Involution::Conjugation);
  static Element phase_zero(Involution inv = Involution::Conjugation);
  static Element rational(Rational q);
  static Element residue(std::int64_t value, std::int64_t p);
  // Builds the element of `field` with the given payload; used by parsers.
  static Element in(const Hyperfield& field, std::int64_t n);
  static Element in(const Hyperfield& field, Rational q);
  static Element in(const Hyperfield& field, double x);

  const Hyperfield& field() const { return field_; }
  bool is_zero() const;
  std::int64_t integer() const { return std::get<std::int64_t>(value_); }
  const Rational& rational() const { return std::get<Rational>(value_); }
  double real() const { return std::get<double>(value_); }

  std::string to_string() const;

  // Tolerance-aware for triangle and phase, exact otherwise.
  friend bool operator==(const Element& a, const Element& b);
  // Strict weak order used to canonicalise finite sets of exact elements.
  friend bool exact_less(const Element& a, const Element& b);

 private:
  Element(Hyperfield f, std::variant<std::int64_t, Rational, double> v)
      : field_(f), value_(std::move(v)) {}
  Hyperfield field_;
  std::variant<std::int64_t, Rational, double> value_;
};

bool exact_less(const Element& a, const Element& b);

Element mul(const Element& a, const Element& b);
// The unique hyperinverse: 0 lies in a + neg(a).
Element neg(const Element& a);
// Multiplicative inverse; throws DomainError on 0.
Element inv(const Element& a);
// The configured involution: conjugation negates phase angles, otherwise identity.
Element invol(const Element& a);
Element div(const Element& a, const Element& b);
// (-1)^k a
Element signed_power(const Element& a, int k);

// An exactly representable, nonempty subset of a hyperfield arising as a hypersum.
class SumSet {
 public:
  struct Finite {
    std::vector<Element> items;
  };
  // Tropical: the point {bound} or, when down, the down-set {c : c <= bound}.
  struct DownSet {
    Rational bound;
    bool down = false;
  };
  // Triangle: disjoint closed intervals of [0, inf), sorted.
  struct Intervals {
    std::vector<std::pair<double, double>> parts;
  };
  // Phase: an open arc {start + t : 0 < t < length}, 0 < length <= 2pi.
  struct Arc {
    double start;
    double length;
  };
  struct Arcs {
    bool zero = false;
    bool full = false;  // every nonzero phase
    std::vector<double> points;
    std::vector<Arc> arcs;
  };
  using Representation = std::variant<Finite, DownSet, Intervals, Arcs>;

  static SumSet singleton(const Element& x);

  const Hyperfield& field() const { return field_; }
  const Representation& representation() const { return rep_; }

  bool contains(const Element& z) const;
  // The single member when the set is a point.
  std::optional<Element> as_point() const;
  // Representative members: every finite member, interval endpoints and
  // midpoints, arc midpoints and quarter points.
  std::vector<Element> sample_points() const;
  std::string to_string() const;

  friend bool operator==(const SumSet& a, const SumSet& b);

  // {s + x : s in this} as a union of binary hypersums.
  SumSet plus(const Element& x) const;
  // Setwise product {s * t : s in a, t in b}.
  friend SumSet product(const SumSet& a, const SumSet& b);
  friend SumSet sum_set(const Element& a, const Element& b);

 private:
  SumSet(Hyperfield f, Representation r) : field_(f), rep_(std::move(r)) {}
  void canonicalize();
  Hyperfield field_;
  Representation rep_;
};

SumSet sum_set(const Element& a, const Element& b);
// Iterated binary hypersum, folded left to right.
SumSet fold_sum(std::span<const Element> terms);
// 0 in x_1 + ... + x_k, decided by a closed-form predicate per hyperfield.
bool zero_in_sum(std::span<const Element> terms);
// z in x_1 + ... + x_k, via 0 in x_1 + ... + x_k + (-z).
bool member_of_sum(const Element& z, std::span<const Element> terms);
// Phase only: pi minus the largest angular gap between the nonzero terms.
// Positive means 0 is robustly in the sum, negative means robustly not; values
// near zero are the antipodal boundary case.
double phase_zero_margin(std::span<const Element> terms);

struct AxiomCheck {
  std::string name;
  bool passed = true;
  std::string witness;
};

struct AxiomReport {
  Hyperfield field;
  bool exhaustive = false;
  std::vector<AxiomCheck> axioms;
  AxiomCheck double_distributivity{"double-distributivity", true, {}};
  bool all_passed() const;
};

// Hypergroup, hyperring and hyperfield axioms plus double distributivity.
// Exhaustive over finite hyperfields; otherwise sample_budget random draws.
AxiomReport check_hyperfield_axioms(const Hyperfield& field, int sample_budget = 1000,
                                    std::uint64_t seed = 1);

}  // namespace hfm
