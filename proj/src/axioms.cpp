#include <array>
#include <functional>

#include "hfm/hyperfield.hpp"
#include "hfm/random.hpp"

namespace hfm {

namespace {

std::string show(std::initializer_list<const Element*> xs) {
  std::string s = "(";
  bool first = true;
  for (const auto* x : xs) {
    s += (first ? "" : ", ") + x->to_string();
    first = false;
  }
  return s + ")";
}

// First sample point of `a` missing from `b`, if any.
std::optional<Element> escaping_point(const SumSet& a, const SumSet& b) {
  for (const auto& p : a.sample_points())
    if (!b.contains(p)) return p;
  return std::nullopt;
}

class Checker {
 public:
  explicit Checker(const Hyperfield& f) : field_(f) {
    for (const char* n : {"commutativity", "zero-identity", "associativity", "unique-hyperinverse", "reversibility",
                          "multiplicative-monoid", "absorption", "multiplicative-inverse", "distributivity"})
      report_.axioms.push_back({n, true, {}});
    report_.field = f;
  }

  AxiomReport& report() { return report_; }

  void fail(std::size_t idx, std::string witness) {
    auto& a = report_.axioms[idx];
    if (a.passed) {
      a.passed = false;
      a.witness = std::move(witness);
    }
  }

  void single(const Element& x) {
    const auto z = field_.zero();
    if (!(sum_set(x, z) == SumSet::singleton(x))) fail(1, show({&x}));
    if (!(mul(x, z) == z) || !(mul(z, x) == z)) fail(6, show({&x}));
    if (!(mul(x, field_.one()) == x)) fail(5, "identity at " + show({&x}));
    if (!x.is_zero() && !(mul(x, inv(x)) == field_.one())) fail(7, show({&x}));
    if (!sum_set(x, neg(x)).contains(z)) fail(3, "0 not in x + (-x) at " + show({&x}));
    if (!(neg(neg(x)) == x)) fail(3, "neg(neg(x)) != x at " + show({&x}));
  }

  void pair(const Element& x, const Element& y) {
    auto xy = sum_set(x, y);
    if (!(xy == sum_set(y, x))) fail(0, show({&x, &y}));
    if (!(mul(x, y) == mul(y, x))) fail(5, "commutativity at " + show({&x, &y}));
    if (!(y == neg(x)) && xy.contains(field_.zero()))
      fail(3, "0 in x + y with y != -x at " + show({&x, &y}));
    // (H2): z in x + y implies x in z + (-y), probed at the sample points of x + y.
    for (const auto& z : xy.sample_points())
      if (!sum_set(z, neg(y)).contains(x)) {
        fail(4, show({&x, &y, &z}));
        break;
      }
  }

  void triple(const Element& x, const Element& y, const Element& z) {
    if (!(sum_set(x, y).plus(z) == sum_set(y, z).plus(x))) fail(2, show({&x, &y, &z}));
    if (!(mul(mul(x, y), z) == mul(x, mul(y, z)))) fail(5, "associativity at " + show({&x, &y, &z}));
    if (!(product(SumSet::singleton(x), sum_set(y, z)) == sum_set(mul(x, y), mul(x, z))))
      fail(8, show({&x, &y, &z}));
    if (sum_set(x, y).contains(z) && !sum_set(z, neg(y)).contains(x)) fail(4, show({&x, &y, &z}));
  }

  void quadruple(const Element& x, const Element& y, const Element& z, const Element& t) {
    auto& dd = report_.double_distributivity;
    if (!dd.passed) return;
    auto lhs = product(sum_set(x, y), sum_set(z, t));
    std::array<Element, 4> terms{mul(x, z), mul(x, t), mul(y, z), mul(y, t)};
    auto rhs = fold_sum(terms);
    if (lhs == rhs) return;
    auto p = escaping_point(rhs, lhs);
    std::string where = p ? " at " + p->to_string() + " (in the expanded sum only)" : "";
    if (!p && (p = escaping_point(lhs, rhs))) where = " at " + p->to_string() + " (in the product only)";
    if (!p) return;  // representations differ only within tolerance
    dd.passed = false;
    dd.witness = "(x + y)(z + t) != xz + xt + yz + yt for (x, y, z, t) = " + show({&x, &y, &z, &t}) + ": " +
                 lhs.to_string() + " vs " + rhs.to_string() + where;
  }

 private:
  Hyperfield field_;
  AxiomReport report_;
};

}  // namespace

bool AxiomReport::all_passed() const {
  for (const auto& a : axioms)
    if (!a.passed) return false;
  return double_distributivity.passed;
}

AxiomReport check_hyperfield_axioms(const Hyperfield& field, int sample_budget, std::uint64_t seed) {
  Checker c(field);
  if (field.is_finite()) {
    const auto all = field.elements();
    for (const auto& x : all) {
      c.single(x);
      for (const auto& y : all) {
        c.pair(x, y);
        for (const auto& z : all) {
          c.triple(x, y, z);
          for (const auto& t : all) c.quadruple(x, y, z, t);
        }
      }
    }
    c.report().exhaustive = true;
    return c.report();
  }
  Rng rng(seed);
  for (int i = 0; i < sample_budget; ++i) {
    auto x = random_element(field, rng), y = random_element(field, rng);
    auto z = random_element(field, rng), t = random_element(field, rng);
    c.single(x);
    c.pair(x, y);
    c.pair(x, neg(x));
    c.triple(x, y, z);
    c.quadruple(x, y, z, t);
  }
  return c.report();
}

}  // namespace hfm
