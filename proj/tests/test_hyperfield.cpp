#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "hfm/error.hpp"
#include "hfm/hyperfield.hpp"
#include "hfm/random.hpp"

using namespace hfm;

namespace {

constexpr double kPi = std::numbers::pi;

Element ang(double a) { return Element::phase_angle(a); }
Element tr(long n) { return Element::tropical(Rational(n)); }
Element tri(double x) { return Element::triangle(x); }

// Integer-grid fold for tropical and triangle inputs with integer magnitudes.
// With integer inputs every hypersum endpoint is an integer, so the integer
// members of the grid fold are exactly the integer members of the true sum.
std::set<long> grid_fold(HyperfieldKind kind, const std::vector<long>& terms) {
  std::set<long> acc{terms.front()};
  for (std::size_t i = 1; i < terms.size(); ++i) {
    std::set<long> next;
    long b = terms[i];
    for (long a : acc) {
      if (kind == HyperfieldKind::Tropical) {
        if (a != b) next.insert(std::max(a, b));
        else
          for (long c = 0; c <= a; ++c) next.insert(c);
      } else {
        for (long c = std::abs(a - b); c <= a + b; ++c) next.insert(c);
      }
    }
    acc = std::move(next);
  }
  return acc;
}

// Table-driven fold for the sign hyperfield.
std::set<int> sign_fold(const std::vector<int>& terms) {
  std::set<int> acc{terms.front()};
  for (std::size_t i = 1; i < terms.size(); ++i) {
    std::set<int> next;
    int b = terms[i];
    for (int a : acc) {
      if (a == 0) next.insert(b);
      else if (b == 0 || a == b) next.insert(a);
      else next.insert({-1, 0, 1});
    }
    acc = std::move(next);
  }
  return acc;
}

std::vector<Element> random_terms(const Hyperfield& f, Rng& rng) {
  int n = std::uniform_int_distribution<int>(1, 4)(rng);
  std::vector<Element> out;
  for (int i = 0; i < n; ++i) out.push_back(random_element(f, rng));
  return out;
}

const std::vector<Hyperfield>& all_fields() {
  static const std::vector<Hyperfield> fields{
      Hyperfield::krasner(),  Hyperfield::sign(),     Hyperfield::tropical(),        Hyperfield::triangle(),
      Hyperfield::phase(),    Hyperfield::rational(), Hyperfield::finite_field(3), Hyperfield::finite_field(5),
  };
  return fields;
}

}  // namespace

TEST_CASE("multiplication") {
  CHECK(mul(tr(3), tr(4)) == tr(12));
  CHECK(mul(Element::sign(-1), Element::sign(-1)) == Element::sign(1));
  auto p = mul(ang(0.9), ang(5.5));
  CHECK(p.real() == doctest::Approx(std::fmod(0.9 + 5.5, 2 * kPi)).epsilon(1e-12));
  CHECK(p.real() == doctest::Approx(0.11681469).epsilon(1e-7));
  CHECK(mul(Element::phase_zero(), ang(1.0)).is_zero());
  CHECK(mul(Element::residue(2, 3), Element::residue(2, 3)) == Element::residue(1, 3));
  CHECK_THROWS_AS(mul(tr(1), Element::sign(1)), InputError);
}

TEST_CASE("negation, inverse, involution") {
  CHECK(neg(Element::sign(1)) == Element::sign(-1));
  // The triangle hyperinverse of a is a itself: scan a grid of candidates y with 0 in [|a-y|, a+y].
  for (double a : {0.0, 0.5, 1.0, 3.0}) {
    CHECK(neg(tri(a)) == tri(a));
    int hits = 0;
    for (int k = 0; k <= 40; ++k) {
      double y = k * 0.125;
      if (std::abs(a - y) <= 0) {
        ++hits;
        CHECK(y == a);
      }
    }
    CHECK(hits == 1);
  }
  auto c = invol(ang(1.2));
  CHECK(c == ang(2 * kPi - 1.2));
  CHECK(invol(Element::phase_angle(1.2, Involution::Identity)) == Element::phase_angle(1.2, Involution::Identity));
  CHECK(invol(Element::sign(-1)) == Element::sign(-1));
  CHECK_THROWS_AS(inv(Element::sign(0)), DomainError);
  CHECK_THROWS_AS(inv(tr(0)), DomainError);
  CHECK(inv(Element::residue(3, 7)) == Element::residue(5, 7));
  CHECK(inv(tr(4)) == Element::tropical(Rational(1, 4)));
}

TEST_CASE("hyperfield ids") {
  CHECK_THROWS_AS(Hyperfield::finite_field(4), InputError);
  CHECK_THROWS_AS(Hyperfield::parse("gf:9"), InputError);
  CHECK_THROWS_AS(Hyperfield::parse("octonion"), InputError);
  for (const auto& f : all_fields()) CHECK(Hyperfield::parse(f.name()) == f);
  CHECK(Hyperfield::parse("phase:identity").involution() == Involution::Identity);
  CHECK_THROWS_AS(Element::tropical(Rational(-1)), InputError);
  CHECK_THROWS_AS(Element::triangle(-0.5), InputError);
  CHECK(ang(2 * kPi + 0.5).real() == doctest::Approx(0.5));
  CHECK(ang(-0.5).real() == doctest::Approx(2 * kPi - 0.5));
}

TEST_CASE("binary hypersums") {
  auto k = sum_set(Element::krasner(1), Element::krasner(1));
  CHECK(k.contains(Element::krasner(0)));
  CHECK(k.contains(Element::krasner(1)));

  auto t55 = sum_set(tr(5), tr(5));
  const auto& d = std::get<SumSet::DownSet>(t55.representation());
  CHECK(d.down);
  CHECK(d.bound == 5);
  CHECK(sum_set(tr(5), tr(2)) == SumSet::singleton(tr(5)));

  auto v = sum_set(tri(3), tri(4));
  const auto& iv = std::get<SumSet::Intervals>(v.representation());
  REQUIRE(iv.parts.size() == 1);
  CHECK(iv.parts[0].first == 1);
  CHECK(iv.parts[0].second == 7);

  // Phase: shorter open arc, antipodal triple, coincident point.
  auto arc = sum_set(ang(0.2), ang(1.0));
  CHECK(arc.contains(ang(0.6)));
  CHECK_FALSE(arc.contains(ang(0.2)));
  CHECK_FALSE(arc.contains(ang(3.0)));
  CHECK_FALSE(arc.contains(Element::phase_zero()));
  auto anti = sum_set(ang(0), ang(kPi));
  CHECK(anti.contains(Element::phase_zero()));
  CHECK(anti.contains(ang(0)));
  CHECK(anti.contains(ang(kPi)));
  CHECK_FALSE(anti.contains(ang(1.0)));
  CHECK(sum_set(ang(1.0), ang(1.0)) == SumSet::singleton(ang(1.0)));
}

TEST_CASE("fold_sum examples") {
  std::vector<Element> s{Element::sign(1), Element::sign(-1), Element::sign(1)};
  auto oracle = sign_fold({1, -1, 1});
  CHECK(oracle == std::set<int>{-1, 0, 1});
  auto folded = fold_sum(s);
  for (int v : {-1, 0, 1}) CHECK(folded.contains(Element::sign(v)) == oracle.count(v));

  std::vector<Element> t{tr(3), tr(3), tr(1)};
  auto tgrid = grid_fold(HyperfieldKind::Tropical, {3, 3, 1});
  auto tf = fold_sum(t);
  CHECK(tf == SumSet(sum_set(tr(3), tr(3))));
  for (long c = 0; c <= 8; ++c) CHECK(tf.contains(tr(c)) == tgrid.count(c));

  std::vector<Element> p{ang(0), ang(kPi)};
  auto pf = fold_sum(p);
  CHECK(pf.contains(Element::phase_zero()));
  CHECK(pf.contains(ang(0)));
  CHECK(pf.contains(ang(kPi)));
  CHECK_FALSE(pf.contains(ang(kPi / 2)));

  std::vector<Element> none;
  CHECK_THROWS_AS(fold_sum(none), InputError);
  CHECK_THROWS_AS(zero_in_sum(none), InputError);
}

TEST_CASE("zero_in_sum examples") {
  std::vector<Element> k1{Element::krasner(1), Element::krasner(1), Element::krasner(1)};
  std::vector<Element> k2{Element::krasner(1), Element::krasner(0), Element::krasner(0)};
  CHECK(zero_in_sum(k1));
  CHECK_FALSE(zero_in_sum(k2));

  // The 4-term relation (1*4) + (1*1) + (1*1) + (1*1) from the triangle counterexample.
  std::vector<Element> v1{tri(4), tri(1), tri(1), tri(1)};
  CHECK_FALSE(zero_in_sum(v1));
  CHECK(grid_fold(HyperfieldKind::Triangle, {4, 1, 1, 1}).count(0) == 0);
  CHECK_FALSE(fold_sum(v1).contains(tri(0)));
  // With a fourth 1 the largest term is exactly balanced: 4 <= 1+1+1+1.
  std::vector<Element> v1b{tri(1), tri(4), tri(1), tri(1), tri(1)};
  CHECK(zero_in_sum(v1b));
  CHECK(grid_fold(HyperfieldKind::Triangle, {1, 4, 1, 1, 1}).count(0) == 1);
  std::vector<Element> v2{tri(3), tri(1), tri(1), tri(1), tri(1)};
  CHECK(zero_in_sum(v2));
  CHECK(grid_fold(HyperfieldKind::Triangle, {3, 1, 1, 1, 1}).count(0) == 1);
  CHECK(fold_sum(v2).contains(tri(0)));

  // 1 + e^{2pi i/3} + e^{4pi i/3} = 0 with all coefficients 1 > 0.
  double re = 1 + std::cos(2 * kPi / 3) + std::cos(4 * kPi / 3);
  double im = std::sin(2 * kPi / 3) + std::sin(4 * kPi / 3);
  CHECK(std::hypot(re, im) < 1e-12);
  std::vector<Element> ph{ang(0), ang(2 * kPi / 3), ang(4 * kPi / 3)};
  CHECK(zero_in_sum(ph));
  CHECK(fold_sum(ph).contains(Element::phase_zero()));

  // Antipodal boundary: a third direction off the line breaks it.
  std::vector<Element> line{ang(0), ang(kPi), ang(kPi / 2)};
  CHECK_FALSE(zero_in_sum(line));
  CHECK_FALSE(fold_sum(line).contains(Element::phase_zero()));
  std::vector<Element> single{tri(0)};
  CHECK(zero_in_sum(single));
}

TEST_CASE("member_of_sum examples") {
  Rng rng(7);
  for (const auto& f : all_fields())
    for (int i = 0; i < 20; ++i) {
      auto x = random_element(f, rng);
      std::vector<Element> one{x};
      CHECK(member_of_sum(x, one));
    }
  std::vector<Element> t33{tr(3), tr(3)}, t31{tr(3), tr(1)};
  CHECK(member_of_sum(tr(2), t33));
  CHECK_FALSE(member_of_sum(tr(2), t31));
  std::vector<Element> s{Element::sign(1), Element::sign(-1)};
  CHECK(member_of_sum(Element::sign(0), s));
}

TEST_CASE("phase_zero_margin") {
  std::vector<Element> w{ang(3.1), ang(0.1), ang(0), ang(3.1)};
  // Largest gap runs from 3.1 round to 0: 2pi - 3.1.
  CHECK(phase_zero_margin(w) == doctest::Approx(kPi - (2 * kPi - 3.1)));
  CHECK(phase_zero_margin(w) < -1e-6);
  CHECK_FALSE(zero_in_sum(w));
}

TEST_CASE("axiom suites") {
  for (const auto& f : {Hyperfield::krasner(), Hyperfield::sign(), Hyperfield::finite_field(2),
                        Hyperfield::finite_field(3), Hyperfield::finite_field(5)}) {
    auto r = check_hyperfield_axioms(f);
    CAPTURE(f.name());
    CHECK(r.exhaustive);
    for (const auto& a : r.axioms) {
      CAPTURE(a.name);
      CAPTURE(a.witness);
      CHECK(a.passed);
    }
    CHECK(r.double_distributivity.passed);
  }
  for (const auto& f : {Hyperfield::tropical(), Hyperfield::rational(), Hyperfield::triangle(), Hyperfield::phase()}) {
    auto r = check_hyperfield_axioms(f, 1000, 3);
    CAPTURE(f.name());
    CHECK_FALSE(r.exhaustive);
    for (const auto& a : r.axioms) {
      CAPTURE(a.name);
      CAPTURE(a.witness);
      CHECK(a.passed);
    }
    CHECK(r.double_distributivity.passed == f.is_doubly_distributive());
    if (!f.is_doubly_distributive()) CHECK_FALSE(r.double_distributivity.witness.empty());
  }
}

TEST_CASE("triangle double distributivity witness") {
  auto lhs = product(sum_set(tri(1), tri(2)), sum_set(tri(1), tri(2)));
  std::vector<Element> terms{tri(1), tri(2), tri(2), tri(4)};
  auto rhs = fold_sum(terms);
  CHECK_FALSE(lhs.contains(tri(0.5)));
  CHECK(rhs.contains(tri(0.5)));
}

TEST_CASE("closed forms agree with the fold") {
  Rng rng(11);
  for (const auto& f : all_fields()) {
    CAPTURE(f.name());
    for (int i = 0; i < 1000; ++i) {
      auto terms = random_terms(f, rng);
      auto folded = fold_sum(terms);
      CAPTURE(folded.to_string());
      CHECK(zero_in_sum(terms) == folded.contains(f.zero()));
      auto z = random_element(f, rng);
      CHECK(member_of_sum(z, terms) == folded.contains(z));
      for (const auto& p : folded.sample_points()) CHECK(member_of_sum(p, terms));
    }
  }
}

TEST_CASE("integer grid oracle for tropical and triangle folds") {
  Rng rng(5);
  for (auto kind : {HyperfieldKind::Tropical, HyperfieldKind::Triangle}) {
    for (int i = 0; i < 300; ++i) {
      int n = std::uniform_int_distribution<int>(1, 4)(rng);
      std::vector<long> raw;
      std::vector<Element> terms;
      for (int j = 0; j < n; ++j) {
        long v = std::uniform_int_distribution<long>(0, 4)(rng);
        raw.push_back(v);
        terms.push_back(kind == HyperfieldKind::Tropical ? tr(v) : tri(static_cast<double>(v)));
      }
      auto grid = grid_fold(kind, raw);
      for (long c = 0; c <= 17; ++c) {
        auto z = kind == HyperfieldKind::Tropical ? tr(c) : tri(static_cast<double>(c));
        CHECK(member_of_sum(z, terms) == grid.count(c));
      }
    }
  }
}

TEST_CASE("fold is invariant under permutation") {
  Rng rng(13);
  for (const auto& f : all_fields()) {
    CAPTURE(f.name());
    for (int i = 0; i < 300; ++i) {
      auto terms = random_terms(f, rng);
      auto base = fold_sum(terms);
      std::shuffle(terms.begin(), terms.end(), rng);
      auto shuffled = fold_sum(terms);
      CAPTURE(base.to_string());
      CAPTURE(shuffled.to_string());
      for (const auto& p : base.sample_points()) CHECK(shuffled.contains(p));
      for (const auto& p : shuffled.sample_points()) CHECK(base.contains(p));
    }
  }
}

TEST_CASE("scalar distributivity") {
  Rng rng(17);
  for (const auto& f : all_fields()) {
    CAPTURE(f.name());
    for (int i = 0; i < 300; ++i) {
      auto a = random_unit(f, rng);
      auto x = random_element(f, rng), y = random_element(f, rng), z = random_element(f, rng);
      std::vector<Element> xy{x, y}, axy{mul(a, x), mul(a, y)};
      CHECK(member_of_sum(z, xy) == member_of_sum(mul(a, z), axy));
    }
  }
}

TEST_CASE("finite hyperfields: negation and reversibility exhaustively") {
  for (const auto& f : {Hyperfield::krasner(), Hyperfield::sign(), Hyperfield::finite_field(3)}) {
    auto all = f.elements();
    for (const auto& x : all) {
      CHECK(neg(neg(x)) == x);
      int inverses = 0;
      for (const auto& y : all) inverses += sum_set(x, y).contains(f.zero());
      CHECK(inverses == 1);
      for (const auto& y : all)
        for (const auto& z : all)
          if (sum_set(x, y).contains(z)) CHECK(sum_set(z, neg(y)).contains(x));
    }
  }
}
