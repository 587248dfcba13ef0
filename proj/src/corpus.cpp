#include "hfm/corpus.hpp"

#include <numbers>

#include "hfm/error.hpp"
#include "hfm/transforms.hpp"

namespace hfm {

Rational determinant(RationalMatrix a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a[pivot][c] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      std::swap(a[pivot], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      Rational factor = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= factor * a[c][k];
    }
  }
  return det;
}

namespace {

RationalMatrix columns(const RationalMatrix& rows, Subset s) {
  RationalMatrix out;
  for (const auto& row : rows) {
    std::vector<Rational> r;
    for (int e : elements(s)) r.push_back(row.at(e));
    out.push_back(std::move(r));
  }
  return out;
}

RationalMatrix integer_matrix(std::initializer_list<std::initializer_list<long>> rows) {
  RationalMatrix out;
  for (const auto& row : rows) {
    std::vector<Rational> r;
    for (long v : row) r.emplace_back(v);
    out.push_back(std::move(r));
  }
  return out;
}

template <class Map>
GPFunction map_values(const GPFunction& phi, const Hyperfield& target, Map&& map) {
  GPFunction out(target, phi.ground(), phi.rank());
  for (Subset s : k_subsets(phi.size(), phi.rank())) out.set(s, map(phi.value(s)));
  return out;
}

GPFunction constant_gp(const Hyperfield& field, int r, int m, Subset forbidden_basis = 0) {
  GPFunction phi(field, GroundSet::range(m), r);
  for (Subset s : k_subsets(m, r))
    if (s != forbidden_basis) phi.set(s, field.one());
  return phi;
}

GPFunction triangle_example() {
  GPFunction phi(Hyperfield::triangle(), GroundSet::range(6), 3);
  const Subset middle = bit(1) | bit(2) | bit(3), tail = bit(4) | bit(5);
  for (Subset s : k_subsets(6, 3)) {
    double v = 1;
    if (s == (bit(0) | tail)) {
      v = 4;
    } else if (contains(s, 0) && cardinality(s & middle) == 1 && cardinality(s & tail) == 1) {
      v = 2;
    }
    phi.set(s, Element::triangle(v));
  }
  return phi;
}

GPFunction phase_example() {
  const double pi = std::numbers::pi;
  GroundSet g({"x", "y", "z", "t", "l", "m"});
  GPFunction phi(Hyperfield::phase(), g, 3);
  auto put = [&](std::vector<std::string> labels, double angle) {
    phi.set(g.subset_of(labels), Element::phase_angle(angle, phi.field().involution()));
  };
  put({"x", "y", "z"}, 0);
  put({"x", "y", "t"}, pi);
  put({"x", "z", "t"}, 0);
  put({"y", "z", "t"}, pi);
  put({"x", "y", "l"}, 0.9 + pi);
  put({"x", "z", "l"}, 2.5);
  put({"y", "z", "l"}, 5.5);
  put({"x", "t", "l"}, 2.7 + pi);
  put({"y", "t", "l"}, 5.8 - pi);
  put({"z", "t", "l"}, 0.3 + pi);
  put({"x", "y", "m"}, 0.5 + pi);
  put({"x", "z", "m"}, 1.2);
  put({"y", "z", "m"}, 3.8);
  put({"x", "t", "m"}, 3 + pi);
  put({"y", "t", "m"}, 5.1 - pi);
  put({"z", "t", "m"}, 0.4 + pi);
  put({"x", "l", "m"}, 3.1);
  put({"y", "l", "m"}, 0.1);
  put({"z", "l", "m"}, 0);
  put({"t", "l", "m"}, 3.1);
  return phi;
}

std::vector<CorpusEntry> build_corpus() {
  const auto u24 = integer_matrix({{1, 0, 1, 1}, {0, 1, 1, 2}});
  const auto wide = integer_matrix({{1, 0, 0, 1, 1, 1}, {0, 1, 0, 1, 2, 3}, {0, 0, 1, 1, 3, 5}});
  const auto sparse = integer_matrix({{1, 0, 0, 1, 1, 0}, {0, 1, 0, 1, 0, 1}, {0, 0, 1, 0, 1, 1}});
  const auto parallel = integer_matrix({{1, 2, 0, 1, 3}, {0, 0, 1, 1, 2}, {0, 0, 0, 0, 0}});
  const auto padic = integer_matrix({{1, 0, 1, 1}, {0, 1, 2, 4}});
  const auto padic3 = integer_matrix({{1, 0, 0, 2, 1, 4}, {0, 1, 0, 1, 6, 3}, {0, 0, 1, 8, 2, 12}});
  const auto sign = HyperfieldHom::rational_sign();

  auto q24 = rational_matrix_gp(u24, GroundSet::range(4));
  auto q36 = rational_matrix_gp(wide, GroundSet::range(6));
  auto q36s = rational_matrix_gp(sparse, GroundSet::range(6));
  auto q25 = rational_matrix_gp(RationalMatrix(parallel.begin(), parallel.begin() + 2), GroundSet::range(5));
  auto to_phase = [](const Element& x) {
    if (x.is_zero()) return Element::phase_zero();
    return Element::phase_angle(sgn(x.rational()) > 0 ? 0 : std::numbers::pi);
  };
  auto to_triangle = [](const Element& x) { return Element::triangle(Rational(abs(x.rational())).get_d()); };

  std::vector<CorpusEntry> out;
  auto add = [&](std::string name, std::string description, GPFunction phi, Verdict v, bool weak = true,
                 bool strong = true, std::vector<std::string> wi = {}, std::vector<std::string> wj = {}) {
    out.push_back(CorpusEntry{std::move(name), std::move(description), std::move(phi), v, weak, strong, std::move(wi),
                              std::move(wj)});
  };

  add("triangle-weak-not-strong", "rank 3 on 6 elements over the triangle hyperfield, values 4, 2, 1",
      triangle_example(), Verdict::WeakOnly, true, false, {"1", "2", "3", "4"}, {"5", "6"});
  add("phase-weak-not-strong",
      "rank 3 on {x,y,z,t,l,m} over the phase hyperfield; one 3-term relation sits exactly on the antipodal boundary",
      phase_example(), Verdict::InvalidSignature, true, false, {"x", "y", "z", "t"}, {"l", "m"});
  add("krasner-u13", "uniform matroid U(1,3)", constant_gp(Hyperfield::krasner(), 1, 3), Verdict::Strong);
  add("krasner-u24", "uniform matroid U(2,4)", constant_gp(Hyperfield::krasner(), 2, 4), Verdict::Strong);
  add("krasner-u36-minus", "U(3,6) with {1,2,3} made a circuit-hyperplane",
      constant_gp(Hyperfield::krasner(), 3, 6, bit(0) | bit(1) | bit(2)), Verdict::Strong);
  add("krasner-parallel", "rank 2 on 5 elements with a loop-free parallel class",
      pushforward_gp(HyperfieldHom::to_krasner(Hyperfield::rational()), q25), Verdict::Strong);
  add("sign-u13", "chirotope of the row [1 1 1]",
      pushforward_gp(sign, rational_matrix_gp(integer_matrix({{1, 1, 1}}), GroundSet::range(3))), Verdict::Strong);
  add("sign-u24", "chirotope of [[1,0,1,1],[0,1,1,2]]", pushforward_gp(sign, q24), Verdict::Strong);
  add("sign-36", "chirotope of a generic 3 x 6 integer matrix", pushforward_gp(sign, q36), Verdict::Strong);
  add("sign-36-sparse", "chirotope of a non-uniform 3 x 6 0/1 matrix", pushforward_gp(sign, q36s), Verdict::Strong);
  add("gf3-u24", "[[1,0,1,1],[0,1,1,2]] over GF(3)", finite_field_matrix_gp(u24, GroundSet::range(4), 3),
      Verdict::Strong);
  add("gf3-36-sparse", "non-uniform 3 x 6 0/1 matrix over GF(3)", finite_field_matrix_gp(sparse, GroundSet::range(6), 3),
      Verdict::Strong);
  add("rational-u24", "maximal minors of [[1,0,1,1],[0,1,1,2]]", q24, Verdict::Strong);
  add("rational-36", "maximal minors of a generic 3 x 6 integer matrix", q36, Verdict::Strong);
  add("rational-25-parallel", "maximal minors of a 2 x 5 matrix with parallel columns", q25, Verdict::Strong);
  add("tropical-2adic-24", "2-adic norms of the minors of [[1,0,1,1],[0,1,2,4]]",
      pushforward_gp(HyperfieldHom::rational_padic(2), rational_matrix_gp(padic, GroundSet::range(4))), Verdict::Strong);
  add("tropical-2adic-36", "2-adic norms of the minors of a 3 x 6 integer matrix",
      pushforward_gp(HyperfieldHom::rational_padic(2), rational_matrix_gp(padic3, GroundSet::range(6))),
      Verdict::Strong);
  add("tropical-3adic-36", "3-adic norms of the minors of a generic 3 x 6 integer matrix",
      pushforward_gp(HyperfieldHom::rational_padic(3), q36), Verdict::Strong);
  add("phase-real-u24", "phases (0 or pi) of the minors of [[1,0,1,1],[0,1,1,2]]",
      map_values(q24, Hyperfield::phase(), to_phase), Verdict::Strong);
  add("triangle-abs-u24", "absolute values of the minors of [[1,0,1,1],[0,1,1,2]]",
      map_values(q24, Hyperfield::triangle(), to_triangle), Verdict::Strong);
  return out;
}

}  // namespace

GPFunction rational_matrix_gp(const RationalMatrix& rows, const GroundSet& ground) {
  const int r = static_cast<int>(rows.size());
  for (const auto& row : rows)
    if (static_cast<int>(row.size()) != ground.size()) throw InputError("matrix width differs from the ground set size");
  GPFunction phi(Hyperfield::rational(), ground, r);
  for (Subset s : k_subsets(ground.size(), r)) phi.set(s, Element::rational(determinant(columns(rows, s))));
  return phi;
}

GPFunction finite_field_matrix_gp(const RationalMatrix& rows, const GroundSet& ground, std::int64_t p) {
  auto q = rational_matrix_gp(rows, ground);
  return map_values(q, Hyperfield::finite_field(p), [p](const Element& x) {
    const Rational& v = x.rational();
    if (v.get_den() != 1) throw InputError("finite field reduction needs an integer matrix");
    mpz_class r = v.get_num() % static_cast<long>(p);
    return Element::residue(r.get_si(), p);
  });
}

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = build_corpus();
  return entries;
}

const CorpusEntry& corpus_entry(std::string_view name) {
  for (const auto& e : corpus())
    if (e.name == name) return e;
  throw InputError("unknown corpus entry: " + std::string(name));
}

}  // namespace hfm
