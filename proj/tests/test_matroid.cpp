#include <doctest.h>

#include <random>

#include "hfm/error.hpp"
#include "hfm/matroid.hpp"
#include "oracles.hpp"

using namespace hfm;

namespace {

Subset S(std::initializer_list<int> es) {
  Subset s = 0;
  for (int e : es) s |= bit(e);
  return s;
}

// A random matroid: the column matroid of a small random integer matrix.
Matroid random_matroid(std::mt19937_64& rng, int& m_out) {
  int m = std::uniform_int_distribution<int>(2, 6)(rng);
  int r = std::uniform_int_distribution<int>(1, std::min(3, m))(rng);
  auto a = oracle::random_integer_matrix(r, m, -2, 2, rng);
  m_out = m;
  auto cs = oracle::matrix_circuits(a, m);
  return Matroid::from_circuits(m, std::vector<Subset>(cs.begin(), cs.end()));
}

}  // namespace

TEST_CASE("uniform matroids") {
  auto u24 = Matroid::uniform(2, 4);
  CHECK(u24.rank() == 2);
  CHECK(u24.bases().size() == 6);
  CHECK(u24.circuits().size() == 4);
  CHECK(u24.dual().rank() == 2);
  CHECK(u24.dual() == u24);
  CHECK(u24.is_circuit(S({0, 1, 2})));
  CHECK_FALSE(u24.is_circuit(S({0, 1})));
  CHECK(u24.modular_pair(S({0, 1, 2}), S({0, 1, 3})));
  CHECK(Matroid::uniform(0, 3).circuits().size() == 3);  // three loops
}

TEST_CASE("circuit axioms are enforced") {
  CHECK_THROWS_AS(Matroid::from_circuits(3, {0}), InputError);
  CHECK_THROWS_AS(Matroid::from_circuits(3, {S({0, 1}), S({0, 1, 2})}), InputError);
  // {0,1} and {1,2} must eliminate 1 to a circuit inside {0,2}.
  CHECK_THROWS_AS(Matroid::from_circuits(3, {S({0, 1}), S({1, 2})}), InputError);
  auto v = validate_circuits(3, std::vector<Subset>{S({0, 1}), S({1, 2})});
  REQUIRE(v);
  CHECK(v->kind == CircuitViolation::Kind::Elimination);
  CHECK_FALSE(validate_circuits(3, std::vector<Subset>{S({0, 1}), S({1, 2}), S({0, 2})}));
}

TEST_CASE("bases and exchange") {
  std::vector<Subset> bad{S({0, 1}), S({2, 3})};
  CHECK_THROWS_AS(Matroid::from_bases(4, bad), InputError);
  std::vector<Subset> good{S({0, 1}), S({0, 2}), S({1, 2})};
  auto m = Matroid::from_bases(3, good);
  CHECK(m.circuits() == std::vector<Subset>{S({0, 1, 2})});
}

TEST_CASE("fundamental circuits and cocircuits") {
  // Parallel pair {0,1} plus a coloop 2.
  auto m = Matroid::from_circuits(3, {S({0, 1})});
  CHECK(m.rank() == 2);
  CHECK(m.fundamental_circuit(S({0, 2}), 1) == S({0, 1}));
  CHECK(m.fundamental_cocircuit(S({0, 2}), 2) == S({2}));
  CHECK(m.cocircuits() == std::vector<Subset>{S({0, 1}), S({2})});
  CHECK(m.max_independent_subset(S({0, 1})) == S({0}));
  CHECK(m.extend_to_basis(S({1})) == S({1, 2}));
}

TEST_CASE("minors") {
  auto u24 = Matroid::uniform(2, 4);
  CHECK(u24.deletion(S({3})) == Matroid::uniform(2, 3));
  CHECK(u24.contraction(S({3})) == Matroid::uniform(1, 3));
  // (M \ A)* = M* / A
  CHECK(u24.deletion(S({0})).dual() == u24.dual().contraction(S({0})));
}

TEST_CASE("property: column matroids agree with rank oracle") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    int r = std::uniform_int_distribution<int>(1, 3)(rng);
    int m = std::uniform_int_distribution<int>(r, 6)(rng);
    auto a = oracle::random_integer_matrix(r, m, -2, 2, rng);
    auto cs = oracle::matrix_circuits(a, m);
    auto mat = Matroid::from_circuits(m, std::vector<Subset>(cs.begin(), cs.end()));
    for (Subset s = 0; s < bit(m); ++s) REQUIRE(mat.rank(s) == oracle::column_rank(a, s));
  }
}

TEST_CASE("property: duality and minors") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    int m = 0;
    auto mat = random_matroid(rng, m);
    CHECK(mat.dual().dual() == mat);
    CHECK(mat.dual().rank() == m - mat.rank());
    for (Subset b : mat.bases()) CHECK(mat.dual().is_basis(full_set(m) & ~b));
    Subset a = std::uniform_int_distribution<Subset>(0, full_set(m))(rng);
    if (a == full_set(m)) continue;
    CHECK(mat.deletion(a).dual() == mat.dual().contraction(a));
    CHECK(mat.contraction(a).dual() == mat.dual().deletion(a));
  }
}

TEST_CASE("property: modular families match the lattice-height oracle") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    int m = 0;
    auto mat = random_matroid(rng, m);
    const auto& cs = mat.circuits();
    oracle::UnionLattice lattice(std::vector<oracle::Mask>(cs.begin(), cs.end()));
    const int n = static_cast<int>(cs.size());
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        CHECK(mat.modular_pair(cs[i], cs[j]) == lattice.modular({cs[i], cs[j]}));
        std::vector<Subset> fam{cs[i], cs[j]};
        CHECK(mat.modular_family(fam) == lattice.modular({cs[i], cs[j]}));
        for (int k = j + 1; k < n; ++k) {
          std::vector<Subset> f3{cs[i], cs[j], cs[k]};
          CHECK(mat.modular_family(f3) == lattice.modular({cs[i], cs[j], cs[k]}));
        }
      }
  }
}
