#include <doctest.h>

#include <set>

#include "taw/echelonnage.hpp"

using namespace taw;

namespace {

EchelonnageData fold_preset(const std::string& name) {
  auto p = preset(name);
  return fold(p.datum, p.aut);
}

}  // namespace

TEST_CASE("identity fold reproduces the input") {
  auto p = preset("A1");
  EchelonnageData e = fold(p.datum, p.aut);
  CHECK(e.free_rank == 1);
  CHECK(e.torsion.empty());
  CHECK(e.positive.size() == 1);
  CHECK(e.positive[0].functional == Vec{2});
  CHECK(e.positive[0].coroot == Vec{1});
  CHECK(e.reduced_type() == "A1");
  CHECK_FALSE(e.non_reduced());
  // trivial projection
  CHECK(e.project(Vec{5}) == Vec{5});
}

TEST_CASE("rank-2 flip gives a rank-1 non-reduced system") {
  EchelonnageData e = fold_preset("A2-fold");
  CHECK(e.free_rank == 1);
  CHECK(e.torsion.empty());
  // both fundamental coweights land on the same generator; their difference
  // lies in the kernel
  Vec w1 = e.project(Vec{1, 0});
  Vec w2 = e.project(Vec{0, 1});
  CHECK(w1 == w2);
  CHECK(is_zero(e.project(Vec{1, -1})));
  // two positive classes: the orbit sum of the swapped pair is doubled on
  // top of the fixed highest root
  CHECK(e.positive.size() == 2);
  CHECK(e.non_reduced());
  std::multiset<Int> values;
  for (const auto& r : e.positive) values.insert(e.eval(r.functional, w1));
  CHECK(values == std::multiset<Int>{1, 2});
  CHECK(e.eff.size() == 1);  // only the non-multipliable root drives the walls
  CHECK(e.reduced_type() == "A1");
  CHECK(e.pair_two_rho(w1) == 2);
  CHECK(e.pair_two_rho(e.project(Vec{1, 1})) == 4);
}

TEST_CASE("rank-4 flip gives the odd orthogonal fixed group") {
  EchelonnageData e = fold_preset("A4-fold");
  CHECK(e.free_rank == 2);
  CHECK(e.torsion.empty());
  CHECK(e.positive.size() == 6);
  CHECK(e.non_reduced());
  CHECK(e.eff.size() == 4);
  CHECK(e.eff_simple.size() == 2);
  CHECK(e.reduced_type() == "B2");
  CHECK(e.fixed_group_type() == "B2");
  // the projected fundamental coweight pairs to 4 with 2rho
  CHECK(e.pair_two_rho(e.project(Vec{1, 0, 0, 0})) == 4);
  CHECK(e.pair_two_rho(e.project(Vec{0, 1, 0, 0})) == 6);
}

TEST_CASE("two rho pairing is lift independent") {
  auto p = preset("A2-fold");
  EchelonnageData e = fold(p.datum, p.aut);
  for (Int a = -3; a <= 3; ++a)
    for (Int b = -3; b <= 3; ++b) {
      Vec la{a, b};
      Int direct = p.datum.pair(p.datum.two_rho, la);
      CHECK(e.pair_two_rho(e.project(la)) == direct);
      // shift by an element of (1 - sigma) Y
      Vec shift{a + 1, b - 1};
      CHECK(e.project(sub(la, sub(shift, mul(p.aut.dual_map, shift)))) ==
            e.project(add(la, Vec{0, 0})));
    }
}

TEST_CASE("orders on the coinvariant lattice") {
  EchelonnageData a1 = fold_preset("A1");
  CHECK(a1.coroot_leq(Vec{0}, Vec{1}));
  CHECK_FALSE(a1.coroot_leq(Vec{1}, Vec{0}));
  CHECK(a1.coroot_leq(Vec{-1}, Vec{1}));
  CHECK(a1.dominant_rep(Vec{-1}) == Vec{1});
  CHECK(a1.is_dominant(Vec{0}));
  CHECK_FALSE(a1.is_dominant(Vec{-2}));
  CHECK(a1.dominance_leq(Vec{-1}, Vec{1}));
  CHECK(a1.dominance_leq(Vec{1}, Vec{2}));
  CHECK_FALSE(a1.dominance_leq(Vec{2}, Vec{1}));

  EchelonnageData c2 = fold_preset("C2");
  // (1,1) - (1,0) is the second basis coroot
  CHECK(c2.coroot_leq(Vec{1, 0}, Vec{1, 1}));
  CHECK_FALSE(c2.coroot_leq(Vec{1, 1}, Vec{1, 0}));
  CHECK(c2.dominant_rep(Vec{-1, 0}) == Vec{1, 0});
}

TEST_CASE("torsion coinvariants from a sign torus") {
  // rank-1 torus, no roots, automorphism -1: the coinvariants are Z/2
  std::string cfg = R"({
    "name": "sign-torus",
    "rank": 1,
    "pairing_matrix": [[1]],
    "simple_roots": [],
    "simple_coroots": [],
    "automorphism": {"order": 2, "lattice_map": [[-1]], "permutation": []}
  })";
  auto p = load_config_json(cfg);
  EchelonnageData e = fold(p.datum, p.aut);
  CHECK(e.free_rank == 0);
  CHECK(e.torsion == std::vector<Int>{2});
  CHECK(e.positive.empty());
  CHECK(e.project(Vec{3}) == Vec{1});
  CHECK(e.project(Vec{4}) == Vec{0});
  CHECK(e.pair_two_rho(e.project(Vec{3})) == 0);
}

TEST_CASE("axiom checker accepts every preset fold") {
  for (const auto& name : preset_names()) {
    EchelonnageData e = fold_preset(name);
    CHECK_NOTHROW(check_root_system_axioms(e));
  }
}
