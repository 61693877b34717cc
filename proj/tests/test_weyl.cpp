#include <doctest.h>

#include "taw/fixture.hpp"

using namespace taw;

namespace {

const Fixture& fx(const std::string& name) {
  static std::map<std::string, Fixture> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, make_fixture(name)).first;
  return it->second;
}

}  // namespace

TEST_CASE("semidirect product multiplication") {
  const auto& W = fx("A1").weyl();
  IWElement t1 = iw_translation(W, {1});
  CHECK(multiply(W, t1, t1) == iw_translation(W, {2}));
  IWElement s = W.simple[1];  // the finite reflection
  CHECK(is_zero(s.lambda));
  CHECK(multiply(W, s, s) == iw_identity(W));
  // t^{alpha_check} s is an involution
  IWElement ts = multiply(W, t1, s);
  CHECK(invert(W, ts) == ts);
  CHECK(multiply(W, ts, ts) == iw_identity(W));
  CHECK(multiply(W, invert(W, t1), t1) == iw_identity(W));
}

TEST_CASE("lengths in the simply connected rank one group") {
  const auto& W = fx("A1").weyl();
  CHECK(length(W, iw_identity(W)) == 0);
  CHECK(length(W, iw_translation(W, {1})) == 2);
  CHECK(length(W, iw_translation(W, {-1})) == 2);
  CHECK(length(W, iw_translation(W, {3})) == 6);
  CHECK(length(W, W.simple[0]) == 1);
  CHECK(length(W, W.simple[1]) == 1);
  // dominant translations add
  for (Int a = 0; a <= 5; ++a)
    for (Int b = 0; b <= 5; ++b)
      CHECK(length(W, iw_translation(W, {a + b})) ==
            length(W, iw_translation(W, {a})) + length(W, iw_translation(W, {b})));
}

TEST_CASE("simple systems and length zero subgroups") {
  CHECK(fx("A1").weyl().simple.size() == 2);
  CHECK(fx("A1").weyl().omega.size() == 1);
  CHECK(fx("A1-adj").weyl().omega.size() == 2);
  CHECK(fx("A2").weyl().simple.size() == 3);
  CHECK(fx("A2").weyl().omega.size() == 1);
  CHECK(fx("A2-fold").weyl().simple.size() == 2);
  CHECK(fx("A2-fold").weyl().omega.size() == 1);
  CHECK(fx("A4-fold").weyl().simple.size() == 3);
  CHECK(fx("A4-fold").weyl().omega.size() == 1);
  CHECK(fx("C2").weyl().simple.size() == 3);
  CHECK(fx("C2").weyl().omega.size() == 1);
  // the nontrivial length-zero element of the adjoint rank-one group
  const auto& W = fx("A1-adj").weyl();
  const IWElement& om = W.omega[1];
  CHECK(length(W, om) == 0);
  CHECK(om.lambda == Vec{1});
  CHECK(om.fin != 0);
}

TEST_CASE("reduced words") {
  const auto& W = fx("A1").weyl();
  ReducedWord rw = reduced_word(W, iw_translation(W, {1}));
  CHECK(rw.letters == std::vector<int>{0, 1});
  CHECK(rw.omega == 0);
  CHECK(from_word(W, rw) == iw_translation(W, {1}));
  CHECK(reduced_word(W, iw_identity(W)).letters.empty());

  const auto& Wa = fx("A1-adj").weyl();
  ReducedWord rwo = reduced_word(Wa, Wa.omega[1]);
  CHECK(rwo.letters.empty());
  CHECK(rwo.omega == 1);

  // every ball element reassembles from its word
  for (const auto& [w, len] : enumerate_ball(W, 5)) {
    ReducedWord r = reduced_word(W, w);
    CHECK(static_cast<Int>(r.letters.size()) == len);
    CHECK(from_word(W, r) == w);
  }
}

TEST_CASE("lengths agree with graph distance on every preset") {
  for (const auto& name : preset_names()) {
    const auto& W = fx(name).weyl();
    for (const auto& [w, d] : enumerate_ball(W, 5)) CHECK(length(W, w) == d);
  }
}

TEST_CASE("bruhat order basics") {
  const auto& W = fx("A1").weyl();
  CHECK(bruhat_leq(W, iw_identity(W), iw_translation(W, {1})));
  CHECK_FALSE(bruhat_leq(W, iw_translation(W, {2}), iw_translation(W, {1})));
  CHECK(bruhat_leq(W, W.simple[1], W.simple[1]));
  // different length-zero classes never compare
  const auto& Wa = fx("A1-adj").weyl();
  CHECK_FALSE(bruhat_leq(Wa, Wa.omega[1], iw_identity(Wa)));
  CHECK_FALSE(bruhat_leq(Wa, iw_identity(Wa), Wa.omega[1]));
}

TEST_CASE("bruhat order matches the subword oracle") {
  for (const std::string name : {"A1-adj", "A2-fold", "C2"}) {
    const auto& W = fx(name).weyl();
    auto ball = enumerate_ball(W, 4);
    for (const auto& [w, lw] : ball) {
      auto below = bruhat_interval_below(W, w);
      for (const auto& [v, lv] : ball) CHECK(bruhat_leq(W, v, w) == (below.count(v) > 0));
    }
  }
}

TEST_CASE("minimal coset representatives") {
  const auto& W = fx("A1").weyl();
  // dominant translations are already minimal
  IWElement t1 = iw_translation(W, {1});
  CHECK(min_coset_rep(W, t1) == t1);
  // the antidominant class is represented by the affine reflection
  IWElement s0 = W.simple[0];
  CHECK(min_coset_rep(W, iw_translation(W, {-1})) == s0);
  CHECK(min_coset_rep(W, s0) == s0);
  CHECK(min_coset_rep(W, iw_identity(W)) == iw_identity(W));
  CHECK(coset_index(W, s0) == Vec{-1});
  // exhaustive: the representative is the strict minimum of its orbit
  for (const auto& [w, lw] : enumerate_ball(W, 6)) {
    IWElement m = min_coset_rep(W, w);
    for (int u = 1; u < W.fin.size(); ++u) {
      IWElement uw = multiply(W, iw_finite(W, u), w);
      if (!(uw == m)) CHECK(length(W, uw) > length(W, m));
    }
  }
}

TEST_CASE("quotient orders") {
  const auto& W = fx("A1").weyl();
  CHECK(quotient_bruhat_leq(W, {0}, {1}));
  CHECK(quotient_bruhat_leq(W, {1}, {2}));
  CHECK(quotient_bruhat_leq(W, {-1}, {1}));
  CHECK_FALSE(quotient_bruhat_leq(W, {2}, {1}));
  CHECK(double_quotient_bruhat_leq(W, {0}, {1}));
  CHECK_FALSE(double_quotient_bruhat_leq(W, {1}, {0}));
}

TEST_CASE("coset index is constant on cosets") {
  const auto& W = fx("A2-fold").weyl();
  for (const auto& [w, lw] : enumerate_ball(W, 5)) {
    Vec idx = coset_index(W, w);
    for (int u = 0; u < W.fin.size(); ++u)
      CHECK(coset_index(W, multiply(W, iw_finite(W, u), w)) == idx);
  }
}
