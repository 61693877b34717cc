#include <doctest.h>

#include "taw/fixture.hpp"
#include "taw/textio.hpp"

using namespace taw;

namespace {

const Fixture& fx(const std::string& name) {
  static std::map<std::string, Fixture> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, make_fixture(name)).first;
  return it->second;
}

}  // namespace

TEST_CASE("weight parsing") {
  CHECK(parse_weight("1,-2", 2) == Vec{1, -2});
  CHECK(parse_weight(" 3 , 4 ", 2) == Vec{3, 4});
  CHECK_THROWS_AS(parse_weight("1,2,3", 2), parse_error);
  CHECK_THROWS_AS(parse_weight("1,x", 2), parse_error);
  try {
    parse_weight("1,,2", 3);
    FAIL("expected a parse error");
  } catch (const parse_error& e) {
    std::string msg = e.pretty();
    CHECK(msg.find('^') != std::string::npos);
  }
}

TEST_CASE("element parsing and printing") {
  const auto& W = fx("A1").weyl();
  IWElement t1 = parse_element(W, "t[1]");
  CHECK(t1 == iw_translation(W, {1}));
  IWElement w = parse_element(W, "t[1] * s1");
  CHECK(w == multiply(W, t1, W.simple[1]));
  CHECK(parse_element(W, "s0 s1") == t1);
  CHECK(parse_element(W, "e") == iw_identity(W));
  CHECK_THROWS_AS(parse_element(W, "t[1] * s7"), parse_error);
  CHECK_THROWS_AS(parse_element(W, "t[1,2]"), parse_error);
  CHECK_THROWS_AS(parse_element(W, ""), parse_error);

  // round trip across a ball
  for (const auto& [el, len] : enumerate_ball(W, 5))
    CHECK(parse_element(W, format_element(W, el)) == el);
  const auto& Wa = fx("A1-adj").weyl();
  for (const auto& [el, len] : enumerate_ball(Wa, 4))
    CHECK(parse_element(Wa, format_element(Wa, el)) == el);
}

TEST_CASE("character formatting is sorted and parseable by eye") {
  const auto& f = fx("A1");
  Character c = weight_multiplicities(f.dual, {1});
  CHECK(format_character(c) == "-1 : 1\n0 : 1\n1 : 1\n");
}
