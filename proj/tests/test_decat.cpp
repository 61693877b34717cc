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

TEST_CASE("central class of the rank one adjoint character") {
  const auto& f = fx("A1");
  CentralClass z = central_class(f, {1});
  HeckeElement expect = bernstein(*f.hecke, {1});
  expect += bernstein(*f.hecke, {0});
  expect += bernstein(*f.hecke, {-1});
  CHECK(z.element == expect);
  CHECK(z.restricted.size() == 3);

  CentralClass triv = central_class(f, {0});
  CHECK(triv.element == hecke_one(f.weyl()));
}

TEST_CASE("central class downstairs through the flip") {
  const auto& f = fx("A2-fold");
  CentralClass z = central_class(f, {1, 0});
  HeckeElement expect = bernstein(*f.hecke, {1});
  expect += bernstein(*f.hecke, {0});
  expect += bernstein(*f.hecke, {-1});
  CHECK(z.element == expect);
}

TEST_CASE("weight polynomials") {
  LaurentInt want = laurent_v(2) + laurent_one() + laurent_v(-2);
  CHECK(weight_poly(fx("A1"), {1}).poly == want);
  CHECK(weight_poly(fx("A2-fold"), {1, 0}).poly == want);
  CHECK(weight_poly(fx("A1"), {0}).poly == laurent_one());
  // value at one is the dimension
  CHECK(weight_poly(fx("A2"), {1, 1}).poly.eval_at_one() == 8);
}

TEST_CASE("kernel dimensions") {
  CHECK(ker_dim(fx("A1"), {1}) == 1);
  CHECK(ker_dim(fx("A1"), {0}) == 1);
  CHECK(ker_dim(fx("A2"), {1, 1}) == 2);
  CHECK(ker_dim(fx("A4-fold"), {1, 0, 0, 0}) == 1);
}

TEST_CASE("parity of restricted weights for quasi-minuscule classes") {
  CHECK(check_parity(fx("A1"), {1}));
  CHECK(check_parity(fx("A2"), {1, 1}));
  CHECK(check_parity(fx("A2-fold"), {1, 0}));
  CHECK(check_parity(fx("A4-fold"), {1, 0, 0, 0}));
  CHECK(check_parity(fx("C2"), {1, 0}));
  // minuscule input violates the precondition
  CHECK_THROWS_AS(check_parity(fx("A1-adj"), {1}), validation_error);
}

TEST_CASE("euler vectors") {
  const auto& f = fx("A1");
  auto ev = euler_vector(f, {1});
  REQUIRE(ev.size() == 3);
  for (const auto& [mu, k] : ev) CHECK((k == 1 || k == -1));
  CHECK(ev.count(Vec{1}) == 1);
  CHECK(ev.count(Vec{0}) == 1);
  CHECK(ev.count(Vec{-1}) == 1);

  auto triv = euler_vector(f, {0});
  REQUIRE(triv.size() == 1);
  CHECK(triv.at(Vec{0}) == 1);

  auto ev2 = euler_vector(fx("A2-fold"), {1, 0});
  REQUIRE(ev2.size() == 3);
  for (const auto& [mu, k] : ev2) CHECK((k == 1 || k == -1));
}
