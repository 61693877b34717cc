#include <doctest.h>

#include <random>

#include "taw/laurent.hpp"

using namespace taw;

TEST_CASE("laurent ring arithmetic") {
  LaurentInt v = laurent_v();
  LaurentInt vinv = laurent_v(-1);
  LaurentInt one = laurent_one();
  CHECK(v * vinv == one);
  LaurentInt q = (v + one) * (v - one);
  CHECK(q == laurent_v(2) - one);
  CHECK((q - q).is_zero());
  CHECK(q.coeff(2) == 1);
  CHECK(q.coeff(1) == 0);
  CHECK(q.coeff(0) == -1);
}

TEST_CASE("bar and evaluation") {
  LaurentInt p = laurent_v(3) - laurent_v(-1) + LaurentInt(BigInt(4));
  CHECK(p.bar() == laurent_v(-3) - laurent_v(1) + LaurentInt(BigInt(4)));
  CHECK(p.bar().bar() == p);
  CHECK(p.eval_at_one() == 4);
}

TEST_CASE("string round trip") {
  CHECK(LaurentInt().str() == "0");
  CHECK(LaurentInt::parse("0").is_zero());
  CHECK(laurent_v(-2).str() == "v^(-2)");
  std::mt19937_64 gen(7);
  for (int round = 0; round < 200; ++round) {
    LaurentInt p;
    int terms = static_cast<int>(gen() % 6);
    for (int t = 0; t < terms; ++t) {
      int e = static_cast<int>(gen() % 13) - 6;
      long long c = static_cast<long long>(gen() % 9) - 4;
      p.add_term(e, BigInt(c));
    }
    CHECK(LaurentInt::parse(p.str()) == p);
  }
}

TEST_CASE("large coefficients survive") {
  LaurentInt p = laurent_one();
  LaurentInt base = laurent_v(1) + laurent_v(-1);
  for (int i = 0; i < 128; ++i) p = p * base;
  // middle coefficient of (v + v^-1)^128 is binomial(128, 64), beyond 2^63
  CHECK(p.coeff(0) > BigInt("9223372036854775807"));
  CHECK(LaurentInt::parse(p.str()) == p);
}
