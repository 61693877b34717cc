#include <doctest.h>

#include "taw/intlin.hpp"

using namespace taw;

namespace {

// brute-force lattice membership: is b an integer combination of the columns
// of m with coefficients in [-box, box]?
bool in_image_brute(const Mat& m, const Vec& b, Int box) {
  std::vector<Int> coeff(m.cols, -box);
  for (;;) {
    Vec acc(m.rows, 0);
    for (int j = 0; j < m.cols; ++j)
      for (int i = 0; i < m.rows; ++i) acc[i] += m(i, j) * coeff[j];
    if (acc == b) return true;
    int p = 0;
    while (p < m.cols && coeff[p] == box) coeff[p++] = -box;
    if (p == m.cols) return false;
    ++coeff[p];
  }
}

}  // namespace

TEST_CASE("smith normal form on the swap-difference matrix") {
  // 1 - swap on Z^2, the coinvariant computation for the rank-2 flip
  Mat m(2, 2);
  m(0, 0) = 1;
  m(0, 1) = -1;
  m(1, 0) = -1;
  m(1, 1) = 1;
  Smith s = smith_normal_form(m);
  CHECK(s.d(0, 0) == 1);
  CHECK(s.d(1, 1) == 0);
  CHECK(mul(mul(s.u, m), s.v) == s.d);
}

TEST_CASE("smith normal form diagonal divisibility") {
  Mat m(3, 3);
  Int vals[3][3] = {{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = vals[i][j];
  Smith s = smith_normal_form(m);
  Int a = s.d(0, 0), b = s.d(1, 1), c = s.d(2, 2);
  CHECK(a > 0);
  CHECK(b % a == 0);
  if (c != 0) CHECK(c % b == 0);
}

TEST_CASE("integer solving agrees with brute force") {
  Mat m(2, 3);
  Int vals[2][3] = {{2, 0, 3}, {0, 2, 1}};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = vals[i][j];
  for (Int x = -4; x <= 4; ++x)
    for (Int y = -4; y <= 4; ++y) {
      Vec b{x, y};
      Vec sol;
      bool got = solve(m, b, sol);
      bool want = in_image_brute(m, b, 6);
      CHECK(got == want);
      if (got) CHECK(mul(m, sol) == b);
    }
}

TEST_CASE("unimodular inverse and determinant") {
  Mat m(2, 2);
  m(0, 0) = 2;
  m(0, 1) = 1;
  m(1, 0) = 1;
  m(1, 1) = 1;
  CHECK(det(m) == 1);
  Mat inv = unimodular_inverse(m);
  CHECK(mul(m, inv) == Mat::identity(2));
  Mat bad(2, 2);
  bad(0, 0) = 2;
  bad(1, 1) = 2;
  CHECK_THROWS_AS(unimodular_inverse(bad), validation_error);
}
