// Small dense integer linear algebra: matrices over Z, Smith normal form,
// exact solving of A x = b over the integers. Everything here is sized for
// lattices of rank <= ~10 with small entries; no attempt at asymptotics.
#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace taw {

using Int = long long;
using Vec = std::vector<Int>;

struct Mat {
  int rows = 0, cols = 0;
  std::vector<Int> a;  // row-major

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

  Int& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  Int operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static Mat identity(int n);
  Mat transpose() const;
  bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

Mat mul(const Mat& x, const Mat& y);
Vec mul(const Mat& x, const Vec& v);
Vec mul_row(const Vec& r, const Mat& x);  // r^T x
Int dot(const Vec& x, const Vec& y);
Vec add(const Vec& x, const Vec& y);
Vec sub(const Vec& x, const Vec& y);
Vec neg(const Vec& x);
Vec scale(Int k, const Vec& x);
bool is_zero(const Vec& x);

// Determinant by fraction-free Gaussian elimination (Bareiss).
Int det(const Mat& m);

// Inverse of a unimodular matrix; throws if det is not +-1.
Mat unimodular_inverse(const Mat& m);

// Smith normal form: u * m * v == d with u, v unimodular and d diagonal,
// each diagonal entry nonnegative and dividing the next.
struct Smith {
  Mat u, d, v;
};
Smith smith_normal_form(const Mat& m);

// Exact integer solution of m x = b, if one exists.
bool solve(const Mat& m, const Vec& b, Vec& x_out);

// Hash for integer vectors, usable as std::unordered_* key.
struct VecHash {
  size_t operator()(const Vec& v) const {
    size_t h = 1469598103934665603ull;
    for (Int x : v) {
      h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

struct validation_error : std::runtime_error {
  explicit validation_error(const std::string& w) : std::runtime_error(w) {}
};

}  // namespace taw
