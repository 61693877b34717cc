#include "taw/intlin.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace taw {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::transpose() const {
  Mat t(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Mat mul(const Mat& x, const Mat& y) {
  if (x.cols != y.rows) throw validation_error("matrix shape mismatch");
  Mat z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      Int xa = x(i, k);
      if (xa == 0) continue;
      for (int j = 0; j < y.cols; ++j) z(i, j) += xa * y(k, j);
    }
  return z;
}

Vec mul(const Mat& x, const Vec& v) {
  if (x.cols != static_cast<int>(v.size())) throw validation_error("matrix/vector shape mismatch");
  Vec r(x.rows, 0);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) r[i] += x(i, j) * v[j];
  return r;
}

Vec mul_row(const Vec& r, const Mat& x) {
  if (x.rows != static_cast<int>(r.size())) throw validation_error("row/matrix shape mismatch");
  Vec out(x.cols, 0);
  for (int i = 0; i < x.rows; ++i) {
    if (r[i] == 0) continue;
    for (int j = 0; j < x.cols; ++j) out[j] += r[i] * x(i, j);
  }
  return out;
}

Int dot(const Vec& x, const Vec& y) {
  Int s = 0;
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

Vec add(const Vec& x, const Vec& y) {
  Vec r(x);
  for (size_t i = 0; i < r.size(); ++i) r[i] += y[i];
  return r;
}

Vec sub(const Vec& x, const Vec& y) {
  Vec r(x);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= y[i];
  return r;
}

Vec neg(const Vec& x) {
  Vec r(x);
  for (auto& e : r) e = -e;
  return r;
}

Vec scale(Int k, const Vec& x) {
  Vec r(x);
  for (auto& e : r) e *= k;
  return r;
}

bool is_zero(const Vec& x) {
  for (Int e : x)
    if (e != 0) return false;
  return true;
}

Int det(const Mat& m) {
  if (m.rows != m.cols) throw validation_error("det of non-square matrix");
  int n = m.rows;
  if (n == 0) return 1;
  Mat w = m;
  Int prev = 1, sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (w(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (w(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(w(k, j), w(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int num = w(i, j) * w(k, k) - w(i, k) * w(k, j);
        w(i, j) = num / prev;  // Bareiss: division is exact
      }
    prev = w(k, k);
  }
  return sign * w(n - 1, n - 1);
}

Mat unimodular_inverse(const Mat& m) {
  Int d = det(m);
  if (d != 1 && d != -1) throw validation_error("matrix is not unimodular");
  int n = m.rows;
  // adjugate via cofactors; n is tiny so the n^3-per-entry cost is fine
  Mat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mat minor(n - 1, n - 1);
      for (int r = 0, rr = 0; r < n; ++r) {
        if (r == j) continue;
        for (int c = 0, cc = 0; c < n; ++c) {
          if (c == i) continue;
          minor(rr, cc) = m(r, c);
          ++cc;
        }
        ++rr;
      }
      Int cof = det(minor);
      if ((i + j) & 1) cof = -cof;
      inv(i, j) = cof * d;  // d = 1/d for d = +-1
    }
  return inv;
}

namespace {

void row_op(Mat& m, Mat& u, int i, int j, Int q) {
  // row_i -= q * row_j, mirrored into u
  for (int c = 0; c < m.cols; ++c) m(i, c) -= q * m(j, c);
  for (int c = 0; c < u.cols; ++c) u(i, c) -= q * u(j, c);
}

void col_op(Mat& m, Mat& v, int i, int j, Int q) {
  // col_i -= q * col_j, mirrored into v
  for (int r = 0; r < m.rows; ++r) m(r, i) -= q * m(r, j);
  for (int r = 0; r < v.rows; ++r) v(r, i) -= q * v(r, j);
}

}  // namespace

Smith smith_normal_form(const Mat& m) {
  Smith s;
  s.d = m;
  s.u = Mat::identity(m.rows);
  s.v = Mat::identity(m.cols);
  Mat& d = s.d;
  int t = std::min(m.rows, m.cols);
  for (int k = 0; k < t; ++k) {
    for (;;) {
      // move a nonzero pivot of least magnitude to (k, k)
      int pi = -1, pj = -1;
      Int best = 0;
      for (int i = k; i < d.rows; ++i)
        for (int j = k; j < d.cols; ++j)
          if (d(i, j) != 0 && (best == 0 || std::abs(d(i, j)) < best)) {
            best = std::abs(d(i, j));
            pi = i;
            pj = j;
          }
      if (pi < 0) goto done;  // all remaining entries zero
      if (pi != k) {
        for (int c = 0; c < d.cols; ++c) std::swap(d(pi, c), d(k, c));
        for (int c = 0; c < s.u.cols; ++c) std::swap(s.u(pi, c), s.u(k, c));
      }
      if (pj != k) {
        for (int r = 0; r < d.rows; ++r) std::swap(d(r, pj), d(r, k));
        for (int r = 0; r < s.v.rows; ++r) std::swap(s.v(r, pj), s.v(r, k));
      }
      bool dirty = false;
      for (int i = k + 1; i < d.rows; ++i)
        if (d(i, k) != 0) {
          row_op(d, s.u, i, k, d(i, k) / d(k, k));
          if (d(i, k) != 0) dirty = true;
        }
      for (int j = k + 1; j < d.cols; ++j)
        if (d(k, j) != 0) {
          col_op(d, s.v, j, k, d(k, j) / d(k, k));
          if (d(k, j) != 0) dirty = true;
        }
      if (dirty) continue;
      // ensure the pivot divides every remaining entry
      bool fixed = true;
      for (int i = k + 1; i < d.rows && fixed; ++i)
        for (int j = k + 1; j < d.cols && fixed; ++j)
          if (d(i, j) % d(k, k) != 0) {
            row_op(d, s.u, k, i, -1);  // row_k += row_i
            fixed = false;
          }
      if (fixed) break;
    }
    if (d(k, k) < 0) {
      for (int r = 0; r < d.rows; ++r) d(r, k) = -d(r, k);
      // negating a column of d corresponds to negating a column of v
      for (int r = 0; r < s.v.rows; ++r) s.v(r, k) = -s.v(r, k);
    }
  }
done:
  // sanity: u m v == d (cheap at these sizes, catches any slip above)
  if (!(mul(mul(s.u, m), s.v) == s.d)) throw validation_error("smith normal form internal check failed");
  return s;
}

bool solve(const Mat& m, const Vec& b, Vec& x_out) {
  // m x = b  <=>  d y = u b with x = v y
  Smith s = smith_normal_form(m);
  Vec ub = mul(s.u, b);
  int t = std::min(m.rows, m.cols);
  Vec y(m.cols, 0);
  for (int i = 0; i < m.rows; ++i) {
    Int di = (i < t) ? s.d(i, i) : 0;
    if (di == 0) {
      if (ub[i] != 0) return false;
    } else {
      if (ub[i] % di != 0) return false;
      if (i < m.cols) y[i] = ub[i] / di;
    }
  }
  x_out = mul(s.v, y);
  return true;
}

}  // namespace taw
