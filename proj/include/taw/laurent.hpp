// Laurent polynomials in one variable v over arbitrary-precision integers,
// stored as a dense coefficient block starting at the lowest exponent. The
// block never has zero leading or trailing entries.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace taw {

using BigInt = boost::multiprecision::cpp_int;

class LaurentInt {
 public:
  LaurentInt() = default;
  explicit LaurentInt(BigInt constant) {
    if (constant != 0) {
      off_ = 0;
      c_.push_back(std::move(constant));
    }
  }
  static LaurentInt monomial(int exponent, BigInt coeff = 1);

  bool is_zero() const { return c_.empty(); }
  bool operator==(const LaurentInt& o) const { return off_ == o.off_ && c_ == o.c_; }
  bool operator!=(const LaurentInt& o) const { return !(*this == o); }

  BigInt coeff(int exponent) const;

  LaurentInt& operator+=(const LaurentInt& o);
  LaurentInt& operator-=(const LaurentInt& o);
  LaurentInt operator+(const LaurentInt& o) const;
  LaurentInt operator-(const LaurentInt& o) const;
  LaurentInt operator*(const LaurentInt& o) const;
  LaurentInt operator-() const;

  // v -> v^{-1}
  LaurentInt bar() const;
  BigInt eval_at_one() const;
  // lowest/highest exponents; only valid on nonzero polynomials
  int min_exp() const { return off_; }
  int max_exp() const { return off_ + static_cast<int>(c_.size()) - 1; }
  // true if every term has exponent >= 1 (the positivity required of
  // Kazhdan-Lusztig correction terms)
  bool in_v_times_poly() const { return c_.empty() || off_ >= 1; }

  std::string str() const;
  static LaurentInt parse(const std::string& text);  // inverse of str()

  void add_term(int exponent, const BigInt& coeff);
  // this += sign * v^shift * o, without temporaries
  void axpy(const LaurentInt& o, int shift, int sign);

 private:
  void trim();
  int off_ = 0;             // exponent of c_[0]
  std::vector<BigInt> c_;   // dense coefficients
};

inline LaurentInt laurent_v(int e = 1) { return LaurentInt::monomial(e); }
inline LaurentInt laurent_one() { return LaurentInt(BigInt(1)); }

}  // namespace taw
