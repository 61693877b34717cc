#include "taw/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace taw {

void LaurentInt::trim() {
  size_t lead = 0;
  while (lead < c_.size() && c_[lead] == 0) ++lead;
  if (lead == c_.size()) {
    c_.clear();
    off_ = 0;
    return;
  }
  size_t tail = c_.size();
  while (tail > lead && c_[tail - 1] == 0) --tail;
  if (lead > 0 || tail < c_.size()) {
    c_.erase(c_.begin() + tail, c_.end());
    c_.erase(c_.begin(), c_.begin() + lead);
    off_ += static_cast<int>(lead);
  }
}

LaurentInt LaurentInt::monomial(int exponent, BigInt coeff) {
  LaurentInt p;
  if (coeff != 0) {
    p.off_ = exponent;
    p.c_.push_back(std::move(coeff));
  }
  return p;
}

BigInt LaurentInt::coeff(int exponent) const {
  int i = exponent - off_;
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[i];
}

void LaurentInt::add_term(int exponent, const BigInt& coeff) {
  if (coeff == 0) return;
  if (c_.empty()) {
    off_ = exponent;
    c_.push_back(coeff);
    return;
  }
  int lo = std::min(off_, exponent);
  int hi = std::max(off_ + static_cast<int>(c_.size()) - 1, exponent);
  if (lo < off_) {
    c_.insert(c_.begin(), static_cast<size_t>(off_ - lo), BigInt(0));
    off_ = lo;
  }
  if (hi >= off_ + static_cast<int>(c_.size()))
    c_.resize(static_cast<size_t>(hi - off_ + 1));
  c_[exponent - off_] += coeff;
  trim();
}

LaurentInt& LaurentInt::operator+=(const LaurentInt& o) {
  if (o.c_.empty()) return *this;
  if (c_.empty()) {
    *this = o;
    return *this;
  }
  int lo = std::min(off_, o.off_);
  int hi = std::max(max_exp(), o.max_exp());
  if (lo < off_) {
    c_.insert(c_.begin(), static_cast<size_t>(off_ - lo), BigInt(0));
    off_ = lo;
  }
  if (hi > max_exp()) c_.resize(static_cast<size_t>(hi - off_ + 1));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[o.off_ - off_ + static_cast<int>(i)] += o.c_[i];
  trim();
  return *this;
}

LaurentInt& LaurentInt::operator-=(const LaurentInt& o) {
  if (o.c_.empty()) return *this;
  if (c_.empty()) {
    *this = -o;
    return *this;
  }
  int lo = std::min(off_, o.off_);
  int hi = std::max(max_exp(), o.max_exp());
  if (lo < off_) {
    c_.insert(c_.begin(), static_cast<size_t>(off_ - lo), BigInt(0));
    off_ = lo;
  }
  if (hi > max_exp()) c_.resize(static_cast<size_t>(hi - off_ + 1));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[o.off_ - off_ + static_cast<int>(i)] -= o.c_[i];
  trim();
  return *this;
}

void LaurentInt::axpy(const LaurentInt& o, int shift, int sign) {
  if (o.c_.empty()) return;
  int olo = o.off_ + shift, ohi = o.max_exp() + shift;
  if (c_.empty()) {
    off_ = olo;
    c_ = o.c_;
    if (sign < 0)
      for (auto& k : c_) k = -k;
    return;
  }
  int lo = std::min(off_, olo);
  int hi = std::max(max_exp(), ohi);
  if (lo < off_) {
    c_.insert(c_.begin(), static_cast<size_t>(off_ - lo), BigInt(0));
    off_ = lo;
  }
  if (hi > max_exp()) c_.resize(static_cast<size_t>(hi - off_ + 1));
  if (sign >= 0) {
    for (size_t i = 0; i < o.c_.size(); ++i) c_[olo - off_ + static_cast<int>(i)] += o.c_[i];
  } else {
    for (size_t i = 0; i < o.c_.size(); ++i) c_[olo - off_ + static_cast<int>(i)] -= o.c_[i];
  }
  trim();
}

LaurentInt LaurentInt::operator+(const LaurentInt& o) const {
  LaurentInt r = *this;
  r += o;
  return r;
}

LaurentInt LaurentInt::operator-(const LaurentInt& o) const {
  LaurentInt r = *this;
  r -= o;
  return r;
}

LaurentInt LaurentInt::operator*(const LaurentInt& o) const {
  LaurentInt r;
  if (c_.empty() || o.c_.empty()) return r;
  r.off_ = off_ + o.off_;
  r.c_.assign(c_.size() + o.c_.size() - 1, BigInt(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] == 0) continue;
      r.c_[i + j] += c_[i] * o.c_[j];
    }
  }
  r.trim();
  return r;
}

LaurentInt LaurentInt::operator-() const {
  LaurentInt r = *this;
  for (auto& k : r.c_) k = -k;
  return r;
}

LaurentInt LaurentInt::bar() const {
  LaurentInt r;
  if (c_.empty()) return r;
  r.c_.assign(c_.rbegin(), c_.rend());
  r.off_ = -max_exp();
  return r;
}

BigInt LaurentInt::eval_at_one() const {
  BigInt s = 0;
  for (const auto& k : c_) s += k;
  return s;
}

std::string LaurentInt::str() const {
  if (c_.empty()) return "0";
  std::string out;
  for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) {
    const BigInt& kref = c_[i];
    if (kref == 0) continue;
    BigInt k = kref;
    bool neg = k < 0;
    if (neg) k = -k;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    int e = off_ + i;
    if (e == 0) {
      out += k.str();
    } else {
      if (k != 1) out += k.str() + "*";
      out += "v^(" + std::to_string(e) + ")";
    }
  }
  return out;
}

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::runtime_error("laurent parse error at offset " + std::to_string(i) + ": " + what);
  }
};

BigInt parse_nat(Cursor& c) {
  c.skip_ws();
  size_t start = c.i;
  while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
  if (c.i == start) c.fail("expected digits");
  return BigInt(c.s.substr(start, c.i - start));
}

int parse_int(Cursor& c) {
  c.skip_ws();
  bool neg = c.eat('-');
  if (!neg) c.eat('+');
  BigInt n = parse_nat(c);
  if (n > 1000000000) c.fail("exponent out of range");
  long v = n.convert_to<long>();
  return static_cast<int>(neg ? -v : v);
}

}  // namespace

LaurentInt LaurentInt::parse(const std::string& text) {
  Cursor c{text};
  LaurentInt out;
  c.skip_ws();
  if (c.i >= c.s.size()) c.fail("empty input");
  bool first = true;
  while (true) {
    c.skip_ws();
    if (c.i >= c.s.size()) break;
    bool neg = false;
    if (c.eat('-')) {
      neg = true;
    } else if (c.eat('+')) {
      // explicit plus
    } else if (!first) {
      c.fail("expected + or -");
    }
    first = false;
    c.skip_ws();
    BigInt k = 1;
    bool have_coeff = false;
    if (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) {
      k = parse_nat(c);
      have_coeff = true;
    }
    int e = 0;
    c.skip_ws();
    if (have_coeff && c.eat('*')) {
      if (!c.eat('v')) c.fail("expected v after *");
      if (!c.eat('^')) c.fail("expected ^ after v");
      if (!c.eat('(')) c.fail("expected ( after ^");
      e = parse_int(c);
      if (!c.eat(')')) c.fail("expected )");
    } else if (!have_coeff) {
      if (!c.eat('v')) c.fail("expected coefficient or v");
      if (!c.eat('^')) c.fail("expected ^ after v");
      if (!c.eat('(')) c.fail("expected ( after ^");
      e = parse_int(c);
      if (!c.eat(')')) c.fail("expected )");
    }
    out.add_term(e, neg ? BigInt(-k) : k);
  }
  return out;
}

}  // namespace taw
