#include "taw/textio.hpp"

#include <cctype>
#include <sstream>

namespace taw {

std::string parse_error::pretty() const {
  std::string out = input + "\n";
  out += std::string(position, ' ') + "^ " + what();
  return out;
}

namespace {

struct Scan {
  const std::string& s;
  size_t i = 0;

  void ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    ws();
    return i >= s.size();
  }
  bool peek(char c) {
    ws();
    return i < s.size() && s[i] == c;
  }
  bool eat(char c) {
    if (peek(c)) {
      ++i;
      return true;
    }
    return false;
  }
  bool eat_word(const std::string& w) {
    ws();
    if (s.compare(i, w.size(), w) == 0) {
      i += w.size();
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) { throw parse_error(what, i, s); }
  Int integer() {
    ws();
    size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    size_t digits = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == digits) {
      i = start;
      fail("expected an integer");
    }
    return std::stoll(s.substr(start, i - start));
  }
  Vec int_list(char close) {
    Vec out;
    if (eat(close)) return out;
    out.push_back(integer());
    while (eat(',')) out.push_back(integer());
    if (!eat(close)) fail(std::string("expected ',' or '") + close + "'");
    return out;
  }
};

Vec checked_coords(Scan& sc, size_t at, Vec v, int expect_len) {
  if (static_cast<int>(v.size()) != expect_len) {
    sc.i = at;
    sc.fail("expected " + std::to_string(expect_len) + " coordinates, got " +
            std::to_string(v.size()));
  }
  return v;
}

}  // namespace

Vec parse_weight(const std::string& text, int expect_len) {
  Scan sc{text};
  sc.ws();
  size_t at = sc.i;
  Vec out;
  out.push_back(sc.integer());
  while (sc.eat(',')) out.push_back(sc.integer());
  if (!sc.done()) sc.fail("trailing input after the weight");
  return checked_coords(sc, at, std::move(out), expect_len);
}

std::string format_weight(const Vec& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

namespace {

// t[...] then optional '*' and letters s<k>; or just letters; or "e"
IWElement parse_element_body(const WeylContext& W, Scan& sc) {
  IWElement cur = iw_identity(W);
  bool have_any = false;
  if (sc.eat_word("t[")) {
    size_t at = sc.i;
    Vec lam = checked_coords(sc, at, sc.int_list(']'), W.ech.coord_len());
    cur = iw_translation(W, std::move(lam));
    have_any = true;
    sc.ws();
    if (!sc.done() && !sc.eat('*')) sc.fail("expected '*' between translation and letters");
  }
  if (sc.eat_word("e")) {
    have_any = true;
  }
  while (!sc.done()) {
    sc.ws();
    size_t at = sc.i;
    if (!sc.eat('s')) sc.fail("expected a letter s<k>");
    Int k = sc.integer();
    if (k < 0 || k >= W.num_simple()) {
      sc.i = at;
      sc.fail("letter index out of range");
    }
    cur = multiply(W, cur, W.simple[static_cast<int>(k)]);
    have_any = true;
  }
  if (!have_any) sc.fail("empty element");
  return cur;
}

}  // namespace

IWElement parse_element(const WeylContext& W, const std::string& text) {
  Scan sc{text};
  return parse_element_body(W, sc);
}

std::string format_element(const WeylContext& W, const IWElement& w) {
  // canonical: translation followed by the finite word
  std::ostringstream os;
  os << "t[" << format_weight(w.lambda) << "]";
  const auto& word = W.fin.word[w.fin];
  for (size_t i = 0; i < word.size(); ++i)
    os << (i == 0 ? " * " : " ") << "s" << (W.num_affine + word[i]);
  return os.str();
}

HeckeElement parse_hecke(const HeckeContext& H, const std::string& text) {
  const WeylContext& W = H.W;
  Scan sc{text};
  HeckeElement out;
  bool first = true;
  while (!sc.done()) {
    bool negate = false;
    if (sc.eat('-'))
      negate = true;
    else if (!sc.eat('+') && !first)
      sc.fail("expected '+' or '-' between terms");
    first = false;
    sc.ws();
    if (sc.eat_word("theta[")) {
      size_t at = sc.i;
      Vec mu = checked_coords(sc, at, sc.int_list(']'), W.ech.coord_len());
      HeckeElement th = bernstein(H, mu);
      if (negate) th = th * LaurentInt(BigInt(-1));
      out += th;
      continue;
    }
    LaurentInt coeff = laurent_one();
    if (sc.eat('(')) {
      size_t start = sc.i;
      int depth = 1;
      while (sc.i < sc.s.size() && depth > 0) {
        if (sc.s[sc.i] == '(') ++depth;
        if (sc.s[sc.i] == ')') --depth;
        ++sc.i;
      }
      if (depth != 0) sc.fail("unbalanced parentheses in coefficient");
      std::string inner = sc.s.substr(start, sc.i - 1 - start);
      try {
        coeff = LaurentInt::parse(inner);
      } catch (const std::exception& e) {
        sc.i = start;
        sc.fail(e.what());
      }
      if (!sc.eat('*')) sc.fail("expected '*' after coefficient");
    }
    sc.ws();
    if (sc.eat_word("H[")) {
      // letters then optional "; w<k>" omega id, or "e"
      IWElement w = iw_identity(W);
      sc.ws();
      if (sc.eat_word("e")) {
        // identity marker
      } else {
        while (!sc.peek(';') && !sc.peek(']')) {
          Int k = sc.integer();
          if (k < 0 || k >= W.num_simple()) sc.fail("letter index out of range");
          w = multiply(W, w, W.simple[static_cast<int>(k)]);
          sc.ws();
        }
      }
      if (sc.eat(';')) {
        sc.ws();
        if (!sc.eat('w')) sc.fail("expected omega id w<k>");
        Int k = sc.integer();
        if (k < 0 || k >= static_cast<Int>(W.omega.size())) sc.fail("omega id out of range");
        w = multiply(W, w, W.omega[static_cast<int>(k)]);
      }
      if (!sc.eat(']')) sc.fail("expected ']'");
      if (negate) coeff = -coeff;
      out.add(w, coeff);
      continue;
    }
    // bare group element: treat as a basis element H_w
    IWElement w = iw_identity(W);
    if (sc.eat_word("t[")) {
      size_t at = sc.i;
      Vec lam = checked_coords(sc, at, sc.int_list(']'), W.ech.coord_len());
      w = iw_translation(W, std::move(lam));
      sc.ws();
      sc.eat('*');
    }
    sc.ws();
    bool any = !is_zero(w.lambda);
    while (sc.peek('s')) {
      sc.eat('s');
      Int k = sc.integer();
      if (k < 0 || k >= W.num_simple()) sc.fail("letter index out of range");
      w = multiply(W, w, W.simple[static_cast<int>(k)]);
      any = true;
      sc.ws();
    }
    if (!any && sc.eat_word("e")) any = true;
    if (!any) sc.fail("expected a term");
    if (negate) coeff = -coeff;
    out.add(w, coeff);
  }
  return out;
}

std::string format_hecke(const WeylContext& W, const HeckeElement& h) {
  if (h.terms.empty()) return "0";
  // sort support by (length, word) for a stable human-readable order
  std::vector<std::pair<IWElement, const LaurentInt*>> terms;
  for (const auto& [w, c] : h.terms) terms.emplace_back(w, &c);
  std::stable_sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
    Int la = length(W, a.first), lb = length(W, b.first);
    if (la != lb) return la < lb;
    return a.first < b.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms) {
    if (!first) os << " + ";
    first = false;
    ReducedWord rw = reduced_word(W, w);
    os << "(" << c->str() << ")*H[";
    if (rw.letters.empty() && rw.omega == 0) {
      os << "e";
    } else {
      for (size_t i = 0; i < rw.letters.size(); ++i) {
        if (i) os << " ";
        os << rw.letters[i];
      }
      if (rw.omega != 0) {
        if (!rw.letters.empty()) os << " ";
        os << "; w" << rw.omega;
      }
    }
    os << "]";
  }
  return os.str();
}

std::string format_character(const Character& c) {
  std::ostringstream os;
  for (const auto& [w, m] : c) os << format_weight(w) << " : " << m << "\n";
  return os.str();
}

std::string format_asph(const AntisphericalElement& n) {
  if (n.terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [la, c] : n.terms) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*N[" << format_weight(la) << "]";
  }
  return os.str();
}

}  // namespace taw
