#include "taw/hecke.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace taw {

struct HeckeCaches {
  std::mutex mu;
  std::unordered_map<IWElement, HeckeElement, IWHash> kl;
  std::unordered_map<IWElement, HeckeElement, IWHash> basis_inverse;
  std::unordered_map<Vec, HeckeElement, VecHash> theta;
};

HeckeContext::HeckeContext(const WeylContext& w) : W(w), caches(std::make_unique<HeckeCaches>()) {}
HeckeContext::~HeckeContext() = default;

void HeckeElement::add(const IWElement& w, const LaurentInt& c) {
  if (c.is_zero()) return;
  auto it = terms.find(w);
  if (it == terms.end()) {
    terms.emplace(w, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

void HeckeElement::axpy_term(const IWElement& w, const LaurentInt& c, int shift, int sign) {
  if (c.is_zero()) return;
  auto it = terms.find(w);
  if (it == terms.end()) it = terms.emplace(w, LaurentInt()).first;
  it->second.axpy(c, shift, sign);
  if (it->second.is_zero()) terms.erase(it);
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  for (const auto& [w, c] : o.terms) add(w, c);
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& o) {
  for (const auto& [w, c] : o.terms) add(w, -c);
  return *this;
}

HeckeElement HeckeElement::operator*(const LaurentInt& c) const {
  HeckeElement r;
  if (c.is_zero()) return r;
  for (const auto& [w, k] : terms) r.terms.emplace(w, k * c);
  return r;
}

HeckeElement hecke_basis(const IWElement& w) {
  HeckeElement h;
  h.terms.emplace(w, laurent_one());
  return h;
}

HeckeElement hecke_one(const WeylContext& W) { return hecke_basis(iw_identity(W)); }

namespace {

const LaurentInt& v_minus_vinv() {
  // v^{-1} - v, the coefficient in H_x H_s = H_{xs} + (v^{-1}-v) H_x
  static const LaurentInt k = LaurentInt::monomial(-1) - LaurentInt::monomial(1);
  return k;
}

const LaurentInt& vinv_minus_v_bar() {
  // v - v^{-1}, the coefficient in H_s^{-1} = H_s + (v-v^{-1}) H_e
  static const LaurentInt k = LaurentInt::monomial(1) - LaurentInt::monomial(-1);
  return k;
}

HeckeElement mult_simple(const HeckeContext& H, const HeckeElement& a, int simple_index) {
  const WeylContext& W = H.W;
  HeckeElement r;
  for (const auto& [x, c] : a.terms) {
    IWElement xs = multiply(W, x, W.simple[simple_index]);
    if (length(W, xs) > length(W, x)) {
      r.add(xs, c);
    } else {
      r.add(xs, c);
      r.axpy_term(x, c, -1, +1);  // (v^{-1} - v) c
      r.axpy_term(x, c, +1, -1);
    }
  }
  return r;
}

HeckeElement mult_omega(const HeckeContext& H, const HeckeElement& a, int omega_index) {
  if (omega_index == 0) return a;
  const WeylContext& W = H.W;
  HeckeElement r;
  for (const auto& [x, c] : a.terms) r.terms.emplace(multiply(W, x, W.omega[omega_index]), c);
  return r;
}

}  // namespace

HeckeElement mult_simple_right(const HeckeContext& H, const HeckeElement& a, int simple_index) {
  return mult_simple(H, a, simple_index);
}

HeckeElement mult_simple_left(const HeckeContext& H, int simple_index, const HeckeElement& a) {
  const WeylContext& W = H.W;
  HeckeElement r;
  for (const auto& [x, c] : a.terms) {
    IWElement sx = multiply(W, W.simple[simple_index], x);
    if (length(W, sx) > length(W, x)) {
      r.add(sx, c);
    } else {
      r.add(sx, c);
      r.axpy_term(x, c, -1, +1);
      r.axpy_term(x, c, +1, -1);
    }
  }
  return r;
}

HeckeElement mult_omega_right(const HeckeContext& H, const HeckeElement& a, int omega_index) {
  return mult_omega(H, a, omega_index);
}

HeckeElement mult_omega_left(const HeckeContext& H, int omega_index, const HeckeElement& a) {
  if (omega_index == 0) return a;
  const WeylContext& W = H.W;
  HeckeElement r;
  for (const auto& [x, c] : a.terms) r.terms.emplace(multiply(W, W.omega[omega_index], x), c);
  return r;
}

HeckeElement mult(const HeckeContext& H, const HeckeElement& a, const HeckeElement& b) {
  // peel common right descents off whole blocks of b, so partial products
  // a . H_prefix are shared across the support instead of recomputed per term
  const WeylContext& W = H.W;
  if (b.terms.empty() || a.terms.empty()) return {};
  Int max_len = 0;
  const IWElement* longest = nullptr;
  for (const auto& [y, c] : b.terms) {
    Int l = length(W, y);
    if (longest == nullptr || l > max_len) {
      max_len = l;
      longest = &y;
    }
  }
  if (max_len == 0) {
    // everything left is a length-zero element
    HeckeElement out;
    for (const auto& [y, c] : b.terms) {
      int om = omega_class(W, y.lambda);
      HeckeElement part = mult_omega(H, a, om);
      for (const auto& [w, k] : part.terms) out.add(w, k * c);
    }
    return out;
  }
  int s = -1;
  for (int i = 0; i < W.num_simple(); ++i) {
    if (length(W, multiply(W, *longest, W.simple[i])) < max_len) {
      s = i;
      break;
    }
  }
  if (s < 0) throw validation_error("positive-length element with no right descent");
  HeckeElement stripped, rest;
  for (const auto& [y, c] : b.terms) {
    IWElement ys = multiply(W, y, W.simple[s]);
    if (length(W, ys) < length(W, y))
      stripped.terms.emplace(ys, c);
    else
      rest.terms.emplace(y, c);
  }
  HeckeElement out = mult_simple(H, mult(H, a, stripped), s);
  if (!rest.terms.empty()) out += mult(H, a, rest);
  return out;
}

HeckeElement invert_basis(const HeckeContext& H, const IWElement& w) {
  {
    std::lock_guard<std::mutex> lk(H.caches->mu);
    auto it = H.caches->basis_inverse.find(w);
    if (it != H.caches->basis_inverse.end()) return it->second;
  }
  const WeylContext& W = H.W;
  ReducedWord rw = reduced_word(W, w);
  // (H_{s_1} ... H_{s_k} H_om)^{-1} = H_{om^{-1}} H_{s_k}^{-1} ... H_{s_1}^{-1}
  int om_inv_class = omega_class(W, invert(W, W.omega[rw.omega]).lambda);
  HeckeElement cur = hecke_basis(W.omega[om_inv_class]);
  for (auto it = rw.letters.rbegin(); it != rw.letters.rend(); ++it) {
    // H_s^{-1} = H_s + (v - v^{-1}) H_e
    HeckeElement next = mult_simple(H, cur, *it);
    next += cur * vinv_minus_v_bar();
    cur = std::move(next);
  }
  {
    std::lock_guard<std::mutex> lk(H.caches->mu);
    H.caches->basis_inverse.emplace(w, cur);
  }
  return cur;
}

HeckeElement bar(const HeckeContext& H, const HeckeElement& a) {
  const WeylContext& W = H.W;
  HeckeElement out;
  for (const auto& [w, c] : a.terms) {
    // bar(H_w) = bar(H_{s_1}) ... bar(H_{s_k}) H_om with bar(H_s) = H_s^{-1}
    ReducedWord rw = reduced_word(W, w);
    HeckeElement cur = hecke_one(W);
    for (int letter : rw.letters) {
      HeckeElement next = mult_simple(H, cur, letter);
      next += cur * vinv_minus_v_bar();
      cur = std::move(next);
    }
    cur = mult_omega(H, cur, rw.omega);
    for (const auto& [x, k] : cur.terms) out.add(x, k * c.bar());
  }
  return out;
}

HeckeElement kl_basis(const HeckeContext& H, const IWElement& w) {
  {
    std::lock_guard<std::mutex> lk(H.caches->mu);
    auto it = H.caches->kl.find(w);
    if (it != H.caches->kl.end()) return it->second;
  }
  const WeylContext& W = H.W;
  HeckeElement result;
  Int lw = length(W, w);
  if (lw == 0) {
    result = hecke_basis(w);
  } else {
    int om = omega_class(W, w.lambda);
    if (om != 0) {
      // w = u om with u in W_aff: the twist by a length-zero element keeps
      // self-duality and the triangularity
      IWElement u = multiply(W, w, invert(W, W.omega[om]));
      result = mult_omega(H, kl_basis(H, u), om);
    } else {
      int s = -1;
      IWElement sw;
      for (int i = 0; i < W.num_simple(); ++i) {
        sw = multiply(W, W.simple[i], w);
        if (length(W, sw) < lw) {
          s = i;
          break;
        }
      }
      if (s < 0) throw validation_error("no left descent in kl_basis");
      // C = (H_s + v) * kl(sw), then strip constant coefficients against
      // lower kl elements, longest first
      HeckeElement hs_plus_v = hecke_basis(W.simple[s]);
      hs_plus_v.add(iw_identity(W), LaurentInt::monomial(1));
      HeckeElement c = mult(H, hs_plus_v, kl_basis(H, sw));
      std::vector<std::pair<Int, IWElement>> order;
      for (const auto& [z, k] : c.terms)
        if (!(z == w)) order.emplace_back(length(W, z), z);
      std::sort(order.begin(), order.end(),
                [](const auto& a, const auto& b) { return b < a; });
      for (const auto& [lz, z] : order) {
        auto it = c.terms.find(z);
        if (it == c.terms.end()) continue;
        BigInt m0 = it->second.coeff(0);
        if (m0 != 0) c -= kl_basis(H, z) * LaurentInt(m0);
      }
      if (c.terms.find(w) == c.terms.end() || !(c.terms.at(w) == laurent_one()))
        throw validation_error("kl induction lost the leading term");
      for (const auto& [z, k] : c.terms)
        if (!(z == w) && !k.in_v_times_poly())
          throw validation_error("kl correction left a non-positive coefficient");
      result = std::move(c);
    }
  }
  std::lock_guard<std::mutex> lk(H.caches->mu);
  auto [it, fresh] = H.caches->kl.emplace(w, std::move(result));
  return it->second;
}

LaurentInt m_morphism(const HeckeContext& H, const HeckeElement& a) {
  LaurentInt out;
  for (const auto& [w, c] : a.terms) {
    Int l = length(H.W, w);
    LaurentInt t = LaurentInt::monomial(static_cast<int>(l), (l % 2 == 0) ? 1 : -1);
    out += t * c;
  }
  return out;
}

std::map<IWElement, BigInt> specialize_v1(const HeckeElement& a) {
  std::map<IWElement, BigInt> out;
  for (const auto& [w, c] : a.terms) {
    BigInt k = c.eval_at_one();
    if (k != 0) out.emplace(w, std::move(k));
  }
  return out;
}

HeckeElement bernstein(const HeckeContext& H, const Vec& mu_in, bool crosscheck) {
  const WeylContext& W = H.W;
  const EchelonnageData& e = W.ech;
  Vec mu = e.normalized(mu_in);
  {
    std::lock_guard<std::mutex> lk(H.caches->mu);
    auto it = H.caches->theta.find(mu);
    if (it != H.caches->theta.end() && !crosscheck) return it->second;
  }

  // admissible la: dominant, la - mu dominant, mu below la in dominance order
  auto admissible = [&](const Vec& la) {
    return e.is_dominant(la) && e.is_dominant(sub(la, mu)) && e.dominance_leq(mu, la);
  };
  Int maxc = 1;
  for (int i = 0; i < e.free_rank; ++i) maxc = std::max(maxc, std::abs(mu[i]));
  std::vector<Vec> found;
  for (Int bound = 0; bound <= 4 * maxc + 4 && found.size() < (crosscheck ? 2u : 1u); ++bound) {
    std::vector<Vec> shell;
    Vec v(e.coord_len(), 0);
    std::function<void(int)> rec = [&](int pos) {
      if (pos == e.free_rank) {
        Int mx = 0;
        for (int i = 0; i < e.free_rank; ++i) mx = std::max(mx, std::abs(v[i]));
        if (mx == bound) shell.push_back(v);
        return;
      }
      for (Int c = -bound; c <= bound; ++c) {
        v[pos] = c;
        rec(pos + 1);
      }
    };
    if (e.free_rank == 0) {
      if (bound == 0) shell.push_back(v);
    } else {
      rec(0);
    }
    std::sort(shell.begin(), shell.end());
    for (const auto& la : shell) {
      if (admissible(la)) {
        found.push_back(la);
        if (found.size() >= (crosscheck ? 2u : 1u)) break;
      }
    }
  }
  if (found.empty())
    throw validation_error("no admissible dominant weight for the translation element");

  auto build = [&](const Vec& la) {
    IWElement tla = iw_translation(W, la);
    IWElement trest = iw_translation(W, sub(la, mu));
    HeckeElement th = mult(H, hecke_basis(tla), invert_basis(H, trest));
    if (e.pair_two_rho(mu) % 2 != 0) {
      for (auto& [w, c] : th.terms) c = -c;
    }
    return th;
  };
  HeckeElement theta = build(found[0]);
  if (crosscheck && found.size() > 1) {
    HeckeElement other = build(found[1]);
    if (!(theta == other))
      throw validation_error("translation element depends on the choice of dominant weight");
  }
  std::lock_guard<std::mutex> lk(H.caches->mu);
  auto [it, fresh] = H.caches->theta.emplace(mu, std::move(theta));
  return it->second;
}

void AntisphericalElement::add(const Vec& la, const LaurentInt& c) {
  if (c.is_zero()) return;
  auto it = terms.find(la);
  if (it == terms.end()) {
    terms.emplace(la, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

AntisphericalElement asph_unit(const WeylContext& W) {
  AntisphericalElement n;
  n.terms.emplace(Vec(W.ech.coord_len(), 0), laurent_one());
  return n;
}

namespace {

AntisphericalElement asph_act_simple(const HeckeContext& H, const AntisphericalElement& n,
                                     int simple_index) {
  const WeylContext& W = H.W;
  AntisphericalElement out;
  for (const auto& [la, c] : n.terms) {
    IWElement x = min_rep_of_class(W, la);
    IWElement y = multiply(W, x, W.simple[simple_index]);
    IWElement ymin = min_coset_rep(W, y);
    if (ymin == y) {
      Vec idx = coset_index(W, y);
      if (length(W, y) > length(W, x)) {
        out.add(idx, c);
      } else {
        out.add(idx, c);
        out.add(la, c * v_minus_vinv());
      }
    } else {
      if (length(W, y) <= length(W, x))
        throw validation_error("antispherical action: unexpected descent out of the minimal coset");
      out.add(la, c * (-LaurentInt::monomial(1)));
    }
  }
  return out;
}

AntisphericalElement asph_act_omega(const HeckeContext& H, const AntisphericalElement& n,
                                    int omega_index) {
  if (omega_index == 0) return n;
  const WeylContext& W = H.W;
  AntisphericalElement out;
  for (const auto& [la, c] : n.terms) {
    IWElement x = min_rep_of_class(W, la);
    out.add(coset_index(W, multiply(W, x, W.omega[omega_index])), c);
  }
  return out;
}

}  // namespace

AntisphericalElement asph_act(const HeckeContext& H, const AntisphericalElement& n,
                              const HeckeElement& a) {
  // peel common right descents off blocks of a, as in mult, so the walk is
  // shared across the support
  const WeylContext& W = H.W;
  AntisphericalElement out;
  if (a.terms.empty() || n.terms.empty()) return out;
  Int max_len = 0;
  const IWElement* longest = nullptr;
  for (const auto& [y, c] : a.terms) {
    Int l = length(W, y);
    if (longest == nullptr || l > max_len) {
      max_len = l;
      longest = &y;
    }
  }
  if (max_len == 0) {
    for (const auto& [y, c] : a.terms) {
      AntisphericalElement part = asph_act_omega(H, n, omega_class(W, y.lambda));
      for (const auto& [la, k] : part.terms) out.add(la, k * c);
    }
    return out;
  }
  int s = -1;
  for (int i = 0; i < W.num_simple(); ++i) {
    if (length(W, multiply(W, *longest, W.simple[i])) < max_len) {
      s = i;
      break;
    }
  }
  if (s < 0) throw validation_error("positive-length element with no right descent");
  HeckeElement stripped, rest;
  for (const auto& [y, c] : a.terms) {
    IWElement ys = multiply(W, y, W.simple[s]);
    if (length(W, ys) < length(W, y))
      stripped.terms.emplace(ys, c);
    else
      rest.terms.emplace(y, c);
  }
  out = asph_act_simple(H, asph_act(H, n, stripped), s);
  if (!rest.terms.empty()) {
    AntisphericalElement other = asph_act(H, n, rest);
    for (const auto& [la, k] : other.terms) out.add(la, k);
  }
  return out;
}

}  // namespace taw
