#include "taw/rep.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace taw {

Int character_dim(const Character& c) {
  Int s = 0;
  for (const auto& [w, m] : c) s += m;
  return s;
}

bool RootSystemView::is_dominant(const Vec& w) const {
  for (int s : simples)
    if (dot(pos_coroots[s], w) < 0) return false;
  return true;
}

Vec RootSystemView::dominant_rep(Vec w) const {
  for (;;) {
    bool moved = false;
    for (int s : simples) {
      Int n = dot(pos_coroots[s], w);
      if (n < 0) {
        w = sub(w, scale(n, pos_roots[s]));
        moved = true;
      }
    }
    if (!moved) return w;
  }
}

Int RootSystemView::height(const Vec& w) const {
  Int s = 0;
  for (const auto& c : pos_coroots) s += dot(c, w);
  return s;
}

namespace {

std::vector<Mat> enumerate_reflection_group(int dim, const std::vector<Vec>& roots,
                                            const std::vector<Vec>& coroots,
                                            const std::vector<int>& simples) {
  std::vector<Mat> gens;
  for (int s : simples) {
    Mat m = Mat::identity(dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) m(i, j) -= roots[s][i] * coroots[s][j];
    gens.push_back(m);
  }
  std::map<std::vector<Int>, int> seen;
  std::vector<Mat> all{Mat::identity(dim)};
  seen[all[0].a] = 0;
  for (size_t head = 0; head < all.size(); ++head) {
    if (all.size() > 100000) throw validation_error("reflection group enumeration exploded");
    for (const auto& g : gens) {
      Mat m = mul(all[head], g);
      if (seen.emplace(m.a, static_cast<int>(all.size())).second) all.push_back(std::move(m));
    }
  }
  return all;
}

Vec functional_from_root(const BasedRootDatum& d, const Vec& root) {
  return mul_row(root, d.pairing);
}

}  // namespace

RootSystemView dual_group_view(const BasedRootDatum& d) {
  RootSystemView v;
  v.dim = d.rank;
  for (int r = 0; r < d.num_positive; ++r) {
    v.pos_roots.push_back(d.roots[r].coroot);
    v.pos_coroots.push_back(functional_from_root(d, d.roots[r].root));
  }
  // the simple indices of the datum are positions in [0, num_positive)
  for (int s : d.simple) v.simples.push_back(s);
  v.two_rho = Vec(v.dim, 0);
  for (const auto& r : v.pos_roots) v.two_rho = add(v.two_rho, r);
  v.weyl = enumerate_reflection_group(v.dim, v.pos_roots, v.pos_coroots, v.simples);
  return v;
}

RootSystemView folded_view(const EchelonnageData& e) {
  RootSystemView v;
  v.dim = e.coord_len();
  for (int k : e.eff) {
    Vec root = e.positive[k].coroot;
    for (size_t t = 0; t < e.torsion.size(); ++t) root[e.free_rank + t] = 0;
    Vec fun(v.dim, 0);
    for (int i = 0; i < e.free_rank; ++i) fun[i] = e.positive[k].functional[i];
    v.pos_roots.push_back(std::move(root));
    v.pos_coroots.push_back(std::move(fun));
  }
  for (size_t k = 0; k < e.eff.size(); ++k)
    for (int s : e.eff_simple)
      if (e.eff[k] == s) v.simples.push_back(static_cast<int>(k));
  v.two_rho = Vec(v.dim, 0);
  for (const auto& r : v.pos_roots) v.two_rho = add(v.two_rho, r);
  v.weyl = enumerate_reflection_group(v.dim, v.pos_roots, v.pos_coroots, v.simples);
  return v;
}

namespace {

// invariant symmetric form: sum over all coroots of c(x) c(y)
Int form(const RootSystemView& v, const Vec& x, const Vec& y) {
  Int s = 0;
  for (const auto& c : v.pos_coroots) s += 2 * dot(c, x) * dot(c, y);
  return s;
}

}  // namespace

BigInt weyl_dim(const RootSystemView& v, const Vec& lambda) {
  if (!v.is_dominant(lambda)) throw validation_error("weyl_dim needs a dominant weight");
  Vec top = add(scale(2, lambda), v.two_rho);
  BigInt num = 1, den = 1;
  for (const auto& c : v.pos_coroots) {
    num *= BigInt(dot(c, top));
    den *= BigInt(dot(c, v.two_rho));
  }
  if (den == 0 || num % den != 0) throw validation_error("weyl dimension formula is not integral");
  return num / den;
}

Character weight_multiplicities(const RootSystemView& v, const Vec& lambda) {
  if (!v.is_dominant(lambda)) throw validation_error("weight_multiplicities needs a dominant weight");
  // dominant points of the cone lambda - N.simples, pruned by the height band
  Int floor_height = -v.height(lambda);
  std::unordered_set<Vec, VecHash> visited;
  std::vector<Vec> dominants;
  std::deque<Vec> queue{lambda};
  visited.insert(lambda);
  while (!queue.empty()) {
    Vec cur = queue.front();
    queue.pop_front();
    if (v.is_dominant(cur)) dominants.push_back(cur);
    for (int s : v.simples) {
      Vec nxt = sub(cur, v.pos_roots[s]);
      if (v.height(nxt) < floor_height) continue;
      if (visited.insert(nxt).second) queue.push_back(nxt);
    }
  }
  // Freudenthal recursion on dominant weights, highest first
  std::sort(dominants.begin(), dominants.end(), [&](const Vec& a, const Vec& b) {
    Int ha = v.height(a), hb = v.height(b);
    if (ha != hb) return ha > hb;
    return a > b;
  });
  std::unordered_map<Vec, Int, VecHash> mult;
  Vec top2 = add(scale(2, lambda), v.two_rho);
  Int top_norm = form(v, top2, top2);
  auto mult_of = [&](const Vec& w) -> Int {
    auto it = mult.find(v.dominant_rep(w));
    return it == mult.end() ? 0 : it->second;
  };
  for (const auto& mu : dominants) {
    if (mu == lambda) {
      mult[mu] = 1;
      continue;
    }
    Vec mu2 = add(scale(2, mu), v.two_rho);
    Int denom = top_norm - form(v, mu2, mu2);
    if (denom <= 0) throw validation_error("freudenthal denominator is not positive");
    Int rhs = 0;
    Int top_height = v.height(lambda);
    for (const auto& alpha : v.pos_roots) {
      Vec alpha2 = scale(2, alpha);
      Vec w = mu;
      for (;;) {
        w = add(w, alpha);
        if (v.height(w) > top_height) break;
        Int m = mult_of(w);
        if (m != 0) rhs += 2 * m * form(v, scale(2, w), alpha2);
      }
    }
    if (rhs % denom != 0) throw validation_error("freudenthal recursion is not integral");
    Int m = rhs / denom;
    if (m < 0) throw validation_error("freudenthal produced a negative multiplicity");
    if (m > 0) mult[mu] = m;
  }
  // spread over Weyl orbits
  Character c;
  for (const auto& [mu, m] : mult) {
    for (const auto& g : v.weyl) {
      Vec w = mul(g, mu);
      c[w] = m;
    }
  }
  return c;
}

Character restrict_character(const EchelonnageData& e, const Character& c) {
  Character out;
  for (const auto& [w, m] : c) out[e.project(w)] += m;
  return out;
}

std::vector<std::pair<Vec, Int>> decompose(const RootSystemView& v, const Character& c) {
  Character work = c;
  std::vector<std::pair<Vec, Int>> out;
  while (!work.empty()) {
    // maximal weight by (height, lexicographic)
    auto best = work.begin();
    for (auto it = work.begin(); it != work.end(); ++it) {
      Int hb = v.height(best->first), hi = v.height(it->first);
      if (hi > hb || (hi == hb && it->first > best->first)) best = it;
    }
    Vec top = best->first;
    Int m = best->second;
    if (m < 0) throw validation_error("decompose: negative multiplicity encountered");
    if (!v.is_dominant(top)) throw validation_error("decompose: maximal weight is not dominant");
    Character irr = weight_multiplicities(v, top);
    for (const auto& [w, k] : irr) {
      auto it = work.find(w);
      Int cur = (it == work.end()) ? 0 : it->second;
      Int next = cur - m * k;
      if (next < 0) throw validation_error("decompose: input is not a genuine character");
      if (next == 0) {
        if (it != work.end()) work.erase(it);
      } else {
        work[w] = next;
      }
    }
    out.emplace_back(top, m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

WeightClass classify(const EchelonnageData& e, const Vec& mu_in) {
  Vec mu = e.normalized(mu_in);
  if (!e.is_dominant(mu)) throw validation_error("classify needs a dominant weight");
  if (is_zero(mu)) return WeightClass::zero;
  // minimal among nonzero dominants in the coroot order: no nonzero dominant
  // strictly below
  Vec height(e.free_rank, 0);
  for (int k : e.eff)
    for (int i = 0; i < e.free_rank; ++i) height[i] += e.positive[k].functional[i];
  std::unordered_set<Vec, VecHash> visited;
  std::deque<Vec> queue{mu};
  visited.insert(mu);
  bool minimal = true;
  while (!queue.empty() && minimal) {
    Vec cur = queue.front();
    queue.pop_front();
    if (!(cur == mu) && e.is_dominant(cur) && !is_zero(cur)) {
      minimal = false;
      break;
    }
    for (const auto& r : e.positive) {
      Vec nxt = e.normalized(sub(cur, r.coroot));
      // dominant weights have nonnegative height, so the search can stop there
      if (e.eval(height, nxt) < 0) continue;
      if (visited.insert(nxt).second) queue.push_back(nxt);
    }
  }
  if (!minimal) return WeightClass::neither;
  for (const auto& r : e.positive) {
    Int n = e.eval(r.functional, mu);
    if (n > 1 || n < -1) return WeightClass::quasi_minuscule;
  }
  return WeightClass::minuscule;
}

std::string weight_class_name(WeightClass c) {
  switch (c) {
    case WeightClass::zero: return "zero";
    case WeightClass::minuscule: return "minuscule";
    case WeightClass::quasi_minuscule: return "quasi-minuscule";
    case WeightClass::neither: return "neither";
  }
  return "?";
}

bool bruhat_weight_equivalence(const WeylContext& W, const Vec& mu, const Vec& la) {
  if (!W.ech.is_dominant(W.ech.normalized(la)))
    throw validation_error("bruhat_weight_equivalence needs a dominant second argument");
  return quotient_bruhat_leq(W, mu, la);
}

}  // namespace taw
