#include "taw/weyl.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace taw {

struct WeylCaches {
  std::mutex mu;
  std::unordered_map<IWElement, ReducedWord, IWHash> words;
  std::unordered_map<Vec, IWElement, VecHash> min_reps;
};

WeylContext::WeylContext() = default;
WeylContext::~WeylContext() = default;
WeylContext::WeylContext(WeylContext&&) noexcept = default;
WeylContext& WeylContext::operator=(WeylContext&&) noexcept = default;

namespace {

Mat canonical_action(const EchelonnageData& e, Mat m) {
  // torsion rows live modulo their cyclic order
  for (size_t t = 0; t < e.torsion.size(); ++t) {
    Int d = e.torsion[t];
    for (int j = 0; j < m.cols; ++j) {
      Int& c = m(e.free_rank + static_cast<int>(t), j);
      c %= d;
      if (c < 0) c += d;
    }
  }
  return m;
}

Mat reflection_matrix(const EchelonnageData& e, int positive_index) {
  const EchRoot& r = e.positive[positive_index];
  int n = e.coord_len();
  Mat m = Mat::identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < e.free_rank; ++j) m(i, j) -= r.coroot[i] * r.functional[j];
  return canonical_action(e, m);
}

FinWeylTable enumerate_fin(const EchelonnageData& e) {
  FinWeylTable t;
  t.num_gen = static_cast<int>(e.eff_simple.size());
  int n = e.coord_len();
  std::vector<Mat> gens;
  for (int s : e.eff_simple) gens.push_back(reflection_matrix(e, s));

  std::map<std::vector<Int>, int> index;
  auto key = [](const Mat& m) { return m.a; };
  Mat id = Mat::identity(n);
  t.act.push_back(id);
  t.word.push_back({});
  t.len.push_back(0);
  index[key(id)] = 0;
  for (size_t head = 0; head < t.act.size(); ++head) {
    if (t.act.size() > 200000) throw validation_error("finite Weyl group enumeration exploded");
    for (int s = 0; s < t.num_gen; ++s) {
      Mat m = canonical_action(e, mul(t.act[head], gens[s]));
      auto [it, fresh] = index.try_emplace(key(m), static_cast<int>(t.act.size()));
      if (fresh) {
        t.act.push_back(m);
        std::vector<int> w = t.word[head];
        w.push_back(s);
        t.word.push_back(std::move(w));
        t.len.push_back(t.len[head] + 1);
      }
    }
  }
  int sz = t.size();
  t.right.assign(sz, std::vector<int>(t.num_gen));
  t.left.assign(sz, std::vector<int>(t.num_gen));
  t.inv.assign(sz, -1);
  for (int w = 0; w < sz; ++w) {
    for (int s = 0; s < t.num_gen; ++s) {
      t.right[w][s] = index.at(key(canonical_action(e, mul(t.act[w], gens[s]))));
      t.left[w][s] = index.at(key(canonical_action(e, mul(gens[s], t.act[w]))));
    }
  }
  for (int w = 0; w < sz; ++w) {
    // inverse by reversing the word
    int u = 0;
    const auto& wd = t.word[w];
    for (auto it = wd.rbegin(); it != wd.rend(); ++it) u = t.right[u][*it];
    t.inv[w] = u;
  }
  t.mul.assign(sz, std::vector<int>(sz));
  for (int a = 0; a < sz; ++a)
    for (int b = 0; b < sz; ++b) {
      int u = a;
      for (int s : t.word[b]) u = t.right[u][s];
      t.mul[a][b] = u;
    }
  return t;
}

Vec apply_fin(const WeylContext& W, int fin_id, const Vec& v) {
  Vec out = mul(W.fin.act[fin_id], v);
  W.ech.normalize(out);
  return out;
}

}  // namespace

IWElement iw_identity(const WeylContext& W) {
  return IWElement{Vec(W.ech.coord_len(), 0), 0};
}

IWElement iw_translation(const WeylContext& W, Vec lambda) {
  W.ech.normalize(lambda);
  return IWElement{std::move(lambda), 0};
}

IWElement iw_finite(const WeylContext& W, int fin_id) {
  return IWElement{Vec(W.ech.coord_len(), 0), fin_id};
}

IWElement multiply(const WeylContext& W, const IWElement& a, const IWElement& b) {
  // (t^l u)(t^m v) = t^{l + u(m)} (u v)
  Vec lam = add(a.lambda, apply_fin(W, a.fin, b.lambda));
  W.ech.normalize(lam);
  return IWElement{std::move(lam), W.fin.mul[a.fin][b.fin]};
}

IWElement invert(const WeylContext& W, const IWElement& a) {
  int fi = W.fin.inv[a.fin];
  Vec lam = apply_fin(W, fi, neg(a.lambda));
  W.ech.normalize(lam);
  return IWElement{std::move(lam), fi};
}

Int length(const WeylContext& W, const IWElement& w) {
  Int total = 0;
  const auto& signs = W.inv_sign[w.fin];
  for (size_t k = 0; k < W.ech.eff.size(); ++k) {
    Int n = W.ech.eval(W.ech.positive[W.ech.eff[k]].functional, w.lambda);
    total += signs[k] > 0 ? std::abs(n) : std::abs(n - 1);
  }
  return total;
}

int omega_class(const WeylContext& W, const Vec& lambda) {
  Vec r = mul(W.omega_u, lambda);
  for (size_t i = 0; i < W.omega_d.size(); ++i) {
    Int d = W.omega_d[i];
    if (d != 0) {
      r[i] %= d;
      if (r[i] < 0) r[i] += d;
    } else if (r[i] != 0) {
      throw validation_error("lambda escapes the finite coset table");
    }
  }
  // decode mixed-radix index
  int idx = 0;
  for (size_t i = 0; i < W.omega_d.size(); ++i) {
    Int d = W.omega_d[i];
    if (d > 1) idx = idx * static_cast<int>(d) + static_cast<int>(r[i]);
  }
  return idx;
}

WeylContext build_weyl_context(EchelonnageData ech, int omega_search_bound) {
  WeylContext W;
  W.ech = std::move(ech);
  W.fin = enumerate_fin(W.ech);
  W.caches = std::make_unique<WeylCaches>();
  const EchelonnageData& e = W.ech;

  // sign of u^{-1}(root) for each finite element and eff root; u^{-1}(f) is
  // the functional y -> f(u y), i.e. the row f * act[u]
  W.inv_sign.assign(W.fin.size(), std::vector<int>(e.eff.size(), 1));
  for (int u = 0; u < W.fin.size(); ++u)
    for (size_t k = 0; k < e.eff.size(); ++k) {
      Vec f(e.free_rank, 0);
      const Vec& fk = e.positive[e.eff[k]].functional;
      for (int j = 0; j < e.free_rank; ++j)
        for (int i = 0; i < e.free_rank; ++i) f[j] += fk[i] * W.fin.act[u](i, j);
      int idx = e.find_eff_functional(f);
      W.inv_sign[u][k] = idx >= 0 ? 1 : -1;
    }

  // simple system: one affine reflection per component, then the finite ones
  W.num_affine = e.num_components;
  for (int c = 0; c < e.num_components; ++c) {
    int h = e.highest_eff[c];
    Mat refl = reflection_matrix(e, h);
    int fin_id = -1;
    for (int u = 0; u < W.fin.size(); ++u)
      if (W.fin.act[u] == refl) fin_id = u;
    if (fin_id < 0) throw validation_error("highest-root reflection missing from the finite group");
    IWElement s0{e.normalized(e.positive[h].coroot), fin_id};
    if (length(W, s0) != 1) throw validation_error("affine simple reflection does not have length 1");
    W.simple.push_back(std::move(s0));
  }
  for (int i = 0; i < W.fin.num_gen; ++i) {
    IWElement s = iw_finite(W, W.fin.right[0][i]);
    if (length(W, s) != 1) throw validation_error("finite simple reflection does not have length 1");
    W.simple.push_back(std::move(s));
  }

  // Y_I modulo the eff coroot lattice: relations = torsion orders and the
  // coroots of the eff roots
  {
    int n = e.coord_len();
    int t = static_cast<int>(e.torsion.size());
    Mat rel(n, t + static_cast<int>(e.eff.size()));
    for (int i = 0; i < t; ++i) rel(e.free_rank + i, i) = e.torsion[i];
    for (size_t k = 0; k < e.eff.size(); ++k)
      for (int i = 0; i < n; ++i) rel(i, t + static_cast<int>(k)) = e.positive[e.eff[k]].coroot[i];
    Smith s = smith_normal_form(rel);
    W.omega_u = s.u;
    W.omega_d.assign(n, 0);
    long long count = 1;
    for (int i = 0; i < std::min(rel.rows, rel.cols); ++i) W.omega_d[i] = s.d(i, i);
    for (int i = 0; i < n; ++i) {
      if (W.omega_d[i] == 0)
        throw validation_error("length-zero subgroup is infinite (lattice has central directions)");
      count *= W.omega_d[i];
      if (count > 100000) throw validation_error("length-zero subgroup too large");
    }
    int expected = static_cast<int>(count);
    W.omega.assign(expected, iw_identity(W));
    std::vector<bool> found(expected, false);
    int remaining = expected;
    for (int bound = 0; bound <= omega_search_bound && remaining > 0; ++bound) {
      // free coordinates with max-norm == bound, all torsion values
      std::vector<Vec> cands;
      Vec v(e.coord_len(), 0);
      std::function<void(int)> rec = [&](int pos) {
        if (pos == e.coord_len()) {
          Int mx = 0;
          for (int i = 0; i < e.free_rank; ++i) mx = std::max(mx, std::abs(v[i]));
          if (mx == bound || (bound == 0 && e.free_rank == 0)) cands.push_back(v);
          return;
        }
        if (pos < e.free_rank) {
          for (Int c = -bound; c <= bound; ++c) {
            v[pos] = c;
            rec(pos + 1);
          }
        } else {
          for (Int c = 0; c < e.torsion[pos - e.free_rank]; ++c) {
            v[pos] = c;
            rec(pos + 1);
          }
        }
      };
      rec(0);
      for (const auto& lam : cands) {
        for (int u = 0; u < W.fin.size() && remaining > 0; ++u) {
          IWElement w{lam, u};
          if (length(W, w) != 0) continue;
          int cls = omega_class(W, lam);
          if (found[cls]) {
            if (!(W.omega[cls] == w))
              throw validation_error("two distinct length-zero elements in one coset");
            continue;
          }
          found[cls] = true;
          W.omega[cls] = w;
          --remaining;
        }
      }
    }
    if (remaining > 0)
      throw validation_error("length-zero search did not terminate within the bound");
    if (!(W.omega[0] == iw_identity(W)))
      throw validation_error("identity coset carries a nontrivial length-zero element");
  }

  // conjugation by omega must permute the simple reflections
  for (const auto& om : W.omega) {
    IWElement om_inv = invert(W, om);
    for (const auto& s : W.simple) {
      IWElement c = multiply(W, multiply(W, om, s), om_inv);
      bool in_s = false;
      for (const auto& s2 : W.simple)
        if (c == s2) in_s = true;
      if (!in_s) throw validation_error("omega conjugation does not permute the simple system");
    }
  }
  return W;
}

ReducedWord reduced_word(const WeylContext& W, const IWElement& w) {
  {
    std::lock_guard<std::mutex> lk(W.caches->mu);
    auto it = W.caches->words.find(w);
    if (it != W.caches->words.end()) return it->second;
  }
  ReducedWord rw;
  IWElement cur = w;
  Int len = length(W, cur);
  while (len > 0) {
    bool moved = false;
    for (int i = 0; i < W.num_simple(); ++i) {
      IWElement nxt = multiply(W, W.simple[i], cur);
      Int nl = length(W, nxt);
      if (nl < len) {
        rw.letters.push_back(i);
        cur = nxt;
        len = nl;
        moved = true;
        break;
      }
    }
    if (!moved) throw validation_error("no descent found for a positive-length element");
  }
  rw.omega = omega_class(W, cur.lambda);
  if (!(W.omega[rw.omega] == cur))
    throw validation_error("length-zero remainder is not the coset representative");
  {
    std::lock_guard<std::mutex> lk(W.caches->mu);
    W.caches->words.emplace(w, rw);
  }
  return rw;
}

IWElement from_word(const WeylContext& W, const ReducedWord& rw) {
  IWElement cur = W.omega[rw.omega];
  for (auto it = rw.letters.rbegin(); it != rw.letters.rend(); ++it)
    cur = multiply(W, W.simple[*it], cur);
  return cur;
}

namespace {

bool bruhat_leq_aff(const WeylContext& W, IWElement v, IWElement w, Int lv, Int lw) {
  // both in W_aff; classical descent recursion
  while (true) {
    if (lv > lw) return false;
    if (v == w) return true;
    if (lw == 0) return false;
    int s = -1;
    IWElement ws;
    for (int i = 0; i < W.num_simple(); ++i) {
      ws = multiply(W, w, W.simple[i]);
      if (length(W, ws) < lw) {
        s = i;
        break;
      }
    }
    if (s < 0) throw validation_error("positive-length element with no right descent");
    IWElement vs = multiply(W, v, W.simple[s]);
    Int lvs = length(W, vs);
    if (lvs < lv) {
      v = vs;
      lv = lvs;
    }
    w = ws;
    --lw;
  }
}

}  // namespace

bool bruhat_leq(const WeylContext& W, const IWElement& v, const IWElement& w) {
  int cv = omega_class(W, v.lambda), cw = omega_class(W, w.lambda);
  if (cv != cw) return false;
  IWElement om_inv = invert(W, W.omega[cw]);
  IWElement va = multiply(W, v, om_inv);
  IWElement wa = multiply(W, w, om_inv);
  return bruhat_leq_aff(W, va, wa, length(W, va), length(W, wa));
}

std::unordered_set<IWElement, IWHash> bruhat_interval_below(const WeylContext& W,
                                                            const IWElement& w) {
  ReducedWord rw = reduced_word(W, w);
  std::unordered_set<IWElement, IWHash> set;
  set.insert(iw_identity(W));
  for (int letter : rw.letters) {
    std::unordered_set<IWElement, IWHash> next = set;
    for (const auto& u : set) next.insert(multiply(W, u, W.simple[letter]));
    set = std::move(next);
  }
  if (rw.omega != 0) {
    std::unordered_set<IWElement, IWHash> shifted;
    for (const auto& u : set) shifted.insert(multiply(W, u, W.omega[rw.omega]));
    set = std::move(shifted);
  }
  return set;
}

IWElement min_coset_rep(const WeylContext& W, IWElement w) {
  Int len = length(W, w);
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = W.num_affine; i < W.num_simple(); ++i) {
      IWElement nxt = multiply(W, W.simple[i], w);
      Int nl = length(W, nxt);
      if (nl < len) {
        w = nxt;
        len = nl;
        moved = true;
      }
    }
  }
  return w;
}

Vec coset_index(const WeylContext& W, const IWElement& w) {
  return apply_fin(W, W.fin.inv[w.fin], w.lambda);
}

IWElement min_rep_of_class(const WeylContext& W, const Vec& lambda) {
  Vec key = W.ech.normalized(lambda);
  {
    std::lock_guard<std::mutex> lk(W.caches->mu);
    auto it = W.caches->min_reps.find(key);
    if (it != W.caches->min_reps.end()) return it->second;
  }
  IWElement rep = min_coset_rep(W, iw_translation(W, key));
  {
    std::lock_guard<std::mutex> lk(W.caches->mu);
    W.caches->min_reps.emplace(key, rep);
  }
  return rep;
}

bool quotient_bruhat_leq(const WeylContext& W, const Vec& mu, const Vec& la) {
  return bruhat_leq(W, min_rep_of_class(W, mu), min_rep_of_class(W, la));
}

bool double_quotient_bruhat_leq(const WeylContext& W, const Vec& mu, const Vec& la) {
  // minimal representative of W_fin t^lambda W_fin: strip finite descents on
  // both sides
  auto double_min = [&](const Vec& v) {
    IWElement w = iw_translation(W, v);
    Int len = length(W, w);
    bool moved = true;
    while (moved) {
      moved = false;
      for (int i = W.num_affine; i < W.num_simple(); ++i) {
        IWElement a = multiply(W, W.simple[i], w);
        if (length(W, a) < len) {
          w = a;
          len = length(W, a);
          moved = true;
          continue;
        }
        IWElement b = multiply(W, w, W.simple[i]);
        if (length(W, b) < len) {
          w = b;
          len = length(W, b);
          moved = true;
        }
      }
    }
    return w;
  };
  return bruhat_leq(W, double_min(mu), double_min(la));
}

std::vector<std::pair<IWElement, Int>> enumerate_ball(const WeylContext& W, int max_len) {
  std::vector<std::pair<IWElement, Int>> out;
  std::unordered_map<IWElement, Int, IWHash> dist;
  std::deque<IWElement> frontier;
  IWElement e = iw_identity(W);
  dist[e] = 0;
  frontier.push_back(e);
  while (!frontier.empty()) {
    IWElement cur = frontier.front();
    frontier.pop_front();
    Int d = dist.at(cur);
    if (d == max_len) continue;
    for (int i = 0; i < W.num_simple(); ++i) {
      IWElement nxt = multiply(W, cur, W.simple[i]);
      if (dist.emplace(nxt, d + 1).second) frontier.push_back(nxt);
    }
  }
  for (const auto& [el, d] : dist)
    for (size_t k = 0; k < W.omega.size(); ++k) out.emplace_back(multiply(W, el, W.omega[k]), d);
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.second < b.second || (a.second == b.second && a.first < b.first); });
  return out;
}

}  // namespace taw
