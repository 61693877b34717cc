#include "taw/echelonnage.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace taw {

void EchelonnageData::normalize(Vec& v) const {
  for (size_t i = 0; i < torsion.size(); ++i) {
    Int d = torsion[i];
    Int& c = v[free_rank + i];
    c %= d;
    if (c < 0) c += d;
  }
}

Vec EchelonnageData::project(const Vec& y) const { return normalized(mul(projection, y)); }

Int EchelonnageData::eval(const Vec& functional, const Vec& v) const {
  Int s = 0;
  for (int i = 0; i < free_rank; ++i) s += functional[i] * v[i];
  return s;
}

Int EchelonnageData::pair_two_rho(const Vec& v) const { return eval(two_rho_functional, v); }

bool EchelonnageData::is_dominant(const Vec& v) const {
  for (int s : eff_simple)
    if (eval(positive[s].functional, v) < 0) return false;
  return true;
}

Vec EchelonnageData::reflect(int positive_index, const Vec& v) const {
  const EchRoot& r = positive[positive_index];
  Int n = eval(r.functional, v);
  Vec out = v;
  for (int i = 0; i < coord_len(); ++i) out[i] -= n * r.coroot[i];
  normalize(out);
  return out;
}

Vec EchelonnageData::dominant_rep(Vec v) const {
  for (;;) {
    bool moved = false;
    for (int s : eff_simple) {
      if (eval(positive[s].functional, v) < 0) {
        v = reflect(s, v);
        moved = true;
      }
    }
    if (!moved) return v;
  }
}

bool EchelonnageData::coroot_leq(const Vec& mu, const Vec& la) const {
  Vec delta = normalized(sub(la, mu));
  for (size_t i = 0; i < torsion.size(); ++i)
    if (delta[free_rank + i] != 0) return false;
  // N-cone membership over the positive coroots; bounded search guided by
  // the strictly positive height functional sum(eff roots)
  Vec height(free_rank, 0);
  for (int k : eff)
    for (int i = 0; i < free_rank; ++i) height[i] += positive[k].functional[i];
  std::unordered_map<Vec, bool, VecHash> memo;
  std::function<bool(const Vec&)> go = [&](const Vec& d) -> bool {
    if (is_zero(d)) return true;
    Int h = eval(height, d);
    if (h <= 0) return false;
    auto it = memo.find(d);
    if (it != memo.end()) return it->second;
    memo[d] = false;  // cut cycles (coroots with height 0 cannot occur)
    bool ok = false;
    for (const auto& r : positive) {
      Vec nd = normalized(sub(d, r.coroot));
      if (go(nd)) {
        ok = true;
        break;
      }
    }
    memo[d] = ok;
    return ok;
  };
  return go(delta);
}

bool EchelonnageData::dominance_leq(const Vec& mu, const Vec& la) const {
  Vec dl = dominant_rep(normalized(la));
  Vec dm = dominant_rep(normalized(mu));
  return is_dominant(sub(dl, dm));
}

int EchelonnageData::find_eff_functional(const Vec& f) const {
  for (size_t j = 0; j < eff.size(); ++j) {
    if (positive[eff[j]].functional == f) return static_cast<int>(j);
    if (neg(positive[eff[j]].functional) == f) return ~static_cast<int>(j);
  }
  throw validation_error("functional is not an echelonnage root");
}

bool EchelonnageData::non_reduced() const {
  for (const auto& r : positive)
    if (r.multipliable) return true;
  return false;
}

Mat EchelonnageData::eff_cartan() const {
  int n = static_cast<int>(eff_simple.size());
  Mat c(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      c(i, j) = eval(positive[eff_simple[i]].functional, positive[eff_simple[j]].coroot);
  return c;
}

std::string EchelonnageData::reduced_type() const {
  if (eff_simple.empty()) return "0";
  return cartan_type_name(eff_cartan());
}

std::string EchelonnageData::fixed_group_type() const {
  if (eff_simple.empty()) return "0";
  return cartan_type_name(eff_cartan().transpose());
}

namespace {

// Factor an invariant functional on Y through the free part of Y_I.
Vec factor_functional(const Mat& projection, int free_rank, const Vec& row_on_y) {
  // solve P_free^T x = row (P_free = first free_rank rows of projection)
  int n = projection.cols;
  Mat pt(n, free_rank);
  for (int i = 0; i < free_rank; ++i)
    for (int j = 0; j < n; ++j) pt(j, i) = projection(i, j);
  Vec x;
  if (!solve(pt, row_on_y, x))
    throw validation_error("functional does not factor through the coinvariant lattice");
  return x;
}

}  // namespace

EchelonnageData fold(const BasedRootDatum& datum, const PinnedAutomorphism& aut) {
  const int n = datum.rank;
  EchelonnageData e;
  e.y_rank = n;

  // Y_I = coker(1 - sigma_Y); with u m v = d, the map y -> u y identifies
  // Y_I with Z^n modulo the diagonal of d
  Mat m = Mat::identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) -= aut.dual_map(i, j);
  Smith s = smith_normal_form(m);
  std::vector<int> free_rows, torsion_rows;
  for (int i = 0; i < n; ++i) {
    Int d = s.d(i, i);
    if (d == 0)
      free_rows.push_back(i);
    else if (d != 1) {
      torsion_rows.push_back(i);
      e.torsion.push_back(d);
    }
  }
  // reorder torsion after free
  e.free_rank = static_cast<int>(free_rows.size());
  e.projection = Mat(e.free_rank + static_cast<int>(torsion_rows.size()), n);
  {
    int r = 0;
    for (int i : free_rows) {
      for (int j = 0; j < n; ++j) e.projection(r, j) = s.u(i, j);
      ++r;
    }
    size_t t = 0;
    for (int i : torsion_rows) {
      for (int j = 0; j < n; ++j) e.projection(r, j) = s.u(i, j);
      // store torsion moduli in the same order as the rows
      e.torsion[t++] = s.d(i, i);
      ++r;
    }
  }

  // <., 2rho> as functional on Y, factored through the projection
  Vec two_rho_row = mul_row(datum.two_rho, datum.pairing);
  e.two_rho_functional = factor_functional(e.projection, e.free_rank, two_rho_row);

  // sigma-orbits of positive roots
  std::vector<int> orbit_of(datum.num_positive, -1);
  std::vector<std::vector<int>> orbits;
  for (int r = 0; r < datum.num_positive; ++r) {
    if (orbit_of[r] >= 0) continue;
    std::vector<int> orb;
    int cur = r;
    while (orbit_of[cur] < 0) {
      orbit_of[cur] = static_cast<int>(orbits.size());
      orb.push_back(cur);
      Vec im = mul(aut.lattice_map, datum.roots[cur].root);
      cur = datum.find_root(im);
      if (!datum.is_positive_root_index(cur))
        throw validation_error("automorphism does not preserve positivity");
    }
    orbits.push_back(orb);
  }

  for (const auto& orb : orbits) {
    EchRoot r;
    Vec sum(n, 0);
    for (int idx : orb) sum = add(sum, datum.roots[idx].root);
    for (size_t a = 0; a < orb.size() && !r.doubled; ++a)
      for (size_t b = 0; b < orb.size() && !r.doubled; ++b) {
        if (a == b) continue;
        Vec ab = add(datum.roots[orb[a]].root, datum.roots[orb[b]].root);
        if (datum.find_root(ab) >= 0) r.doubled = true;
      }
    if (r.doubled) sum = scale(2, sum);
    Vec row = mul_row(sum, datum.pairing);
    r.functional = factor_functional(e.projection, e.free_rank, row);
    r.coroot = e.project(datum.roots[orb[0]].coroot);
    for (int idx : orb)
      if (e.project(datum.roots[idx].coroot) != r.coroot)
        throw validation_error("orbit coroots do not project to a single class");
    if (e.eval(r.functional, r.coroot) != 2)
      throw validation_error("echelonnage root fails <a, a_check> = 2");
    for (const auto& prev : e.positive)
      if (prev.functional == r.functional)
        throw validation_error("distinct orbits produced the same echelonnage root");
    e.positive.push_back(std::move(r));
  }

  // the positive echelonnage coroots are exactly the projections of the
  // positive coroots of the input
  {
    std::set<Vec> from_input, constructed;
    for (int r = 0; r < datum.num_positive; ++r) from_input.insert(e.project(datum.roots[r].coroot));
    for (const auto& r : e.positive) constructed.insert(r.coroot);
    if (from_input != constructed)
      throw validation_error("echelonnage coroots differ from the projected coroot set");
  }

  // multipliable / divisible flags, eff subsystem
  auto find_fn = [&](const Vec& f) {
    for (size_t i = 0; i < e.positive.size(); ++i)
      if (e.positive[i].functional == f) return static_cast<int>(i);
    return -1;
  };
  for (auto& r : e.positive) {
    r.multipliable = find_fn(scale(2, r.functional)) >= 0;
    bool even = true;
    for (Int c : r.functional)
      if (c % 2 != 0) even = false;
    Vec half(r.functional);
    if (even)
      for (auto& c : half) c /= 2;
    r.divisible = even && find_fn(half) >= 0;
  }
  for (size_t i = 0; i < e.positive.size(); ++i)
    if (!e.positive[i].multipliable) e.eff.push_back(static_cast<int>(i));

  // simples of the eff system: indecomposable within the eff positives
  std::set<Vec> eff_set;
  for (int k : e.eff) eff_set.insert(e.positive[k].functional);
  for (int k : e.eff) {
    bool decomposable = false;
    for (int a : e.eff) {
      const Vec& fa = e.positive[a].functional;
      Vec rest = sub(e.positive[k].functional, fa);
      if (eff_set.count(rest)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) e.eff_simple.push_back(k);
  }
  std::sort(e.eff_simple.begin(), e.eff_simple.end(), [&](int a, int b) {
    return e.positive[a].functional < e.positive[b].functional;
  });

  // connected components of the eff Dynkin diagram
  int ns = static_cast<int>(e.eff_simple.size());
  e.component_of_simple.assign(ns, -1);
  Mat cart = e.eff_cartan();
  for (int i = 0; i < ns; ++i) {
    if (e.component_of_simple[i] >= 0) continue;
    std::vector<int> stack{i};
    e.component_of_simple[i] = e.num_components;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w = 0; w < ns; ++w)
        if (e.component_of_simple[w] < 0 && cart(u, w) != 0) {
          e.component_of_simple[w] = e.num_components;
          stack.push_back(w);
        }
    }
    ++e.num_components;
  }

  // highest eff root per component: saturate upward by adding simples
  std::unordered_map<Vec, int, VecHash> eff_index;
  for (int k : e.eff) eff_index[e.positive[k].functional] = k;
  for (int c = 0; c < e.num_components; ++c) {
    int start = -1;
    for (int i = 0; i < ns; ++i)
      if (e.component_of_simple[i] == c) {
        start = e.eff_simple[i];
        break;
      }
    Vec cur = e.positive[start].functional;
    bool grew = true;
    while (grew) {
      grew = false;
      for (int i = 0; i < ns; ++i) {
        Vec up = add(cur, e.positive[e.eff_simple[i]].functional);
        auto it = eff_index.find(up);
        if (it != eff_index.end()) {
          cur = up;
          grew = true;
          break;
        }
      }
    }
    e.highest_eff.push_back(eff_index.at(cur));
  }

  check_root_system_axioms(e);
  e.reduced_type();  // throws unless finite type
  return e;
}

void check_root_system_axioms(const EchelonnageData& e) {
  // signed set: (functional, coroot, sign)
  struct Signed {
    Vec f, c;
  };
  std::vector<Signed> all;
  for (const auto& r : e.positive) {
    all.push_back({r.functional, r.coroot});
    all.push_back({neg(r.functional), e.normalized(neg(r.coroot))});
  }
  auto find = [&](const Vec& f) {
    for (size_t i = 0; i < all.size(); ++i)
      if (all[i].f == f) return static_cast<int>(i);
    return -1;
  };
  for (const auto& a : all) {
    if (e.eval(a.f, a.c) != 2) throw validation_error("axioms: <a, a_check> != 2");
    for (const auto& b : all) {
      Int n = e.eval(b.f, a.c);  // <b, a_check>
      Vec rf = sub(b.f, scale(n, a.f));
      int k = find(rf);
      if (k < 0) throw validation_error("axioms: reflection does not preserve the root set");
      Vec rc = e.normalized(sub(b.c, scale(e.eval(a.f, b.c), a.c)));
      if (!(all[k].c == rc))
        throw validation_error("axioms: reflection breaks the root/coroot pairing");
    }
  }
}

}  // namespace taw
