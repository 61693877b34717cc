#include "taw/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>
#ifdef _OPENMP
#include <omp.h>
#endif

#include "taw/textio.hpp"

namespace taw {

namespace {

using Case = std::function<std::optional<std::string>(size_t)>;

struct Sweep {
  bool pass = true;
  std::string counterexample;
  long long cases = 0;
};

Sweep sweep(size_t n, bool parallel, const Case& f) {
  Sweep out;
  out.cases = static_cast<long long>(n);
  std::atomic<long long> first_bad{-1};
  std::string bad_msg;
  std::mutex mu;
  auto run_one = [&](long long i) {
    long long cur = first_bad.load(std::memory_order_relaxed);
    if (cur >= 0 && cur < i) return;
    std::optional<std::string> r;
    try {
      r = f(static_cast<size_t>(i));
    } catch (const std::exception& e) {
      r = std::string("exception: ") + e.what();
    }
    if (r) {
      std::lock_guard<std::mutex> lk(mu);
      long long prev = first_bad.load();
      if (prev < 0 || i < prev) {
        first_bad = i;
        bad_msg = "case " + std::to_string(i) + ": " + *r;
      }
    }
  };
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 4)
    for (long long i = 0; i < static_cast<long long>(n); ++i) run_one(i);
  } else {
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      run_one(i);
      if (first_bad.load() >= 0) break;
    }
  }
  if (first_bad.load() >= 0) {
    out.pass = false;
    out.counterexample = bad_msg;
  }
  return out;
}

struct Rng {
  std::mt19937_64 g;
  explicit Rng(std::uint64_t seed) : g(seed) {}
  size_t pick(size_t n) { return static_cast<size_t>(g() % n); }
  Int range(Int lo, Int hi) {
    return lo + static_cast<Int>(g() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

std::string show(const Vec& v) { return format_weight(v); }

// all Y_I vectors with free coordinates bounded in max norm, all torsion values
std::vector<Vec> yi_box(const EchelonnageData& e, Int bound) {
  std::vector<Vec> out;
  Vec v(e.coord_len(), 0);
  std::function<void(int)> rec = [&](int pos) {
    if (pos == e.coord_len()) {
      out.push_back(v);
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
  return out;
}

struct Ctx {
  const Fixture& fx;
  const VerifyOptions& opts;
  std::vector<std::pair<IWElement, Int>> ball;  // length <= max_length, with reference lengths
  std::vector<IWElement> ball6;                 // length <= min(6, max_length)
  std::vector<IWElement> ball4;                 // length <= min(4, max_length)
  std::vector<Vec> dominants10;                 // dominant classes, translation length <= 10
  std::vector<Vec> dominants8;
  std::vector<Vec> small_reps;                  // dual dominants, dim <= dim_bound
  std::vector<Vec> quasi_minuscule_lifts;       // dual dominants lifting quasi-minuscule classes
};

using CheckFn = std::function<Sweep(const Ctx&)>;

struct CheckDef {
  std::string id;
  std::string law;
  CheckFn fn;
};

// ---------------------------------------------------------------- root data

Sweep chk_identity_refold(const Ctx& c) {
  return sweep(1, false, [&](size_t) -> std::optional<std::string> {
    PinnedAutomorphism id = identity_automorphism(c.fx.datum);
    EchelonnageData e2 = fold(c.fx.datum, id);
    if (static_cast<int>(e2.positive.size()) != c.fx.datum.num_positive)
      return "positive root count changed under the identity fold";
    for (int r = 0; r < c.fx.datum.num_positive; ++r) {
      Vec f = mul_row(c.fx.datum.roots[r].root, c.fx.datum.pairing);
      bool found = false;
      for (const auto& er : e2.positive)
        if (er.functional == f && er.coroot == c.fx.datum.roots[r].coroot) found = true;
      if (!found) return "positive root " + std::to_string(r) + " not reproduced";
    }
    return std::nullopt;
  });
}

Sweep chk_axioms(const Ctx& c) {
  return sweep(1, false, [&](size_t) -> std::optional<std::string> {
    check_root_system_axioms(c.fx.weyl().ech);
    c.fx.weyl().ech.reduced_type();
    return std::nullopt;
  });
}

Sweep chk_two_rho_lift(const Ctx& c) {
  const auto& d = c.fx.datum;
  const auto& e = c.fx.weyl().ech;
  Rng rng(c.opts.seed ^ 0x7207u);
  struct CasePair {
    Vec lambda, shifted;
  };
  std::vector<CasePair> cases;
  for (int i = 0; i < 200; ++i) {
    Vec la(d.rank, 0), mu(d.rank, 0);
    for (int j = 0; j < d.rank; ++j) {
      la[j] = rng.range(-4, 4);
      mu[j] = rng.range(-3, 3);
    }
    // lambda + (1 - sigma) mu projects to the same class
    Vec shifted = add(la, sub(mu, mul(c.fx.aut.dual_map, mu)));
    cases.push_back({la, shifted});
  }
  return sweep(cases.size(), c.opts.parallel, [&](size_t i) -> std::optional<std::string> {
    const Vec& la = cases[i].lambda;
    Int expected = d.pair(d.two_rho, la);
    if (e.pair_two_rho(e.project(la)) != expected)
      return "pairing through the projection differs at lambda = " + show(la);
    if (!(e.project(cases[i].shifted) == e.project(la)))
      return "kernel shift moved the class of lambda = " + show(la);
    if (e.pair_two_rho(e.project(cases[i].shifted)) != expected)
      return "pairing depends on the lift at lambda = " + show(la);
    return std::nullopt;
  });
}

Sweep chk_coroot_poset(const Ctx& c) {
  const auto& e = c.fx.weyl().ech;
  std::vector<Vec> box = yi_box(e, 3);
  if (box.size() > 64) {
    // deterministic thinning keeps the cubic transitivity loop tractable
    std::vector<Vec> thin;
    for (size_t i = 0; i < box.size(); i += box.size() / 64 + 1) thin.push_back(box[i]);
    box = std::move(thin);
  }
  size_t n = box.size();
  std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) leq[i][j] = e.coroot_leq(box[i], box[j]) ? 1 : 0;
  return sweep(n * n, c.opts.parallel, [&](size_t k) -> std::optional<std::string> {
    size_t i = k / n, j = k % n;
    if (i == j && !leq[i][i]) return "not reflexive at " + show(box[i]);
    if (i != j && leq[i][j] && leq[j][i])
      return "antisymmetry fails between " + show(box[i]) + " and " + show(box[j]);
    for (size_t l = 0; l < n; ++l)
      if (leq[i][j] && leq[j][l] && !leq[i][l])
        return "transitivity fails through " + show(box[j]);
    return std::nullopt;
  });
}

Sweep chk_projection_monotone(const Ctx& c) {
  const auto& d = c.fx.datum;
  const auto& e = c.fx.weyl().ech;
  Rng rng(c.opts.seed ^ 0x9091u);
  struct P {
    Vec lo, hi;
  };
  std::vector<P> cases;
  for (int i = 0; i < 100; ++i) {
    Vec lo(d.rank, 0);
    for (int j = 0; j < d.rank; ++j) lo[j] = rng.range(-3, 3);
    Vec hi = lo;
    int steps = static_cast<int>(rng.pick(4));
    for (int s = 0; s < steps; ++s) hi = add(hi, d.roots[rng.pick(d.num_positive)].coroot);
    cases.push_back({lo, hi});
  }
  return sweep(cases.size(), c.opts.parallel, [&](size_t i) -> std::optional<std::string> {
    if (!e.coroot_leq(e.project(cases[i].lo), e.project(cases[i].hi)))
      return "projection broke the coroot order at " + show(cases[i].lo);
    return std::nullopt;
  });
}

// -------------------------------------------------------------------- weyl

Sweep chk_length_bfs(const Ctx& c) {
  return sweep(c.ball.size(), c.opts.parallel, [&](size_t i) -> std::optional<std::string> {
    const auto& [w, d] = c.ball[i];
    if (length(c.fx.weyl(), w) != d)
      return "closed form gives " + std::to_string(length(c.fx.weyl(), w)) +
             ", graph distance is " + std::to_string(d);
    return std::nullopt;
  });
}

Sweep chk_length_subadditive(const Ctx& c) {
  const auto& W = c.fx.weyl();
  Rng rng(c.opts.seed ^ 0xabcdu);
  std::vector<std::pair<size_t, size_t>> pairs;
  for (int i = 0; i < 300; ++i) pairs.emplace_back(rng.pick(c.ball.size()), rng.pick(c.ball.size()));
  return sweep(pairs.size() + c.ball6.size() * W.omega.size(), c.opts.parallel,
               [&](size_t k) -> std::optional<std::string> {
                 if (k < pairs.size()) {
                   const IWElement& a = c.ball[pairs[k].first].first;
                   const IWElement& b = c.ball[pairs[k].second].first;
                   if (length(W, multiply(W, a, b)) > length(W, a) + length(W, b))
                     return "length is not subadditive";
                   return std::nullopt;
                 }
                 size_t r = k - pairs.size();
                 const IWElement& a = c.ball6[r / W.omega.size()];
                 const IWElement& om = W.omega[r % W.omega.size()];
                 if (length(W, multiply(W, om, a)) != length(W, a))
                   return "left translation by a length-zero element changed the length";
                 return std::nullopt;
               });
}

Sweep chk_translation_length(const Ctx& c) {
  const auto& e = c.fx.weyl().ech;
  std::vector<Vec> doms;
  for (const Vec& v : yi_box(e, 13))
    if (e.is_dominant(v) && e.pair_two_rho(v) <= 12) doms.push_back(v);
  return sweep(doms.size(), c.opts.parallel, [&](size_t i) -> std::optional<std::string> {
    if (length(c.fx.weyl(), iw_translation(c.fx.weyl(), doms[i])) != e.pair_two_rho(doms[i]))
      return "translation length differs from the two-rho pairing at " + show(doms[i]);
    return std::nullopt;
  });
}

Sweep chk_translation_additive(const Ctx& c) {
  const auto& W = c.fx.weyl();
  size_t n = c.dominants10.size();
  return sweep(n * n, c.opts.parallel, [&](size_t k) -> std::optional<std::string> {
    const Vec& mu = c.dominants10[k / n];
    const Vec& la = c.dominants10[k % n];
    Int lhs = length(W, iw_translation(W, W.ech.normalized(add(mu, la))));
    Int rhs = length(W, iw_translation(W, mu)) + length(W, iw_translation(W, la));
    if (lhs != rhs)
      return "lengths not additive at mu = " + show(mu) + ", la = " + show(la);
    return std::nullopt;
  });
}

Sweep chk_bruhat_coroot(const Ctx& c) {
  const auto& W = c.fx.weyl();
  size_t n = c.dominants10.size();
  return sweep(n * n, c.opts.parallel, [&](size_t k) -> std::optional<std::string> {
    const Vec& mu = c.dominants10[k / n];
    const Vec& la = c.dominants10[k % n];
    bool br = bruhat_leq(W, iw_translation(W, mu), iw_translation(W, la));
    bool co = W.ech.coroot_leq(mu, la);
    if (br != co)
      return "Bruhat and coroot order disagree at mu = " + show(mu) + ", la = " + show(la);
    return std::nullopt;
  });
}

Sweep chk_bruhat_subword(const Ctx& c) {
  const auto& W = c.fx.weyl();
  size_t n = c.ball6.size();
  return sweep(n, c.opts.parallel, [&](size_t i) -> std::optional<std::string> {
    auto below = bruhat_interval_below(W, c.ball6[i]);
    for (size_t j = 0; j < n; ++j) {
      bool direct = bruhat_leq(W, c.ball6[j], c.ball6[i]);
      bool oracle = below.count(c.ball6[j]) > 0;
      if (direct != oracle)
        return "descent recursion disagrees with the subword oracle (pair " +
               std::to_string(j) + ")";
    }
    return std::nullopt;
  });
}

Sweep chk_min_coset(const Ctx& c) {
  const auto& W = c.fx.weyl();
  return sweep(c.ball.size(), c.opts.parallel, [&](size_t i) -> std::optional<std::string> {
    const IWElement& w = c.ball[i].first;
    IWElement m = min_coset_rep(W, w);
    if (!(min_coset_rep(W, m) == m)) return "minimal representative is not a fixed point";
    bool in_orbit = false;
    for (int u = 0; u < W.fin.size(); ++u) {
      IWElement uw = multiply(W, iw_finite(W, u), w);
      if (uw == m) in_orbit = true;
      if (!(uw == m) && length(W, uw) <= length(W, m))
        return "orbit element not longer than the minimal representative";
    }
    if (!in_orbit) return "minimal representative escaped the orbit";
    return std::nullopt;
  });
}

Sweep chk_double_quotient(const Ctx& c) {
  const auto& W = c.fx.weyl();
  size_t n = c.dominants10.size();
  return sweep(n * n, c.opts.parallel, [&](size_t k) -> std::optional<std::string> {
    const Vec& mu = c.dominants10[k / n];
    const Vec& la = c.dominants10[k % n];
    if (double_quotient_bruhat_leq(W, mu, la) != W.ech.coroot_leq(mu, la))
      return "double quotient order differs from coroot order at mu = " + show(mu) +
             ", la = " + show(la);
    return std::nullopt;
  });
}

// ------------------------------------------------------------------- hecke

Sweep chk_quadratic(const Ctx& c) {
  const auto& W = c.fx.weyl();
  const auto& H = *c.fx.hecke;
  return sweep(W.simple.size(), c.opts.parallel, [&](size_t i) -> std::optional<std::string> {
    HeckeElement hs = hecke_basis(W.simple[i]);
    HeckeElement lhs = hs;
    lhs.add(iw_identity(W), LaurentInt::monomial(1));  // H_s + v
    HeckeElement rhs = hs;
    rhs.add(iw_identity(W), -LaurentInt::monomial(-1));  // H_s - v^{-1}
    if (!mult(H, lhs, rhs).is_zero()) return "quadratic relation fails for letter " + std::to_string(i);
    return std::nullopt;
  });
}

Sweep chk_assoc(const Ctx& c) {
  const auto& H = *c.fx.hecke;
  Rng rng(c.opts.seed ^ 0x5150u);
  std::vector<std::array<size_t, 3>> triples;
  for (int i = 0; i < 500; ++i)
    triples.push_back({rng.pick(c.ball6.size()), rng.pick(c.ball6.size()), rng.pick(c.ball6.size())});
  return sweep(triples.size(), c.opts.parallel, [&](size_t i) -> std::optional<std::string> {
    HeckeElement a = hecke_basis(c.ball6[triples[i][0]]);
    HeckeElement b = hecke_basis(c.ball6[triples[i][1]]);
    HeckeElement d = hecke_basis(c.ball6[triples[i][2]]);
    if (!(mult(H, mult(H, a, b), d) == mult(H, a, mult(H, b, d))))
      return "associativity fails on triple " + std::to_string(i);
    return std::nullopt;
  });
}

Sweep chk_bar(const Ctx& c) {
  const auto& H = *c.fx.hecke;
  Rng rng(c.opts.seed ^ 0xbaabu);
  std::vector<std::pair<size_t, size_t>> pairs;
  for (int i = 0; i < 100; ++i) pairs.emplace_back(rng.pick(c.ball6.size()), rng.pick(c.ball6.size()));
  return sweep(pairs.size(), c.opts.parallel, [&](size_t i) -> std::optional<std::string> {
    HeckeElement a = hecke_basis(c.ball6[pairs[i].first]);
    HeckeElement b = hecke_basis(c.ball6[pairs[i].second]);
    if (!(bar(H, bar(H, a)) == a)) return "bar is not an involution";
    if (!(bar(H, mult(H, a, b)) == mult(H, bar(H, a), bar(H, b))))
      return "bar is not multiplicative";
    return std::nullopt;
  });
}

Sweep chk_kl(const Ctx& c) {
  const auto& W = c.fx.weyl();
  const auto& H = *c.fx.hecke;
  return sweep(c.ball6.size(), c.opts.parallel, [&](size_t i) -> std::optional<std::string> {
    const IWElement& w = c.ball6[i];
    HeckeElement k = kl_basis(H, w);
    if (!(bar(H, k) == k)) return "canonical element is not self-dual";
    auto it = k.terms.find(w);
    if (it == k.terms.end() || !(it->second == laurent_one()))
      return "leading coefficient is not 1";
    for (const auto& [z, p] : k.terms) {
      if (z == w) continue;
      if (!p.in_v_times_poly()) return "correction term not in v.Z[v]";
      if (!bruhat_leq(W, z, w)) return "support escapes the Bruhat interval";
    }
    return std::nullopt;
  });
}

Sweep chk_bernstein_choice(const Ctx& c) {
  const auto& e = c.fx.weyl().ech;
  std::vector<Vec> box = yi_box(e, 2);
  return sweep(box.size(), c.opts.parallel, [&](size_t i) -> std::optional<std::string> {
    bernstein(*c.fx.hecke, box[i], /*crosscheck=*/true);
    return std::nullopt;
  });
}

Sweep chk_bernstein_additive(const Ctx& c) {
  const auto& H = *c.fx.hecke;
  const auto& e = c.fx.weyl().ech;
  std::vector<Vec> box = yi_box(e, 2);
  Rng rng(c.opts.seed ^ 0xadd1u);
  std::vector<std::pair<size_t, size_t>> pairs;
  for (int i = 0; i < 60; ++i) pairs.emplace_back(rng.pick(box.size()), rng.pick(box.size()));
  return sweep(pairs.size(), c.opts.parallel, [&](size_t i) -> std::optional<std::string> {
    const Vec& mu = box[pairs[i].first];
    const Vec& la = box[pairs[i].second];
    HeckeElement tm = bernstein(H, mu), tl = bernstein(H, la);
    HeckeElement ts = bernstein(H, e.normalized(add(mu, la)));
    if (!(mult(H, tm, tl) == ts))
      return "theta(mu) theta(la) != theta(mu+la) at mu = " + show(mu) + ", la = " + show(la);
    if (!(mult(H, tl, tm) == ts))
      return "translation elements do not commute at mu = " + show(mu) + ", la = " + show(la);
    return std::nullopt;
  });
}

Sweep chk_m(const Ctx& c) {
  const auto& W = c.fx.weyl();
  const auto& H = *c.fx.hecke;
  const auto& e = W.ech;
  std::vector<Vec> box = yi_box(e, 2);
  Rng rng(c.opts.seed ^ 0x3333u);
  std::vector<std::pair<size_t, size_t>> pairs;
  for (int i = 0; i < 100; ++i) pairs.emplace_back(rng.pick(c.ball6.size()), rng.pick(c.ball6.size()));
  size_t total = pairs.size() + box.size() + c.ball6.size();
  return sweep(total, c.opts.parallel, [&](size_t k) -> std::optional<std::string> {
    if (k < pairs.size()) {
      HeckeElement a = hecke_basis(c.ball6[pairs[k].first]);
      HeckeElement b = hecke_basis(c.ball6[pairs[k].second]);
      if (!(m_morphism(H, mult(H, a, b)) == m_morphism(H, a) * m_morphism(H, b)))
        return "m is not multiplicative";
      return std::nullopt;
    }
    k -= pairs.size();
    if (k < box.size()) {
      LaurentInt got = m_morphism(H, bernstein(H, box[k]));
      LaurentInt want = LaurentInt::monomial(static_cast<int>(e.pair_two_rho(box[k])));
      if (!(got == want)) return "m(theta) != v^<mu,2rho> at mu = " + show(box[k]);
      return std::nullopt;
    }
    k -= box.size();
    const IWElement& w = c.ball6[k];
    LaurentInt got = m_morphism(H, kl_basis(H, w));
    LaurentInt want = length(W, w) == 0 ? laurent_one() : LaurentInt();
    if (!(got == want)) return "m on the canonical basis differs from [length = 0]";
    return std::nullopt;
  });
}

Sweep chk_asph_assoc(const Ctx& c) {
  const auto& H = *c.fx.hecke;
  Rng rng(c.opts.seed ^ 0xa5a5u);
  std::vector<std::pair<size_t, size_t>> pairs;
  for (int i = 0; i < 60; ++i) pairs.emplace_back(rng.pick(c.ball6.size()), rng.pick(c.ball6.size()));
  return sweep(pairs.size(), c.opts.parallel, [&](size_t i) -> std::optional<std::string> {
    HeckeElement a = hecke_basis(c.ball6[pairs[i].first]);
    HeckeElement b = hecke_basis(c.ball6[pairs[i].second]);
    if (i % 3 == 0) a.add(iw_identity(c.fx.weyl()), LaurentInt::monomial(1));
    AntisphericalElement n0 = asph_unit(c.fx.weyl());
    if (!(asph_act(H, asph_act(H, n0, a), b) == asph_act(H, n0, mult(H, a, b))))
      return "module action is not associative on pair " + std::to_string(i);
    return std::nullopt;
  });
}

Sweep chk_asph_kl(const Ctx& c) {
  const auto& W = c.fx.weyl();
  const auto& H = *c.fx.hecke;
  return sweep(c.ball6.size(), c.opts.parallel, [&](size_t i) -> std::optional<std::string> {
    const IWElement& w = c.ball6[i];
    bool minimal = (min_coset_rep(W, w) == w);
    AntisphericalElement r = asph_act(H, asph_unit(W), kl_basis(H, w));
    if (minimal && r.is_zero()) return "averaging killed a minimal canonical element";
    if (!minimal && !r.is_zero()) return "averaging kept a non-minimal canonical element";
    return std::nullopt;
  });
}

Sweep chk_asph_standard(const Ctx& c) {
  const auto& W = c.fx.weyl();
  const auto& H = *c.fx.hecke;
  return sweep(c.ball6.size(), c.opts.parallel, [&](size_t i) -> std::optional<std::string> {
    const IWElement& w = c.ball6[i];
    IWElement x = min_coset_rep(W, w);
    IWElement u = multiply(W, w, invert(W, x));
    if (!is_zero(u.lambda)) return "coset factor is not finite";
    Int lu = length(W, u);
    if (lu + length(W, x) != length(W, w)) return "coset factorization is not length-additive";
    AntisphericalElement want;
    want.add(coset_index(W, x), LaurentInt::monomial(static_cast<int>(lu), lu % 2 == 0 ? 1 : -1));
    AntisphericalElement got = asph_act(H, asph_unit(W), hecke_basis(w));
    if (!(got == want)) return "standard basis action differs from (-v)^k N_{min}";
    return std::nullopt;
  });
}

// --------------------------------------------------------------------- rep

Sweep chk_freudenthal_dim(const Ctx& c) {
  const auto& v = c.fx.dual;
  Rng rng(c.opts.seed ^ 0xd1du);
  std::vector<Vec> doms;
  {
    // dominant weights of bounded height
    std::vector<Vec> all;
    Vec w(v.dim, 0);
    std::function<void(int)> rec = [&](int pos) {
      if (pos == v.dim) {
        if (v.is_dominant(w) && v.height(w) <= 16) all.push_back(w);
        return;
      }
      for (Int x = -8; x <= 8; ++x) {
        w[pos] = x;
        rec(pos + 1);
      }
    };
    rec(0);
    for (int i = 0; i < 30 && !all.empty(); ++i) doms.push_back(all[rng.pick(all.size())]);
  }
  return sweep(doms.size(), c.opts.parallel, [&](size_t i) -> std::optional<std::string> {
    Character ch = weight_multiplicities(v, doms[i]);
    if (BigInt(character_dim(ch)) != weyl_dim(v, doms[i]))
      return "character dimension differs from the product formula at " + show(doms[i]);
    return std::nullopt;
  });
}

Sweep chk_weyl_invariant(const Ctx& c) {
  const auto& v = c.fx.dual;
  Rng rng(c.opts.seed ^ 0x1771u);
  std::vector<Vec> doms;
  for (const Vec& w : c.small_reps)
    if (doms.size() < 10) doms.push_back(w);
  long long cases = 0;
  std::string bad;
  for (const Vec& la : doms) {
    Character ch = weight_multiplicities(v, la);
    std::vector<Vec> support;
    for (const auto& [w, m] : ch) support.push_back(w);
    for (int i = 0; i < 20 && !support.empty(); ++i) {
      const Vec& mu = support[rng.pick(support.size())];
      const Mat& g = v.weyl[rng.pick(v.weyl.size())];
      ++cases;
      Vec gmu = mul(g, mu);
      auto a = ch.find(mu), b = ch.find(gmu);
      Int ma = a == ch.end() ? 0 : a->second;
      Int mb = b == ch.end() ? 0 : b->second;
      if (ma != mb) {
        bad = "multiplicity not constant on the orbit of " + show(mu);
        break;
      }
    }
    if (!bad.empty()) break;
  }
  Sweep out;
  out.cases = cases;
  if (!bad.empty()) {
    out.pass = false;
    out.counterexample = bad;
  }
  return out;
}

Sweep chk_decompose_roundtrip(const Ctx& c) {
  const auto& v = c.fx.folded;
  const auto& e = c.fx.weyl().ech;
  Rng rng(c.opts.seed ^ 0x0deCu);
  // small dominant highest weights downstairs
  std::vector<Vec> doms;
  for (const Vec& w : yi_box(e, 2))
    if (e.is_dominant(w)) doms.push_back(w);
  return sweep(20, c.opts.parallel, [&](size_t i) -> std::optional<std::string> {
    Rng local(c.opts.seed ^ (0x1000u + i));
    std::vector<std::pair<Vec, Int>> pieces;
    int k = 1 + static_cast<int>(local.pick(4));
    for (int j = 0; j < k; ++j) pieces.emplace_back(doms[local.pick(doms.size())], 1 + local.range(0, 2));
    std::sort(pieces.begin(), pieces.end());
    // merge duplicates
    std::vector<std::pair<Vec, Int>> merged;
    for (const auto& p : pieces) {
      if (!merged.empty() && merged.back().first == p.first)
        merged.back().second += p.second;
      else
        merged.push_back(p);
    }
    Character total;
    for (const auto& [la, m] : merged)
      for (const auto& [w, mm] : weight_multiplicities(v, la)) total[w] += m * mm;
    auto back = decompose(v, total);
    if (!(back == merged)) return "peeling did not reproduce the input combination";
    return std::nullopt;
  });
}

Sweep chk_restriction_top(const Ctx& c) {
  const auto& e = c.fx.weyl().ech;
  // dominant weights upstairs whose class has translation length <= 10
  std::vector<Vec> lams;
  {
    Vec w(c.fx.datum.rank, 0);
    std::function<void(int)> rec = [&](int pos) {
      if (pos == c.fx.datum.rank) {
        if (c.fx.dual.is_dominant(w) && e.pair_two_rho(e.project(w)) <= 10) lams.push_back(w);
        return;
      }
      for (Int x = -6; x <= 6; ++x) {
        w[pos] = x;
        rec(pos + 1);
      }
    };
    rec(0);
  }
  return sweep(lams.size(), c.opts.parallel, [&](size_t i) -> std::optional<std::string> {
    const Vec& la = lams[i];
    Vec bar = e.project(la);
    if (!e.is_dominant(bar)) return "projection of a dominant weight is not dominant";
    Character res = restrict_character(e, weight_multiplicities(c.fx.dual, la));
    auto pieces = decompose(c.fx.folded, res);
    bool top_found = false;
    for (const auto& [mu, m] : pieces) {
      if (mu == bar) {
        if (m != 1) return "top piece multiplicity is " + std::to_string(m) + " at " + show(la);
        top_found = true;
      } else {
        if (!e.coroot_leq(mu, bar))
          return "summand " + show(mu) + " is not strictly below the projected weight";
      }
    }
    if (!top_found) return "projected highest weight missing from the decomposition";
    return std::nullopt;
  });
}

Sweep chk_bruhat_weights(const Ctx& c) {
  const auto& W = c.fx.weyl();
  const auto& e = W.ech;
  // mu ranges over all classes whose dominant representative has length <= 8
  std::vector<Vec> mus;
  for (const Vec& v : yi_box(e, 9))
    if (e.pair_two_rho(e.dominant_rep(v)) <= 8) mus.push_back(v);
  std::vector<Character> chars(c.dominants8.size());
  for (size_t i = 0; i < c.dominants8.size(); ++i)
    chars[i] = weight_multiplicities(c.fx.folded, c.dominants8[i]);
  size_t n = mus.size();
  return sweep(n * c.dominants8.size(), c.opts.parallel, [&](size_t k) -> std::optional<std::string> {
    const Vec& mu = mus[k % n];
    size_t li = k / n;
    const Vec& la = c.dominants8[li];
    bool nonzero = chars[li].count(mu) > 0;
    bool br = quotient_bruhat_leq(W, mu, la);
    if (nonzero != br)
      return "weight nonvanishing and quotient order disagree at mu = " + show(mu) +
             ", la = " + show(la);
    return std::nullopt;
  });
}

Sweep chk_minimal_classified(const Ctx& c) {
  const auto& e = c.fx.weyl().ech;
  std::vector<Vec> doms;
  for (const Vec& v : yi_box(e, 6))
    if (e.is_dominant(v) && e.pair_two_rho(v) <= 12) doms.push_back(v);
  std::atomic<int> marked{0};
  Sweep s = sweep(doms.size(), c.opts.parallel, [&](size_t i) -> std::optional<std::string> {
    WeightClass cl = classify(e, doms[i]);
    bool zero = is_zero(doms[i]);
    if (zero != (cl == WeightClass::zero)) return "zero weight misclassified";
    if (cl == WeightClass::minuscule || cl == WeightClass::quasi_minuscule) ++marked;
    return std::nullopt;
  });
  if (s.pass && !e.eff.empty() && marked.load() == 0) {
    s.pass = false;
    s.counterexample = "no minimal dominant weight was classified";
  }
  return s;
}

// ------------------------------------------------------------------- decat

Sweep chk_central_commutes(const Ctx& c) {
  const auto& H = *c.fx.hecke;
  const auto& W = c.fx.weyl();
  int bound = std::min(4, c.opts.max_length);
  // spanning tree of the ball in the Coxeter part; elements of the full ball
  // are tree nodes times a length-zero element
  struct Node {
    IWElement w;
    int right_parent = -1, right_letter = -1;  // w = parent . s
    int left_parent = -1, left_letter = -1;    // w = s . parent
  };
  std::vector<Node> nodes;
  {
    std::unordered_map<IWElement, int, IWHash> index;
    nodes.push_back({iw_identity(W), -1, -1, -1, -1});
    index.emplace(nodes[0].w, 0);
    for (size_t head = 0; head < nodes.size(); ++head) {
      IWElement cur = nodes[head].w;  // copy: nodes reallocates below
      Int lw = length(W, cur);
      if (lw >= bound) continue;
      for (int s = 0; s < W.num_simple(); ++s) {
        IWElement ws = multiply(W, cur, W.simple[s]);
        if (length(W, ws) != lw + 1) continue;
        if (index.count(ws)) continue;
        Node n;
        n.w = ws;
        n.right_parent = static_cast<int>(head);
        n.right_letter = s;
        for (int t = 0; t < W.num_simple() && n.left_parent < 0; ++t) {
          IWElement tw = multiply(W, W.simple[t], ws);
          if (length(W, tw) == lw) {
            auto it = index.find(tw);
            if (it != index.end()) {
              n.left_parent = it->second;
              n.left_letter = t;
            }
          }
        }
        if (n.left_parent < 0) continue;
        index.emplace(ws, static_cast<int>(nodes.size()));
        nodes.push_back(std::move(n));
      }
    }
  }
  Sweep out;
  out.cases = static_cast<long long>(c.small_reps.size() * nodes.size() * W.omega.size());
  std::atomic<bool> failed{false};
  std::string bad;
  std::mutex mu;
#pragma omp parallel for schedule(dynamic) if (c.opts.parallel)
  for (long long i = 0; i < static_cast<long long>(c.small_reps.size()); ++i) {
    if (failed.load()) continue;
    auto record = [&](const std::string& msg) {
      std::lock_guard<std::mutex> lk(mu);
      failed = true;
      bad = msg;
    };
    try {
      CentralClass z = central_class(c.fx, c.small_reps[i]);
      std::string at = "central class at " + show(c.small_reps[i]);
      // right family along the tree, shared by every length-zero translate
      std::vector<HeckeElement> right(nodes.size());
      right[0] = z.element;
      for (size_t k = 1; k < nodes.size() && !failed.load(); ++k)
        right[k] = mult_simple_right(H, right[nodes[k].right_parent], nodes[k].right_letter);
      // one left family per length-zero element om: H_b (H_om z); comparing
      // it with (z H_b) H_om checks commutation with H_{b om}
      for (size_t om = 0; om < W.omega.size() && !failed.load(); ++om) {
        std::vector<HeckeElement> left(nodes.size());
        left[0] = mult_omega_left(H, static_cast<int>(om), z.element);
        if (!(left[0] == mult_omega_right(H, z.element, static_cast<int>(om)))) {
          record(at + " fails to commute with a length-zero element");
          break;
        }
        for (size_t k = 0; k < nodes.size(); ++k) {
          if (k > 0) left[k] = mult_simple_left(H, nodes[k].left_letter, left[nodes[k].left_parent]);
          if (!(mult_omega_right(H, right[k], static_cast<int>(om)) == left[k])) {
            record(at + " fails to commute");
            break;
          }
        }
      }
    } catch (const std::exception& e) {
      record(std::string("exception: ") + e.what());
    }
  }
  if (failed.load()) {
    out.pass = false;
    out.counterexample = bad;
  }
  return out;
}

Sweep chk_central_tensor(const Ctx& c) {
  const auto& H = *c.fx.hecke;
  std::vector<Vec> small;
  for (const Vec& la : c.small_reps)
    if (weyl_dim(c.fx.dual, la) <= 30 && small.size() < 4) small.push_back(la);
  std::vector<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < small.size(); ++i)
    for (size_t j = 0; j < small.size(); ++j) pairs.emplace_back(i, j);
  return sweep(pairs.size(), c.opts.parallel, [&](size_t k) -> std::optional<std::string> {
    CentralClass a = central_class(c.fx, small[pairs[k].first]);
    CentralClass b = central_class(c.fx, small[pairs[k].second]);
    // the restricted character of a tensor product is the product of the
    // restricted characters
    Character prod;
    for (const auto& [x, mx] : a.restricted)
      for (const auto& [y, my] : b.restricted)
        prod[c.fx.weyl().ech.normalized(add(x, y))] += mx * my;
    HeckeElement want;
    for (const auto& [mu, m] : prod) {
      HeckeElement th = bernstein(H, mu);
      for (const auto& [w, cc] : th.terms) want.add(w, cc * LaurentInt(BigInt(m)));
    }
    if (!(mult(H, a.element, b.element) == want))
      return "product of central classes differs from the tensor character";
    return std::nullopt;
  });
}

Sweep chk_weight_poly(const Ctx& c) {
  return sweep(c.small_reps.size(), c.opts.parallel, [&](size_t i) -> std::optional<std::string> {
    WeightPolynomial p = weight_poly(c.fx, c.small_reps[i]);  // asserts both routes agree
    if (p.poly.eval_at_one() != weyl_dim(c.fx.dual, c.small_reps[i]))
      return "weight polynomial at v = 1 is not the dimension, at " + show(c.small_reps[i]);
    return std::nullopt;
  });
}

Sweep chk_kernel_dim(const Ctx& c) {
  return sweep(c.quasi_minuscule_lifts.size(), c.opts.parallel,
               [&](size_t i) -> std::optional<std::string> {
                 const Vec& la = c.quasi_minuscule_lifts[i];
                 Character res =
                     restrict_character(c.fx.weyl().ech, weight_multiplicities(c.fx.dual, la));
                 Vec zero(c.fx.weyl().ech.coord_len(), 0);
                 Int res0 = res.count(zero) ? res.at(zero) : 0;
                 if (ker_dim(c.fx, la) != res0)
                   return "kernel dimension differs from the zero weight multiplicity at " +
                          show(la);
                 return std::nullopt;
               });
}

Sweep chk_parity_check(const Ctx& c) {
  return sweep(c.quasi_minuscule_lifts.size(), c.opts.parallel,
               [&](size_t i) -> std::optional<std::string> {
                 if (!check_parity(c.fx, c.quasi_minuscule_lifts[i]))
                   return "a nonzero restricted weight pairs oddly with 2rho at " +
                          show(c.quasi_minuscule_lifts[i]);
                 return std::nullopt;
               });
}

Sweep chk_euler(const Ctx& c) {
  return sweep(c.small_reps.size(), c.opts.parallel, [&](size_t i) -> std::optional<std::string> {
    euler_vector(c.fx, c.small_reps[i]);  // asserts magnitudes internally
    return std::nullopt;
  });
}

std::vector<CheckDef> make_checks() {
  std::vector<CheckDef> defs;
  auto add = [&](const char* id, const char* law, CheckFn fn) {
    defs.push_back({id, law, std::move(fn)});
  };
  add("fold.identity_refold", "folding by the identity automorphism reproduces the input system",
      chk_identity_refold);
  add("fold.axioms", "folded roots and coroots satisfy the root-system axioms", chk_axioms);
  add("fold.two_rho_lift",
      "<proj(lambda), 2rho> = <lambda, 2rho> for every lift of the class", chk_two_rho_lift);
  add("order.coroot_poset", "the coroot order is reflexive, antisymmetric and transitive",
      chk_coroot_poset);
  add("order.projection_monotone",
      "the projection to coinvariants preserves the coroot order", chk_projection_monotone);
  add("weyl.length_bfs", "the closed-form length equals the Cayley-graph distance",
      chk_length_bfs);
  add("weyl.length_subadditive",
      "length(ab) <= length(a) + length(b), with equality under length-zero translates",
      chk_length_subadditive);
  add("weyl.translation_length",
      "length(t^lambda) = <lambda, 2rho> for dominant lambda", chk_translation_length);
  add("weyl.translation_additive",
      "length(t^(mu+lambda)) = length(t^mu) + length(t^lambda) for dominant mu, lambda",
      chk_translation_additive);
  add("weyl.bruhat_coroot",
      "t^mu <= t^lambda in Bruhat order iff mu <= lambda in coroot order, on dominants",
      chk_bruhat_coroot);
  add("weyl.bruhat_subword", "the descent recursion matches the subword-property oracle",
      chk_bruhat_subword);
  add("weyl.min_coset",
      "the minimal coset representative lies in the orbit and is strictly shortest",
      chk_min_coset);
  add("weyl.double_quotient",
      "the double-coset quotient order equals the coroot order on dominants",
      chk_double_quotient);
  add("hecke.quadratic", "(H_s + v)(H_s - v^-1) = 0 for every simple reflection", chk_quadratic);
  add("hecke.assoc", "basis multiplication is associative", chk_assoc);
  add("hecke.bar", "bar is an involutive ring endomorphism", chk_bar);
  add("hecke.kl",
      "canonical basis elements are self-dual with corrections in v.Z[v], supported below w",
      chk_kl);
  add("hecke.bernstein_choice",
      "translation elements are independent of the chosen dominant weight",
      chk_bernstein_choice);
  add("hecke.bernstein_additive",
      "theta(mu) theta(lambda) = theta(mu+lambda) = theta(lambda) theta(mu)",
      chk_bernstein_additive);
  add("hecke.m",
      "m is an algebra map with m(theta_mu) = v^<mu,2rho> and m(canonical w) = [length(w)=0]",
      chk_m);
  add("hecke.asph_assoc", "the antispherical right action is a module action", chk_asph_assoc);
  add("hecke.asph_kl",
      "averaging kills the canonical element exactly off the minimal coset representatives",
      chk_asph_kl);
  add("hecke.asph_standard",
      "N_0 . H_w = (-v)^length(u) N_{min} where w = u . min with u finite", chk_asph_standard);
  add("rep.freudenthal_dim", "character dimensions equal the Weyl product formula",
      chk_freudenthal_dim);
  add("rep.weyl_invariant", "weight multiplicities are constant on Weyl orbits",
      chk_weyl_invariant);
  add("rep.decompose_roundtrip",
      "peeling recovers arbitrary nonnegative combinations of irreducible characters",
      chk_decompose_roundtrip);
  add("rep.restriction_top",
      "the restricted module contains its projected highest weight once, all else strictly below",
      chk_restriction_top);
  add("rep.bruhat_weights",
      "mu <= lambda in quotient Bruhat order iff the mu weight space downstairs is nonzero",
      chk_bruhat_weights);
  add("rep.minimal_classified",
      "minimal nonzero dominants split into minuscule and quasi-minuscule",
      chk_minimal_classified);
  add("central.commutes", "central classes commute with every basis element",
      chk_central_commutes);
  add("central.tensor",
      "products of central classes expand by the product of restricted characters",
      chk_central_tensor);
  add("central.weight_poly",
      "the Hecke route and the direct weight sum give the same polynomial, with value dim at v=1",
      chk_weight_poly);
  add("central.kernel_dim",
      "the v^0 + v^1 coefficient count equals the zero weight multiplicity, quasi-minuscule case",
      chk_kernel_dim);
  add("central.parity", "nonzero restricted weights pair evenly with 2rho, quasi-minuscule case",
      chk_parity_check);
  add("central.euler",
      "antispherical averaging of a central class has the restricted multiplicities as magnitudes",
      chk_euler);
  std::sort(defs.begin(), defs.end(), [](const CheckDef& a, const CheckDef& b) { return a.id < b.id; });
  return defs;
}

}  // namespace

std::vector<CheckResult> verify_fixture(const Fixture& fx, const VerifyOptions& opts) {
#ifdef _OPENMP
  if (opts.threads > 0) omp_set_num_threads(opts.threads);
#endif
  Ctx ctx{fx, opts};
  ctx.ball = enumerate_ball(fx.weyl(), opts.max_length);
  for (const auto& [w, d] : ctx.ball) {
    if (d <= std::min(6, opts.max_length)) ctx.ball6.push_back(w);
    if (d <= std::min(4, opts.max_length)) ctx.ball4.push_back(w);
  }
  ctx.dominants10 = dominant_classes_up_to_length(fx, 10);
  ctx.dominants8 = dominant_classes_up_to_length(fx, 8);
  ctx.small_reps = small_dominants(fx, opts.dim_bound);
  // lifts of the quasi-minuscule classes: smallest dual dominant projecting
  // onto each
  {
    std::vector<Vec> quasi;
    for (const Vec& v : dominant_classes_up_to_length(fx, 12))
      if (classify(fx.weyl().ech, v) == WeightClass::quasi_minuscule) quasi.push_back(v);
    std::vector<Vec> lift_pool = small_dominants(fx, 4 * opts.dim_bound);
    for (const Vec& q : quasi) {
      for (const Vec& la : lift_pool) {
        if (fx.weyl().ech.project(la) == q) {
          ctx.quasi_minuscule_lifts.push_back(la);
          break;
        }
      }
    }
  }

  std::vector<CheckResult> out;
  for (const auto& def : make_checks()) {
    if (!opts.only.empty() &&
        std::find(opts.only.begin(), opts.only.end(), def.id) == opts.only.end())
      continue;
    auto t0 = std::chrono::steady_clock::now();
    Sweep s;
    try {
      s = def.fn(ctx);
    } catch (const std::exception& e) {
      s.pass = false;
      s.counterexample = std::string("setup failed: ") + e.what();
    }
    auto t1 = std::chrono::steady_clock::now();
    CheckResult r;
    r.check_id = def.id;
    r.law = def.law;
    r.pass = s.pass;
    r.counterexample = s.counterexample;
    r.cases = s.cases;
    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    out.push_back(std::move(r));
  }
  return out;
}

bool all_pass(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

std::string report_json(const std::string& fixture_name, const VerifyOptions& opts,
                        const std::vector<CheckResult>& results) {
  nlohmann::json j;
  j["fixture"] = fixture_name;
  j["max_length"] = opts.max_length;
  j["seed"] = opts.seed;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : results) {
    nlohmann::json c;
    c["check_id"] = r.check_id;
    c["paper_ref"] = r.law;
    c["status"] = r.pass ? "pass" : "fail";
    if (!r.pass) c["counterexample"] = r.counterexample;
    c["cases"] = r.cases;
    c["elapsed_ms"] = r.elapsed_ms;
    arr.push_back(std::move(c));
  }
  j["checks"] = std::move(arr);
  return j.dump(2);
}

std::string report_tsv(const std::vector<CheckResult>& results) {
  std::ostringstream os;
  os << "check_id\tstatus\tcases\telapsed_ms\tcounterexample\n";
  for (const auto& r : results)
    os << r.check_id << "\t" << (r.pass ? "pass" : "fail") << "\t" << r.cases << "\t"
       << r.elapsed_ms << "\t" << r.counterexample << "\n";
  return os.str();
}

std::string report_plain(const std::vector<CheckResult>& results) {
  std::ostringstream os;
  for (const auto& r : results) {
    os << (r.pass ? "PASS" : "FAIL") << "  " << r.check_id << "  (" << r.cases << " cases)";
    if (!r.pass) os << "\n      " << r.counterexample;
    os << "\n";
  }
  return os.str();
}

}  // namespace taw
