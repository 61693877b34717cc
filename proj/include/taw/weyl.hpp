// The Iwahori-Weyl group W = Y_I x| W_fin as a quasi-Coxeter group: the
// finite Weyl group is enumerated once into multiplication tables, lengths
// come from the closed-form count of separating affine walls, and the
// length-zero subgroup Omega is found by bounded search over coset
// representatives of Y_I modulo the coroot lattice of the eff system.
#pragma once

#include <memory>
#include <mutex>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "taw/echelonnage.hpp"

namespace taw {

struct FinWeylTable {
  int num_gen = 0;
  std::vector<Mat> act;                  // full Y_I coordinate action, torsion rows reduced
  std::vector<std::vector<int>> right;   // right[w][s] = w * s
  std::vector<std::vector<int>> left;    // left[w][s]  = s * w
  std::vector<int> inv;
  std::vector<std::vector<int>> word;    // shortlex-least reduced word
  std::vector<int> len;
  std::vector<std::vector<int>> mul;     // full multiplication table
  int size() const { return static_cast<int>(act.size()); }
};

struct IWElement {
  Vec lambda;  // Y_I coordinates, normalized
  int fin = 0; // id in the FinWeylTable

  bool operator==(const IWElement& o) const { return fin == o.fin && lambda == o.lambda; }
  bool operator<(const IWElement& o) const {
    if (lambda != o.lambda) return lambda < o.lambda;
    return fin < o.fin;
  }
};

struct IWHash {
  size_t operator()(const IWElement& w) const {
    size_t h = VecHash{}(w.lambda);
    return h ^ (static_cast<size_t>(w.fin) * 0x9e3779b97f4a7c15ull + 0x517cc1b727220a95ull);
  }
};

struct WeylCaches;

struct WeylContext {
  EchelonnageData ech;
  FinWeylTable fin;
  std::vector<IWElement> simple;  // affine reflections first (one per component), then finite
  int num_affine = 0;
  std::vector<IWElement> omega;   // omega[0] = identity
  // class of lambda in Y_I modulo the eff coroot lattice; omega elements are
  // indexed by these classes
  Mat omega_u;
  Vec omega_d;
  // per finite element and eff root: sign of u^{-1}(root), +1/-1
  std::vector<std::vector<int>> inv_sign;
  std::unique_ptr<WeylCaches> caches;

  WeylContext();
  ~WeylContext();
  WeylContext(WeylContext&&) noexcept;
  WeylContext& operator=(WeylContext&&) noexcept;
  WeylContext(const WeylContext&) = delete;

  int num_simple() const { return static_cast<int>(simple.size()); }
};

WeylContext build_weyl_context(EchelonnageData ech, int omega_search_bound = 8);

IWElement iw_identity(const WeylContext& W);
IWElement iw_translation(const WeylContext& W, Vec lambda);
IWElement iw_finite(const WeylContext& W, int fin_id);
IWElement multiply(const WeylContext& W, const IWElement& a, const IWElement& b);
IWElement invert(const WeylContext& W, const IWElement& a);
Int length(const WeylContext& W, const IWElement& w);

// index of the class of lambda in Y_I / (eff coroot lattice); matches the
// position of the corresponding element in W.omega
int omega_class(const WeylContext& W, const Vec& lambda);

struct ReducedWord {
  std::vector<int> letters;  // indices into W.simple
  int omega = 0;             // index into W.omega
};
ReducedWord reduced_word(const WeylContext& W, const IWElement& w);
IWElement from_word(const WeylContext& W, const ReducedWord& rw);

bool bruhat_leq(const WeylContext& W, const IWElement& v, const IWElement& w);
// reference implementation by the subword property: the full lower interval
// of w as a set
std::unordered_set<IWElement, IWHash> bruhat_interval_below(const WeylContext& W,
                                                            const IWElement& w);

IWElement min_coset_rep(const WeylContext& W, IWElement w);
// invariant of the left coset W_fin w, an element of Y_I
Vec coset_index(const WeylContext& W, const IWElement& w);
// minimal-length representative of the coset indexed by lambda
IWElement min_rep_of_class(const WeylContext& W, const Vec& lambda);

bool quotient_bruhat_leq(const WeylContext& W, const Vec& mu, const Vec& la);
bool double_quotient_bruhat_leq(const WeylContext& W, const Vec& mu, const Vec& la);

// all elements of length <= max_len with their Cayley-graph distances from
// the identity (lengths by construction, independent of the closed form)
std::vector<std::pair<IWElement, Int>> enumerate_ball(const WeylContext& W, int max_len);

}  // namespace taw
