// The Iwahori-Hecke algebra of the Iwahori-Weyl group over Z[v, v^-1]:
// standard basis arithmetic, the bar involution, the Kazhdan-Lusztig basis,
// Bernstein translation elements, the multiplicity morphism, and the right
// antispherical module.
#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>

#include "taw/laurent.hpp"
#include "taw/weyl.hpp"

namespace taw {

struct HeckeElement {
  std::unordered_map<IWElement, LaurentInt, IWHash> terms;

  bool is_zero() const { return terms.empty(); }
  bool operator==(const HeckeElement& o) const { return terms == o.terms; }
  void add(const IWElement& w, const LaurentInt& c);
  // terms[w] += sign * v^shift * c, dropping the slot if it cancels
  void axpy_term(const IWElement& w, const LaurentInt& c, int shift, int sign);
  HeckeElement& operator+=(const HeckeElement& o);
  HeckeElement& operator-=(const HeckeElement& o);
  HeckeElement operator*(const LaurentInt& c) const;
};

struct HeckeCaches;

// Shares the group context and owns the memo tables for KL elements,
// translation inverses and Bernstein elements. The tables fill idempotently
// under a lock.
struct HeckeContext {
  const WeylContext& W;
  std::unique_ptr<HeckeCaches> caches;

  explicit HeckeContext(const WeylContext& w);
  ~HeckeContext();
};

HeckeElement hecke_basis(const IWElement& w);  // H_w
HeckeElement hecke_one(const WeylContext& W);

HeckeElement mult(const HeckeContext& H, const HeckeElement& a, const HeckeElement& b);
// one-letter products, the building blocks of mult
HeckeElement mult_simple_right(const HeckeContext& H, const HeckeElement& a, int simple_index);
HeckeElement mult_simple_left(const HeckeContext& H, int simple_index, const HeckeElement& a);
HeckeElement mult_omega_right(const HeckeContext& H, const HeckeElement& a, int omega_index);
HeckeElement mult_omega_left(const HeckeContext& H, int omega_index, const HeckeElement& a);
// H_w^{-1} for a single basis element (closed form through the quadratic
// relation); general elements are not invertible here
HeckeElement invert_basis(const HeckeContext& H, const IWElement& w);
HeckeElement bar(const HeckeContext& H, const HeckeElement& a);
HeckeElement kl_basis(const HeckeContext& H, const IWElement& w);
// theta_mu = (-1)^{<mu,2rho>} H_{t^la} H_{t^{la-mu}}^{-1} for la dominant
// with la-mu dominant and mu below la in the dominance order
HeckeElement bernstein(const HeckeContext& H, const Vec& mu, bool crosscheck = false);
LaurentInt m_morphism(const HeckeContext& H, const HeckeElement& a);
std::map<IWElement, BigInt> specialize_v1(const HeckeElement& a);

// Right antispherical module sign (x)_{H_fin} H with basis indexed by Y_I
// classes of minimal coset representatives.
struct AntisphericalElement {
  std::map<Vec, LaurentInt> terms;

  bool is_zero() const { return terms.empty(); }
  bool operator==(const AntisphericalElement& o) const { return terms == o.terms; }
  void add(const Vec& la, const LaurentInt& c);
};

AntisphericalElement asph_unit(const WeylContext& W);  // N_0
AntisphericalElement asph_act(const HeckeContext& H, const AntisphericalElement& n,
                              const HeckeElement& a);

}  // namespace taw
