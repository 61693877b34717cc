#include "taw/decat.hpp"

#include "taw/fixture.hpp"

namespace taw {

CentralClass central_class(const Fixture& fx, const Vec& lambda) {
  CentralClass out;
  out.source = lambda;
  Character upstairs = weight_multiplicities(fx.dual, lambda);
  out.restricted = restrict_character(fx.weyl().ech, upstairs);
  for (const auto& [mu, m] : out.restricted) {
    HeckeElement th = bernstein(*fx.hecke, mu);
    for (const auto& [w, c] : th.terms) out.element.add(w, c * LaurentInt(BigInt(m)));
  }
  return out;
}

WeightPolynomial weight_poly(const Fixture& fx, const Vec& lambda) {
  CentralClass z = central_class(fx, lambda);
  LaurentInt via_hecke = m_morphism(*fx.hecke, z.element);
  LaurentInt direct;
  for (const auto& [mu, m] : z.restricted)
    direct += LaurentInt::monomial(static_cast<int>(fx.weyl().ech.pair_two_rho(mu)), m);
  if (!(via_hecke == direct))
    throw validation_error("weight polynomial: Hecke route disagrees with the direct weight sum");
  return WeightPolynomial{direct};
}

Int ker_dim(const Fixture& fx, const Vec& lambda) {
  WeightPolynomial p = weight_poly(fx, lambda);
  return static_cast<Int>((p.poly.coeff(0) + p.poly.coeff(1)).convert_to<long long>());
}

bool check_parity(const Fixture& fx, const Vec& lambda) {
  const EchelonnageData& e = fx.weyl().ech;
  Vec bar = e.dominant_rep(e.project(lambda));
  if (classify(e, bar) != WeightClass::quasi_minuscule)
    throw validation_error("check_parity needs a quasi-minuscule weight");
  Character res = restrict_character(e, weight_multiplicities(fx.dual, lambda));
  for (const auto& [mu, m] : res) {
    if (is_zero(mu)) continue;
    if (e.pair_two_rho(mu) % 2 != 0) return false;
  }
  return true;
}

std::map<Vec, BigInt> euler_vector(const Fixture& fx, const Vec& lambda) {
  CentralClass z = central_class(fx, lambda);
  AntisphericalElement n = asph_act(*fx.hecke, asph_unit(fx.weyl()), z.element);
  std::map<Vec, BigInt> out;
  for (const auto& [mu, c] : n.terms) {
    BigInt k = c.eval_at_one();
    if (k != 0) out[mu] = k;
  }
  // magnitudes must match the restricted multiplicities
  for (const auto& [mu, m] : z.restricted) {
    auto it = out.find(mu);
    BigInt got = (it == out.end()) ? BigInt(0) : it->second;
    if (got < 0) got = -got;
    if (got != BigInt(m))
      throw validation_error("euler vector magnitude mismatch at a restricted weight");
  }
  for (const auto& [mu, k] : out) {
    if (z.restricted.find(mu) == z.restricted.end())
      throw validation_error("euler vector supported outside the restricted character");
  }
  return out;
}

}  // namespace taw
