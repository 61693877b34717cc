// Folding a based root datum along a pinned automorphism: the coinvariant
// lattice Y_I = Y/(1-sigma)Y presented by Smith normal form, and the
// echelonnage root system on it, built from sigma-orbits of roots. The orbit
// sum is doubled when the orbit contains two roots adding to a root, which
// makes the system non-reduced (type BC) in that case. Walls and lengths of
// the affine Weyl group are governed by the subsystem of non-multipliable
// roots, kept in `eff`.
#pragma once

#include <string>
#include <vector>

#include "taw/root_datum.hpp"

namespace taw {

struct EchRoot {
  Vec functional;  // on the free coordinates of Y_I
  Vec coroot;      // full Y_I coordinates (free, then torsion)
  bool doubled = false;
  bool multipliable = false;  // 2*functional is also a root
  bool divisible = false;     // functional/2 is also a root
};

struct EchelonnageData {
  int y_rank = 0;
  int free_rank = 0;
  std::vector<Int> torsion;  // cyclic moduli, each > 1
  Mat projection;            // Y coords -> Y_I coords, (free_rank + t) x y_rank
  Vec two_rho_functional;    // <.,2rho> through any lift, on free coords

  std::vector<EchRoot> positive;        // positive echelonnage roots
  std::vector<int> eff;                 // indices of non-multipliable positives
  std::vector<int> eff_simple;          // indices of the simple roots of the eff system
  std::vector<int> component_of_simple; // component id per entry of eff_simple
  int num_components = 0;
  std::vector<int> highest_eff;         // per component: index of its highest eff root

  int coord_len() const { return free_rank + static_cast<int>(torsion.size()); }
  void normalize(Vec& v) const;
  Vec normalized(Vec v) const {
    normalize(v);
    return v;
  }
  Vec project(const Vec& y) const;
  Int eval(const Vec& functional, const Vec& v) const;
  Int pair_two_rho(const Vec& v) const;

  bool is_dominant(const Vec& v) const;
  Vec dominant_rep(Vec v) const;
  Vec reflect(int positive_index, const Vec& v) const;
  // mu <= la in the coroot order: la - mu is an N-combination of positive
  // echelonnage coroots
  bool coroot_leq(const Vec& mu, const Vec& la) const;
  // dominance order: compares dominant representatives
  bool dominance_leq(const Vec& mu, const Vec& la) const;

  // +index / ~index for a positive / negative eff functional, throws otherwise
  int find_eff_functional(const Vec& f) const;

  bool non_reduced() const;
  Mat eff_cartan() const;               // over eff_simple
  std::string reduced_type() const;     // Cartan type of the eff system
  std::string fixed_group_type() const; // Cartan type on the coroot side
};

EchelonnageData fold(const BasedRootDatum& datum, const PinnedAutomorphism& aut);

// Reflection-stability and pairing axioms over the full signed root set;
// throws validation_error with a description on failure.
void check_root_system_axioms(const EchelonnageData& e);

}  // namespace taw
