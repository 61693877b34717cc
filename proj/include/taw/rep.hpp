// Weight multiplicities of irreducible highest-weight modules over the dual
// group (Freudenthal recursion, checked against the Weyl dimension formula),
// restriction along the folding, decomposition over the folded system, and
// the (quasi-)minuscule classification.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "taw/echelonnage.hpp"
#include "taw/laurent.hpp"
#include "taw/weyl.hpp"

namespace taw {

// A character is a finite weight -> multiplicity map; weights are coordinate
// vectors of the ambient lattice (Y for the dual group, Y_I for the folded
// side).
using Character = std::map<Vec, Int>;

Int character_dim(const Character& c);

// The data the character routines need from one ambient reductive group:
// roots as lattice vectors, coroots as functionals on the same coordinates.
struct RootSystemView {
  int dim = 0;
  std::vector<Vec> pos_roots;
  std::vector<Vec> pos_coroots;  // functionals, paired with pos_roots
  std::vector<int> simples;      // indices into pos_roots
  Vec two_rho;                   // sum of positive roots
  std::vector<Mat> weyl;         // the full reflection group, as matrices

  bool is_dominant(const Vec& w) const;
  Vec dominant_rep(Vec w) const;
  Int height(const Vec& w) const;  // pairing with the sum of positive coroots
};

// Dual-group side: roots of the dual group are the coroots of the datum.
RootSystemView dual_group_view(const BasedRootDatum& d);
// Fixed-group side: roots are the non-multipliable echelonnage coroots
// (identity component only; torsion coordinates ride along untouched).
RootSystemView folded_view(const EchelonnageData& e);

Character weight_multiplicities(const RootSystemView& v, const Vec& lambda);
BigInt weyl_dim(const RootSystemView& v, const Vec& lambda);

Character restrict_character(const EchelonnageData& e, const Character& c);

// highest-weight peeling; throws validation_error if c is not a genuine
// character of the view
std::vector<std::pair<Vec, Int>> decompose(const RootSystemView& v, const Character& c);

enum class WeightClass { zero, minuscule, quasi_minuscule, neither };
WeightClass classify(const EchelonnageData& e, const Vec& mu);
std::string weight_class_name(WeightClass c);

// the quotient-Bruhat comparison the folded weight multiplicities must match
bool bruhat_weight_equivalence(const WeylContext& W, const Vec& mu, const Vec& la);

}  // namespace taw
