// Based root data with a perfect pairing between character and cocharacter
// lattices, plus pinned (diagram) automorphisms. Root/coroot sets are kept as
// matched pairs; reflection closure generates them from the simple system.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "taw/intlin.hpp"

namespace taw {

struct RootPair {
  Vec root;    // element of X
  Vec coroot;  // element of Y
};

struct BasedRootDatum {
  std::string name;
  int rank = 0;
  Mat pairing;                  // <x, y> = x^T pairing y
  std::vector<RootPair> roots;  // all roots, positives first
  int num_positive = 0;
  std::vector<int> simple;  // indices into roots, each positive
  Vec two_rho;              // sum of positive roots, in X

  Int pair(const Vec& x, const Vec& y) const { return dot(x, mul(pairing, y)); }
  // s_alpha on X and the dual reflection on Y
  Vec reflect_x(int root_index, const Vec& x) const;
  Vec reflect_y(int root_index, const Vec& y) const;
  int find_root(const Vec& r) const;  // -1 if absent
  bool is_positive_root_index(int i) const { return i >= 0 && i < num_positive; }
  // Cartan matrix a[i][j] = <alpha_i, alpha_j_check> over the simple system
  Mat cartan() const;
};

struct PinnedAutomorphism {
  int order = 1;
  Mat lattice_map;           // action on X
  std::vector<int> simple_root_permutation;
  Mat dual_map;              // induced action on Y (inverse transpose), filled by validate
};

// Build a datum from simple roots/coroots; remaining roots by reflection
// closure. Throws validation_error on any axiom failure.
BasedRootDatum make_root_datum(const std::string& name, int rank, const Mat& pairing,
                               const std::vector<Vec>& simple_roots,
                               const std::vector<Vec>& simple_coroots,
                               std::optional<std::vector<RootPair>> roots = std::nullopt);

// Checks all automorphism invariants against the datum and fills dual_map.
void validate_automorphism(const BasedRootDatum& datum, PinnedAutomorphism& aut);

PinnedAutomorphism identity_automorphism(const BasedRootDatum& datum);

// Named presets: A1, A1-adj, A2, A2-fold, A4-fold, C2.
struct DatumWithAutomorphism {
  BasedRootDatum datum;
  PinnedAutomorphism aut;
};
DatumWithAutomorphism preset(const std::string& name);
std::vector<std::string> preset_names();

// JSON config ingestion (schema documented in README).
DatumWithAutomorphism load_config_json(const std::string& json_text);

// Finite-type Cartan matrix classification, e.g. "A2", "B2", "G2" or a
// product like "A1xA1". Throws validation_error on non-finite-type input.
std::string cartan_type_name(const Mat& cartan);

}  // namespace taw
