// A fixture bundles everything the commands operate on: the input datum and
// automorphism, the folded combinatorics, the group context with its caches,
// and the two representation-theoretic views.
#pragma once

#include <memory>
#include <string>

#include "taw/decat.hpp"
#include "taw/hecke.hpp"
#include "taw/rep.hpp"
#include "taw/root_datum.hpp"
#include "taw/weyl.hpp"

namespace taw {

struct Fixture {
  std::string name;
  BasedRootDatum datum;
  PinnedAutomorphism aut;
  // heap-allocated so its address survives moves of the fixture; the Hecke
  // context keeps a reference into it
  std::unique_ptr<WeylContext> weyl_ptr;
  std::unique_ptr<HeckeContext> hecke;
  RootSystemView dual;    // the dual group upstairs
  RootSystemView folded;  // the fixed group downstairs

  const WeylContext& weyl() const { return *weyl_ptr; }

  Fixture(const Fixture&) = delete;
  Fixture(Fixture&&) = default;
  Fixture& operator=(Fixture&&) = default;
  Fixture() = default;
};

Fixture make_fixture(const std::string& preset_name);
Fixture make_fixture(DatumWithAutomorphism input);

// dominant weights of the dual group whose irreducible dimension is at most
// the bound, in increasing dimension order
std::vector<Vec> small_dominants(const Fixture& fx, Int dim_bound);

// dominant Y_I weights la with length(t^la) <= bound
std::vector<Vec> dominant_classes_up_to_length(const Fixture& fx, Int bound);

}  // namespace taw
