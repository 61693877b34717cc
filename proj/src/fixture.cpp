#include "taw/fixture.hpp"

#include <algorithm>
#include <functional>

namespace taw {

Fixture make_fixture(DatumWithAutomorphism input) {
  Fixture fx;
  fx.name = input.datum.name;
  fx.datum = std::move(input.datum);
  fx.aut = std::move(input.aut);
  EchelonnageData ech = fold(fx.datum, fx.aut);
  fx.weyl_ptr = std::make_unique<WeylContext>(build_weyl_context(std::move(ech)));
  fx.hecke = std::make_unique<HeckeContext>(*fx.weyl_ptr);
  fx.dual = dual_group_view(fx.datum);
  fx.folded = folded_view(fx.weyl_ptr->ech);
  return fx;
}

Fixture make_fixture(const std::string& preset_name) { return make_fixture(preset(preset_name)); }

namespace {

// Visit integer vectors shell by shell in the max norm (free part only);
// torsion coordinates range over their full cyclic order. Stops after two
// consecutive shells produce no accepted vector.
void sweep_shells(int free_len, const std::vector<Int>& torsion, Int hard_cap,
                  const std::function<bool(const Vec&)>& accept) {
  int dry = 0;
  for (Int bound = 0; bound <= hard_cap && dry < 2; ++bound) {
    bool any = false;
    Vec v(free_len + static_cast<int>(torsion.size()), 0);
    std::function<void(int, bool)> rec = [&](int pos, bool on_shell) {
      if (pos == static_cast<int>(v.size())) {
        if ((on_shell || bound == 0) && accept(v)) any = true;
        return;
      }
      if (pos < free_len) {
        for (Int c = -bound; c <= bound; ++c) {
          v[pos] = c;
          rec(pos + 1, on_shell || std::abs(c) == bound);
        }
      } else {
        for (Int c = 0; c < torsion[pos - free_len]; ++c) {
          v[pos] = c;
          rec(pos + 1, on_shell);
        }
      }
    };
    rec(0, free_len == 0);
    dry = any ? 0 : dry + 1;
  }
}

}  // namespace

std::vector<Vec> small_dominants(const Fixture& fx, Int dim_bound) {
  const RootSystemView& v = fx.dual;
  std::vector<Vec> out;
  sweep_shells(v.dim, {}, 4 * dim_bound + 8, [&](const Vec& cand) {
    if (!v.is_dominant(cand)) return false;
    if (weyl_dim(v, cand) > BigInt(dim_bound)) return false;
    out.push_back(cand);
    return true;
  });
  std::sort(out.begin(), out.end(), [&](const Vec& a, const Vec& b) {
    BigInt da = weyl_dim(v, a), db = weyl_dim(v, b);
    if (da != db) return da < db;
    return a < b;
  });
  return out;
}

std::vector<Vec> dominant_classes_up_to_length(const Fixture& fx, Int bound) {
  const EchelonnageData& e = fx.weyl().ech;
  std::vector<Vec> out;
  sweep_shells(e.free_rank, e.torsion, 2 * bound + 8, [&](const Vec& cand) {
    if (!e.is_dominant(cand)) return false;
    if (length(fx.weyl(), iw_translation(fx.weyl(), cand)) > bound) return false;
    out.push_back(cand);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace taw
