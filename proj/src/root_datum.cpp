#include "taw/root_datum.hpp"

#include <algorithm>
#include <map>
#include <nlohmann/json.hpp>
#include <set>
#include <unordered_map>

namespace taw {

Vec BasedRootDatum::reflect_x(int root_index, const Vec& x) const {
  const RootPair& rp = roots[root_index];
  return sub(x, scale(pair(x, rp.coroot), rp.root));
}

Vec BasedRootDatum::reflect_y(int root_index, const Vec& y) const {
  const RootPair& rp = roots[root_index];
  return sub(y, scale(pair(rp.root, y), rp.coroot));
}

int BasedRootDatum::find_root(const Vec& r) const {
  for (size_t i = 0; i < roots.size(); ++i)
    if (roots[i].root == r) return static_cast<int>(i);
  return -1;
}

Mat BasedRootDatum::cartan() const {
  int n = static_cast<int>(simple.size());
  Mat c(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c(i, j) = pair(roots[simple[i]].root, roots[simple[j]].coroot);
  return c;
}

namespace {

// positive = first nonzero coefficient over the simple-root basis is > 0;
// every root must be +-(nonnegative combination of simples)
bool positivity_sign(const BasedRootDatum& d, const Vec& root, bool& ok) {
  Mat m(d.rank, static_cast<int>(d.simple.size()));
  for (int j = 0; j < static_cast<int>(d.simple.size()); ++j)
    for (int i = 0; i < d.rank; ++i) m(i, j) = d.roots[d.simple[j]].root[i];
  Vec coeffs;
  if (!solve(m, root, coeffs)) {
    ok = false;
    return false;
  }
  bool has_pos = false, has_neg = false;
  for (Int c : coeffs) {
    if (c > 0) has_pos = true;
    if (c < 0) has_neg = true;
  }
  ok = !(has_pos && has_neg) && (has_pos || has_neg);
  return has_pos;
}

void validate_datum(const BasedRootDatum& d) {
  Int pd = det(d.pairing);
  if (pd != 1 && pd != -1) throw validation_error(d.name + ": pairing matrix is not unimodular");
  for (const auto& rp : d.roots) {
    if (d.pair(rp.root, rp.coroot) != 2)
      throw validation_error(d.name + ": <alpha, alpha_check> != 2 for some root");
  }
  // reflections permute the root set, compatibly on the coroot side
  for (size_t s = 0; s < d.roots.size(); ++s) {
    for (size_t r = 0; r < d.roots.size(); ++r) {
      Vec rx = d.reflect_x(static_cast<int>(s), d.roots[r].root);
      int k = d.find_root(rx);
      if (k < 0) throw validation_error(d.name + ": reflection does not preserve the root set");
      Vec ry = d.reflect_y(static_cast<int>(s), d.roots[r].coroot);
      if (d.roots[k].coroot != ry)
        throw validation_error(d.name + ": root/coroot bijection is not reflection-equivariant");
    }
  }
  // positives are exactly the first num_positive entries, and come in +- pairs
  for (size_t r = 0; r < d.roots.size(); ++r) {
    bool ok = false;
    bool pos = positivity_sign(d, d.roots[r].root, ok);
    if (!ok) throw validation_error(d.name + ": root has mixed signs over the simple basis");
    if (pos != d.is_positive_root_index(static_cast<int>(r)))
      throw validation_error(d.name + ": root ordering does not match positivity");
  }
  for (int r = 0; r < d.num_positive; ++r) {
    int k = d.find_root(neg(d.roots[r].root));
    if (k < 0 || d.roots[k].coroot != neg(d.roots[r].coroot))
      throw validation_error(d.name + ": roots do not come in matched +- pairs");
  }
  // two_rho really is the sum of positives
  Vec s(d.rank, 0);
  for (int r = 0; r < d.num_positive; ++r) s = add(s, d.roots[r].root);
  if (s != d.two_rho) throw validation_error(d.name + ": two_rho mismatch");
  cartan_type_name(d.cartan());  // throws on non-finite type
}

}  // namespace

BasedRootDatum make_root_datum(const std::string& name, int rank, const Mat& pairing,
                               const std::vector<Vec>& simple_roots,
                               const std::vector<Vec>& simple_coroots,
                               std::optional<std::vector<RootPair>> roots) {
  if (pairing.rows != rank || pairing.cols != rank)
    throw validation_error(name + ": pairing matrix shape mismatch");
  if (simple_roots.size() != simple_coroots.size())
    throw validation_error(name + ": simple root/coroot count mismatch");
  BasedRootDatum d;
  d.name = name;
  d.rank = rank;
  d.pairing = pairing;

  std::vector<RootPair> all;
  if (roots) {
    all = *roots;
  } else {
    // reflection closure of the simple pairs
    auto seen = [&all](const Vec& r) {
      for (const auto& rp : all)
        if (rp.root == r) return true;
      return false;
    };
    for (size_t i = 0; i < simple_roots.size(); ++i) {
      all.push_back({simple_roots[i], simple_coroots[i]});
      all.push_back({neg(simple_roots[i]), neg(simple_coroots[i])});
    }
    bool grew = true;
    while (grew) {
      grew = false;
      size_t n = all.size();
      for (size_t s = 0; s < simple_roots.size(); ++s) {
        for (size_t r = 0; r < n; ++r) {
          Vec nx = sub(all[r].root, scale(dot(all[r].root, mul(pairing, simple_coroots[s])), simple_roots[s]));
          Vec ny = sub(all[r].coroot, scale(dot(simple_roots[s], mul(pairing, all[r].coroot)), simple_coroots[s]));
          if (!seen(nx)) {
            all.push_back({nx, ny});
            grew = true;
          }
        }
      }
      if (all.size() > 4096) throw validation_error(name + ": reflection closure does not terminate");
    }
  }

  // order: positives first (positivity over the simple basis), then negatives
  d.simple.clear();
  d.roots.clear();
  // temporary datum to evaluate positivity
  BasedRootDatum tmp = d;
  tmp.roots = all;
  for (size_t i = 0; i < simple_roots.size(); ++i) {
    int idx = -1;
    for (size_t r = 0; r < all.size(); ++r)
      if (all[r].root == simple_roots[i]) idx = static_cast<int>(r);
    if (idx < 0) throw validation_error(name + ": simple root missing from root set");
    tmp.simple.push_back(idx);
  }
  std::vector<RootPair> pos, negs;
  for (const auto& rp : all) {
    bool ok = false;
    bool p = positivity_sign(tmp, rp.root, ok);
    if (!ok) throw validation_error(name + ": root is not a signed combination of simples");
    (p ? pos : negs).push_back(rp);
  }
  auto lex = [](const RootPair& a, const RootPair& b) { return a.root < b.root; };
  std::sort(pos.begin(), pos.end(), lex);
  std::sort(negs.begin(), negs.end(), lex);
  d.roots = pos;
  d.roots.insert(d.roots.end(), negs.begin(), negs.end());
  d.num_positive = static_cast<int>(pos.size());
  for (const auto& sr : simple_roots) {
    int idx = d.find_root(sr);
    if (idx < 0) throw validation_error(name + ": simple root lost in ordering");
    d.simple.push_back(idx);
  }
  d.two_rho = Vec(rank, 0);
  for (int r = 0; r < d.num_positive; ++r) d.two_rho = add(d.two_rho, d.roots[r].root);

  validate_datum(d);
  return d;
}

void validate_automorphism(const BasedRootDatum& datum, PinnedAutomorphism& aut) {
  if (aut.order < 1) throw validation_error("automorphism order must be positive");
  if (aut.lattice_map.rows != datum.rank || aut.lattice_map.cols != datum.rank)
    throw validation_error("automorphism lattice_map shape mismatch");
  Mat p = Mat::identity(datum.rank);
  for (int i = 0; i < aut.order; ++i) p = mul(p, aut.lattice_map);
  if (!(p == Mat::identity(datum.rank)))
    throw validation_error("lattice_map^order is not the identity");
  // dual action on Y preserving the pairing: sigma_Y = pairing^{-1} (sigma_X^T)^{-1} pairing
  Mat st_inv = unimodular_inverse(aut.lattice_map.transpose());
  Mat p_inv = unimodular_inverse(datum.pairing);
  aut.dual_map = mul(mul(p_inv, st_inv), datum.pairing);
  // permutes roots; acts on the simple system by the stated permutation
  if (static_cast<int>(aut.simple_root_permutation.size()) != static_cast<int>(datum.simple.size()))
    throw validation_error("simple_root_permutation size mismatch");
  for (size_t i = 0; i < datum.simple.size(); ++i) {
    Vec im = mul(aut.lattice_map, datum.roots[datum.simple[i]].root);
    int target = aut.simple_root_permutation[i];
    if (target < 0 || target >= static_cast<int>(datum.simple.size()))
      throw validation_error("simple_root_permutation out of range");
    if (im != datum.roots[datum.simple[target]].root)
      throw validation_error("automorphism does not permute simple roots as stated");
  }
  for (const auto& rp : datum.roots) {
    Vec im = mul(aut.lattice_map, rp.root);
    int k = datum.find_root(im);
    if (k < 0) throw validation_error("automorphism does not preserve the root set");
    if (!(mul(aut.dual_map, rp.coroot) == datum.roots[k].coroot))
      throw validation_error("automorphism is incompatible with the coroot bijection");
  }
  if (!(mul(aut.lattice_map, datum.two_rho) == datum.two_rho))
    throw validation_error("automorphism does not fix two_rho");
}

PinnedAutomorphism identity_automorphism(const BasedRootDatum& datum) {
  PinnedAutomorphism a;
  a.order = 1;
  a.lattice_map = Mat::identity(datum.rank);
  a.simple_root_permutation.resize(datum.simple.size());
  for (size_t i = 0; i < a.simple_root_permutation.size(); ++i)
    a.simple_root_permutation[i] = static_cast<int>(i);
  validate_automorphism(datum, a);
  return a;
}

namespace {

Mat from_rows(const std::vector<Vec>& rows) {
  Mat m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) m(i, j) = rows[i][j];
  return m;
}

// Type A_n Cartan matrix column convention: coroot of alpha_i expressed in the
// dual basis of the simple roots is the i-th column of the Cartan matrix.
std::vector<Vec> coroots_from_cartan(const Mat& cartan) {
  int n = cartan.rows;
  std::vector<Vec> cr(n, Vec(n, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) cr[i][k] = cartan(k, i);
  return cr;
}

Mat cartan_a(int n) {
  Mat c(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c(i, j) = (i == j) ? 2 : (std::abs(i - j) == 1 ? -1 : 0);
  return c;
}

DatumWithAutomorphism adjoint_a_with_flip(int n, const std::string& name) {
  // X = root lattice with the simple roots as basis, Y = coweight lattice
  // (dual basis), pairing = identity.
  Mat cartan = cartan_a(n);
  std::vector<Vec> sr(n, Vec(n, 0));
  for (int i = 0; i < n; ++i) sr[i][i] = 1;
  std::vector<Vec> scr = coroots_from_cartan(cartan);
  BasedRootDatum d = make_root_datum(name, n, Mat::identity(n), sr, scr);
  PinnedAutomorphism a;
  a.order = 2;
  a.lattice_map = Mat(n, n);
  for (int i = 0; i < n; ++i) a.lattice_map(n - 1 - i, i) = 1;
  a.simple_root_permutation.resize(n);
  for (int i = 0; i < n; ++i) a.simple_root_permutation[i] = n - 1 - i;
  validate_automorphism(d, a);
  return {d, a};
}

}  // namespace

DatumWithAutomorphism preset(const std::string& name) {
  if (name == "A1") {
    // simply connected: X = Z with alpha = 2, Y = Z alpha_check
    BasedRootDatum d = make_root_datum("A1", 1, Mat::identity(1), {{2}}, {{1}});
    return {d, identity_automorphism(d)};
  }
  if (name == "A1-adj") {
    // adjoint: X = Z alpha, Y = Z omega_check with alpha_check = 2 omega_check
    BasedRootDatum d = make_root_datum("A1-adj", 1, Mat::identity(1), {{1}}, {{2}});
    return {d, identity_automorphism(d)};
  }
  if (name == "A2") {
    // simply connected: X = weight lattice (fundamental-weight basis),
    // Y = coroot lattice (dual basis)
    std::vector<Vec> sr = {{2, -1}, {-1, 2}};
    std::vector<Vec> scr = {{1, 0}, {0, 1}};
    BasedRootDatum d = make_root_datum("A2", 2, Mat::identity(2), sr, scr);
    return {d, identity_automorphism(d)};
  }
  if (name == "A2-fold") return adjoint_a_with_flip(2, "A2-fold");
  if (name == "A4-fold") return adjoint_a_with_flip(4, "A4-fold");
  if (name == "C2") {
    // simply connected Sp4: X = Z^2 (e basis), Y = Z^2 (dual f basis)
    std::vector<Vec> sr = {{1, -1}, {0, 2}};
    std::vector<Vec> scr = {{1, -1}, {0, 1}};
    BasedRootDatum d = make_root_datum("C2", 2, Mat::identity(2), sr, scr);
    return {d, identity_automorphism(d)};
  }
  throw validation_error("unknown preset: " + name);
}

std::vector<std::string> preset_names() {
  return {"A1", "A1-adj", "A2", "A2-fold", "A4-fold", "C2"};
}

DatumWithAutomorphism load_config_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const std::exception& e) {
    throw validation_error(std::string("config is not valid JSON: ") + e.what());
  }
  auto get_vec = [](const nlohmann::json& v) {
    Vec out;
    for (const auto& e : v) out.push_back(e.get<Int>());
    return out;
  };
  auto get_mat = [&](const nlohmann::json& v) {
    std::vector<Vec> rows;
    for (const auto& r : v) rows.push_back(get_vec(r));
    return from_rows(rows);
  };
  try {
    std::string name = j.at("name").get<std::string>();
    int rank = j.at("rank").get<int>();
    Mat pairing = get_mat(j.at("pairing_matrix"));
    std::vector<Vec> sr, scr;
    for (const auto& r : j.at("simple_roots")) sr.push_back(get_vec(r));
    for (const auto& r : j.at("simple_coroots")) scr.push_back(get_vec(r));
    std::optional<std::vector<RootPair>> roots;
    if (j.contains("roots")) {
      std::vector<RootPair> rp;
      for (const auto& r : j.at("roots")) rp.push_back({get_vec(r.at("root")), get_vec(r.at("coroot"))});
      roots = rp;
    }
    BasedRootDatum d = make_root_datum(name, rank, pairing, sr, scr, roots);
    PinnedAutomorphism a;
    if (j.contains("automorphism")) {
      const auto& ja = j.at("automorphism");
      a.order = ja.at("order").get<int>();
      a.lattice_map = get_mat(ja.at("lattice_map"));
      for (const auto& e : ja.at("permutation")) a.simple_root_permutation.push_back(e.get<int>());
      validate_automorphism(d, a);
    } else {
      a = identity_automorphism(d);
    }
    return {d, a};
  } catch (const nlohmann::json::exception& e) {
    throw validation_error(std::string("config schema error: ") + e.what());
  }
}

namespace {

struct Component {
  std::vector<int> nodes;
};

std::string classify_component(const Mat& c, const std::vector<int>& nodes) {
  int n = static_cast<int>(nodes.size());
  auto A = [&](int i, int j) { return c(nodes[i], nodes[j]); };
  if (n == 1) return "A1";
  // adjacency with bond multiplicities
  std::vector<std::vector<int>> adj(n);
  int triple = 0, dbl = 0;
  std::pair<int, int> dbl_edge{-1, -1};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Int m = A(i, j) * A(j, i);
      if (m == 0) continue;
      if (m > 3) throw validation_error("Cartan matrix is not finite type (bond too large)");
      adj[i].push_back(j);
      adj[j].push_back(i);
      if (m == 3) ++triple;
      if (m == 2) {
        ++dbl;
        dbl_edge = {i, j};
      }
    }
  int edges = 0;
  for (int i = 0; i < n; ++i) edges += static_cast<int>(adj[i].size());
  edges /= 2;
  if (edges != n - 1) throw validation_error("Cartan matrix is not finite type (not a tree)");
  if (triple) {
    if (n == 2 && triple == 1 && !dbl) return "G2";
    throw validation_error("Cartan matrix is not finite type (triple bond)");
  }
  std::vector<int> deg(n);
  int max_deg = 0, branch = -1;
  for (int i = 0; i < n; ++i) {
    deg[i] = static_cast<int>(adj[i].size());
    if (deg[i] > max_deg) {
      max_deg = deg[i];
      branch = i;
    }
  }
  if (dbl > 1) throw validation_error("Cartan matrix is not finite type (two double bonds)");
  if (dbl == 1) {
    if (max_deg > 2) throw validation_error("Cartan matrix is not finite type (branch + double bond)");
    // a path; orient it so the double bond sits at the far end
    auto [u, w] = dbl_edge;
    // endpoints of the path
    std::vector<int> ends;
    for (int i = 0; i < n; ++i)
      if (deg[i] == 1) ends.push_back(i);
    if (n == 2) return "B2";
    bool at_end = (deg[u] == 1 || deg[w] == 1);
    if (!at_end) {
      if (n == 4) return "F4";
      throw validation_error("Cartan matrix is not finite type (interior double bond)");
    }
    int tip = deg[u] == 1 ? u : w;
    int inner = tip == u ? w : u;
    // <long, short_check> = -2; the short root carries the -2 column
    bool tip_short = (A(inner, tip) == -2);
    return (tip_short ? "B" : "C") + std::to_string(n);
  }
  // simply laced
  if (max_deg <= 2) return "A" + std::to_string(n);
  if (max_deg > 3) throw validation_error("Cartan matrix is not finite type (degree > 3)");
  // one branch node of degree 3: arm lengths decide D vs E
  std::vector<int> arms;
  for (int start : adj[branch]) {
    int len = 1, prev = branch, cur = start;
    while (deg[cur] == 2) {
      int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = nxt;
      ++len;
    }
    if (deg[cur] == 3) throw validation_error("Cartan matrix is not finite type (two branch nodes)");
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms.size() != 3) throw validation_error("Cartan matrix is not finite type");
  if (arms[0] == 1 && arms[1] == 1) return "D" + std::to_string(n);
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return "E" + std::to_string(n);
  throw validation_error("Cartan matrix is not finite type (bad branch arms)");
}

}  // namespace

std::string cartan_type_name(const Mat& cartan) {
  int n = cartan.rows;
  if (cartan.cols != n) throw validation_error("Cartan matrix must be square");
  if (n == 0) return "0";
  for (int i = 0; i < n; ++i) {
    if (cartan(i, i) != 2) throw validation_error("Cartan diagonal entry != 2");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (cartan(i, j) > 0) throw validation_error("positive off-diagonal Cartan entry");
      if ((cartan(i, j) == 0) != (cartan(j, i) == 0))
        throw validation_error("asymmetric vanishing in Cartan matrix");
    }
  }
  // split into connected components
  std::vector<int> comp(n, -1);
  int nc = 0;
  for (int i = 0; i < n; ++i) {
    if (comp[i] >= 0) continue;
    std::vector<int> stack{i};
    comp[i] = nc;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w = 0; w < n; ++w)
        if (comp[w] < 0 && cartan(u, w) != 0) {
          comp[w] = nc;
          stack.push_back(w);
        }
    }
    ++nc;
  }
  std::vector<std::string> parts;
  for (int c = 0; c < nc; ++c) {
    std::vector<int> nodes;
    for (int i = 0; i < n; ++i)
      if (comp[i] == c) nodes.push_back(i);
    parts.push_back(classify_component(cartan, nodes));
  }
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += "x";
    out += parts[i];
  }
  return out;
}

}  // namespace taw
