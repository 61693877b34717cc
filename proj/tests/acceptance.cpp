// Acceptance suite: the contract the library ships against. Each criterion
// prints a single PASS/FAIL line; the process exits nonzero if any fails.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <vector>

#include "taw/fixture.hpp"
#include "taw/verify.hpp"

using namespace taw;

namespace {

struct Criterion {
  int number;
  std::string description;
  std::function<bool(std::string&)> run;
};

std::map<std::string, Fixture>& fixtures() {
  static std::map<std::string, Fixture> cache;
  return cache;
}

const Fixture& fx(const std::string& name) {
  auto it = fixtures().find(name);
  if (it == fixtures().end()) it = fixtures().emplace(name, make_fixture(name)).first;
  return it->second;
}

const std::vector<std::string> kAllFixtures = {"A1", "A1-adj", "A2", "A2-fold", "A4-fold", "C2"};

bool run_checks(const std::vector<std::string>& fixture_names,
                const std::vector<std::string>& check_ids, const VerifyOptions& base,
                std::string& detail) {
  for (const auto& name : fixture_names) {
    VerifyOptions opts = base;
    opts.only = check_ids;
    auto results = verify_fixture(fx(name), opts);
    if (results.size() != check_ids.size()) {
      detail = name + ": a requested check is missing from the registry";
      return false;
    }
    for (const auto& r : results) {
      if (!r.pass) {
        detail = name + " " + r.check_id + ": " + r.counterexample;
        return false;
      }
    }
  }
  return true;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria;

  criteria.push_back({1, "folding types: the rank-4 flip gives B2, the rank-2 flip gives rank 1",
                      [](std::string& detail) {
                        const auto& a4 = fx("A4-fold").weyl().ech;
                        if (a4.fixed_group_type() != "B2") {
                          detail = "rank-4 flip fixed group type is " + a4.fixed_group_type();
                          return false;
                        }
                        if (a4.reduced_type() != "B2") {
                          detail = "rank-4 flip echelonnage type is " + a4.reduced_type();
                          return false;
                        }
                        const auto& a2 = fx("A2-fold").weyl().ech;
                        if (a2.free_rank != 1) {
                          detail = "rank-2 flip coinvariants have rank " +
                                   std::to_string(a2.free_rank);
                          return false;
                        }
                        return true;
                      }});

  criteria.push_back(
      {2, "closed-form length equals graph distance for every element of length <= 8",
       [](std::string& detail) {
         for (const std::string name : {"A1", "A1-adj", "A2", "A2-fold"}) {
           const auto& W = fx(name).weyl();
           auto ball = enumerate_ball(W, 8);
           for (const auto& [w, d] : ball) {
             if (length(W, w) != d) {
               detail = name + ": closed form disagrees with the graph";
               return false;
             }
           }
           if (ball.size() < 17) {
             detail = name + ": ball is implausibly small";
             return false;
           }
         }
         return true;
       }});

  criteria.push_back(
      {3, "translation lengths add and Bruhat order equals coroot order on dominants, length <= 10",
       [](std::string& detail) {
         VerifyOptions opts;
         opts.max_length = 10;
         opts.dim_bound = 1;  // irrelevant checks stay small
         return run_checks(kAllFixtures,
                           {"weyl.translation_additive", "weyl.bruhat_coroot",
                            "weyl.double_quotient", "weyl.translation_length"},
                           opts, detail);
       }});

  criteria.push_back(
      {4, "quadratic relation, associativity, bar, canonical basis, translation elements",
       [](std::string& detail) {
         VerifyOptions opts;
         opts.max_length = 6;
         opts.dim_bound = 1;
         return run_checks(kAllFixtures,
                           {"hecke.quadratic", "hecke.assoc", "hecke.bar", "hecke.kl",
                            "hecke.bernstein_choice", "hecke.bernstein_additive"},
                           opts, detail);
       }});

  criteria.push_back({5, "m(theta_mu) = v^<mu,2rho> and m(canonical w) = [length(w) = 0]",
                      [](std::string& detail) {
                        VerifyOptions opts;
                        opts.max_length = 6;
                        opts.dim_bound = 1;
                        return run_checks(kAllFixtures, {"hecke.m"}, opts, detail);
                      }});

  criteria.push_back({6, "antispherical averaging kills exactly the non-minimal canonical elements",
                      [](std::string& detail) {
                        VerifyOptions opts;
                        opts.max_length = 6;
                        opts.dim_bound = 1;
                        return run_checks(kAllFixtures, {"hecke.asph_kl", "hecke.asph_standard"},
                                          opts, detail);
                      }});

  criteria.push_back(
      {7, "central classes: dual-route weight polynomials, Euler magnitudes, commutation",
       [](std::string& detail) {
         VerifyOptions opts;
         opts.max_length = 4;
         opts.dim_bound = 200;
         return run_checks(kAllFixtures,
                           {"central.weight_poly", "central.euler", "central.commutes"}, opts,
                           detail);
       }});

  criteria.push_back(
      {8, "quasi-minuscule package: even pairings and kernel dimension",
       [](std::string& detail) {
         VerifyOptions opts;
         opts.max_length = 4;
         opts.dim_bound = 200;
         return run_checks(kAllFixtures, {"central.parity", "central.kernel_dim"}, opts, detail);
       }});

  criteria.push_back(
      {9, "restricted modules: projected top weight once, all other summands strictly below",
       [](std::string& detail) {
         VerifyOptions opts;
         opts.max_length = 10;
         opts.dim_bound = 1;
         return run_checks({"A2-fold", "A4-fold"}, {"rep.restriction_top"}, opts, detail);
       }});

  criteria.push_back(
      {10, "quotient Bruhat order equals weight nonvanishing, all dominant pairs of length <= 8",
       [](std::string& detail) {
         VerifyOptions opts;
         opts.max_length = 8;
         opts.dim_bound = 1;
         return run_checks(kAllFixtures, {"rep.bruhat_weights"}, opts, detail);
       }});

  int failures = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    auto t1 = std::chrono::steady_clock::now();
    long long ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    std::cout << "CRITERION " << c.number << " " << (ok ? "PASS" : "FAIL") << " ("
              << ms << " ms): " << c.description << "\n";
    if (!ok) {
      std::cout << "    " << detail << "\n";
      ++failures;
    }
  }
  if (failures) {
    std::cout << failures << " criteria failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
