#include "taw/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "taw/textio.hpp"
#include "taw/verify.hpp"

namespace taw {

namespace {

Fixture fixture_from_options(const std::string& preset_name, const std::string& config_path) {
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) throw validation_error("cannot open config file: " + config_path);
    std::stringstream ss;
    ss << in.rdbuf();
    return make_fixture(load_config_json(ss.str()));
  }
  return make_fixture(preset_name);
}

std::string fold_summary_plain(const Fixture& fx) {
  const EchelonnageData& e = fx.weyl().ech;
  std::ostringstream os;
  os << "fixture: " << fx.name << "\n";
  os << "input type: " << cartan_type_name(fx.datum.cartan()) << ", automorphism order "
     << fx.aut.order << "\n";
  os << "coinvariant lattice: Z^" << e.free_rank;
  for (Int t : e.torsion) os << " + Z/" << t;
  os << "\n";
  os << "echelonnage system: " << (e.eff_simple.empty() ? std::string("0") : e.reduced_type())
     << (e.non_reduced() ? " (non-reduced)" : "") << ", " << e.positive.size()
     << " positive roots\n";
  os << "fixed group type: " << (e.eff_simple.empty() ? std::string("0") : e.fixed_group_type())
     << "\n";
  os << "length-zero subgroup: order " << fx.weyl().omega.size() << "\n";
  // report whether the small dominant classes admit dominant lifts
  int with_lift = 0, total = 0;
  std::vector<Vec> classes = dominant_classes_up_to_length(fx, 6);
  std::vector<Vec> pool = small_dominants(fx, 800);
  for (const Vec& q : classes) {
    ++total;
    for (const Vec& la : pool)
      if (fx.weyl().ech.project(la) == q) {
        ++with_lift;
        break;
      }
  }
  os << "dominant classes with a dominant lift (length <= 6): " << with_lift << "/" << total
     << "\n";
  return os.str();
}

std::string fold_summary_json(const Fixture& fx) {
  const EchelonnageData& e = fx.weyl().ech;
  nlohmann::json j;
  j["fixture"] = fx.name;
  j["input_type"] = cartan_type_name(fx.datum.cartan());
  j["automorphism_order"] = fx.aut.order;
  j["free_rank"] = e.free_rank;
  j["torsion"] = e.torsion;
  j["reduced_type"] = e.eff_simple.empty() ? std::string("0") : e.reduced_type();
  j["non_reduced"] = e.non_reduced();
  j["fixed_group_type"] = e.eff_simple.empty() ? std::string("0") : e.fixed_group_type();
  j["num_positive"] = e.positive.size();
  j["num_eff"] = e.eff.size();
  j["omega_order"] = fx.weyl().omega.size();
  return j.dump(2);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact combinatorics of twisted affine Weyl groups and their Hecke algebras"};
  app.require_subcommand(1);

  std::string fixture_name = "A1", config_path;
  auto add_fixture_opts = [&](CLI::App* sub) {
    sub->add_option("--fixture", fixture_name, "preset name (see `preset list`)");
    sub->add_option("--config", config_path, "root datum config (JSON)");
  };

  // preset
  CLI::App* preset_cmd = app.add_subcommand("preset", "preset inventory");
  bool preset_list = false;
  CLI::App* preset_list_cmd = preset_cmd->add_subcommand("list", "list preset names");
  preset_list_cmd->callback([&] { preset_list = true; });

  // fold
  CLI::App* fold_cmd = app.add_subcommand("fold", "fold the datum and describe the result");
  add_fixture_opts(fold_cmd);
  bool fold_json = false;
  fold_cmd->add_flag("--json", fold_json, "emit JSON");

  // weyl
  CLI::App* weyl_cmd = app.add_subcommand("weyl", "Iwahori-Weyl group computations");
  add_fixture_opts(weyl_cmd);
  std::string weyl_op, weyl_a, weyl_b;
  weyl_cmd->add_option("op", weyl_op, "length|reduced|bruhat|mincoset")->required();
  weyl_cmd->add_option("elem", weyl_a, "group element, e.g. \"t[1] * s0 s1\"")->required();
  weyl_cmd->add_option("elem2", weyl_b, "second element (bruhat)");

  // hecke
  CLI::App* hecke_cmd = app.add_subcommand("hecke", "Hecke algebra computations");
  add_fixture_opts(hecke_cmd);
  std::string hecke_op, hecke_a, hecke_b;
  hecke_cmd->add_option("op", hecke_op, "mult|kl|bernstein|m")->required();
  hecke_cmd->add_option("arg", hecke_a, "element / weight / expression")->required();
  hecke_cmd->add_option("arg2", hecke_b, "second expression (mult)");

  // rep
  CLI::App* rep_cmd = app.add_subcommand("rep", "dual-group representation computations");
  add_fixture_opts(rep_cmd);
  std::string rep_op, rep_weight;
  rep_cmd->add_option("op", rep_op, "weights|restrict|decompose|classify")->required();
  rep_cmd->add_option("weight", rep_weight, "comma-separated weight coordinates")->required();

  // central
  CLI::App* central_cmd = app.add_subcommand("central", "central classes and their invariants");
  add_fixture_opts(central_cmd);
  std::string central_op, central_weight;
  central_cmd->add_option("op", central_op, "class|poly|kerdim|euler")->required();
  central_cmd->add_option("weight", central_weight, "dominant weight upstairs")->required();

  // verify
  CLI::App* verify_cmd = app.add_subcommand("verify", "run the verification suite");
  add_fixture_opts(verify_cmd);
  VerifyOptions vopts;
  bool verify_json = false, verify_tsv = false, serial = false;
  verify_cmd->add_option("--max-length", vopts.max_length, "length bound for the sweeps");
  verify_cmd->add_option("--dim-bound", vopts.dim_bound, "dimension bound for central classes");
  verify_cmd->add_option("--seed", vopts.seed, "seed for the randomized checks");
  verify_cmd->add_option("--threads", vopts.threads, "worker threads (0 = default)");
  verify_cmd->add_flag("--serial", serial, "run the reference serial sweeps");
  verify_cmd->add_option("--only", vopts.only, "run only the named checks");
  verify_cmd->add_flag("--json", verify_json, "emit the JSON report");
  verify_cmd->add_flag("--tsv", verify_tsv, "emit the TSV report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::stringstream ss;
    ss << app.help();
    out << ss.str();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (preset_cmd->parsed()) {
      if (!preset_list) {
        err << "usage: preset list\n";
        return 2;
      }
      for (const auto& n : preset_names()) out << n << "\n";
      return 0;
    }

    if (fold_cmd->parsed()) {
      Fixture fx = fixture_from_options(fixture_name, config_path);
      out << (fold_json ? fold_summary_json(fx) + "\n" : fold_summary_plain(fx));
      return 0;
    }

    if (weyl_cmd->parsed()) {
      Fixture fx = fixture_from_options(fixture_name, config_path);
      IWElement a = parse_element(fx.weyl(), weyl_a);
      if (weyl_op == "length") {
        out << length(fx.weyl(), a) << "\n";
      } else if (weyl_op == "reduced") {
        ReducedWord rw = reduced_word(fx.weyl(), a);
        out << "[";
        for (size_t i = 0; i < rw.letters.size(); ++i) out << (i ? " " : "") << rw.letters[i];
        out << "]";
        if (rw.omega != 0) out << " w" << rw.omega;
        out << "\n";
      } else if (weyl_op == "bruhat") {
        if (weyl_b.empty()) {
          err << "bruhat needs two elements\n";
          return 2;
        }
        IWElement b = parse_element(fx.weyl(), weyl_b);
        out << (bruhat_leq(fx.weyl(), a, b) ? "true" : "false") << "\n";
      } else if (weyl_op == "mincoset") {
        out << format_element(fx.weyl(), min_coset_rep(fx.weyl(), a)) << "\n";
      } else {
        err << "unknown weyl op: " << weyl_op << "\n";
        return 2;
      }
      return 0;
    }

    if (hecke_cmd->parsed()) {
      Fixture fx = fixture_from_options(fixture_name, config_path);
      if (hecke_op == "mult") {
        if (hecke_b.empty()) {
          err << "mult needs two expressions\n";
          return 2;
        }
        HeckeElement a = parse_hecke(*fx.hecke, hecke_a);
        HeckeElement b = parse_hecke(*fx.hecke, hecke_b);
        out << format_hecke(fx.weyl(), mult(*fx.hecke, a, b)) << "\n";
      } else if (hecke_op == "kl") {
        IWElement w = parse_element(fx.weyl(), hecke_a);
        out << format_hecke(fx.weyl(), kl_basis(*fx.hecke, w)) << "\n";
      } else if (hecke_op == "bernstein") {
        Vec mu = parse_weight(hecke_a, fx.weyl().ech.coord_len());
        out << format_hecke(fx.weyl(), bernstein(*fx.hecke, mu)) << "\n";
      } else if (hecke_op == "m") {
        HeckeElement a = parse_hecke(*fx.hecke, hecke_a);
        out << m_morphism(*fx.hecke, a).str() << "\n";
      } else {
        err << "unknown hecke op: " << hecke_op << "\n";
        return 2;
      }
      return 0;
    }

    if (rep_cmd->parsed()) {
      Fixture fx = fixture_from_options(fixture_name, config_path);
      if (rep_op == "weights") {
        Vec la = parse_weight(rep_weight, fx.dual.dim);
        out << format_character(weight_multiplicities(fx.dual, la));
      } else if (rep_op == "restrict") {
        Vec la = parse_weight(rep_weight, fx.dual.dim);
        out << format_character(
            restrict_character(fx.weyl().ech, weight_multiplicities(fx.dual, la)));
      } else if (rep_op == "decompose") {
        Vec la = parse_weight(rep_weight, fx.dual.dim);
        Character res = restrict_character(fx.weyl().ech, weight_multiplicities(fx.dual, la));
        for (const auto& [mu, m] : decompose(fx.folded, res))
          out << format_weight(mu) << " : " << m << "\n";
      } else if (rep_op == "classify") {
        Vec mu = parse_weight(rep_weight, fx.weyl().ech.coord_len());
        out << weight_class_name(classify(fx.weyl().ech, mu)) << "\n";
      } else {
        err << "unknown rep op: " << rep_op << "\n";
        return 2;
      }
      return 0;
    }

    if (central_cmd->parsed()) {
      Fixture fx = fixture_from_options(fixture_name, config_path);
      Vec la = parse_weight(central_weight, fx.dual.dim);
      if (central_op == "class") {
        out << format_hecke(fx.weyl(), central_class(fx, la).element) << "\n";
      } else if (central_op == "poly") {
        out << weight_poly(fx, la).poly.str() << "\n";
      } else if (central_op == "kerdim") {
        out << ker_dim(fx, la) << "\n";
      } else if (central_op == "euler") {
        for (const auto& [mu, k] : euler_vector(fx, la))
          out << format_weight(mu) << " : " << k.str() << "\n";
      } else {
        err << "unknown central op: " << central_op << "\n";
        return 2;
      }
      return 0;
    }

    if (verify_cmd->parsed()) {
      Fixture fx = fixture_from_options(fixture_name, config_path);
      vopts.parallel = !serial;
      std::vector<CheckResult> results = verify_fixture(fx, vopts);
      if (verify_json)
        out << report_json(fx.name, vopts, results) << "\n";
      else if (verify_tsv)
        out << report_tsv(results);
      else
        out << report_plain(results);
      return all_pass(results) ? 0 : 1;
    }

    err << "no subcommand\n";
    return 2;
  } catch (const parse_error& e) {
    err << e.pretty() << "\n";
    return 2;
  } catch (const validation_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace taw
