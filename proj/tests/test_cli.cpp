#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "taw/cli.hpp"

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(std::initializer_list<const char*> args) {
  std::vector<const char*> argv{"taw"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out, err;
  int code = taw::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("preset list") {
  CliRun r = cli({"preset", "list"});
  CHECK(r.code == 0);
  CHECK(r.out.find("A1\n") != std::string::npos);
  CHECK(r.out.find("A4-fold\n") != std::string::npos);
  CHECK(r.out.find("C2\n") != std::string::npos);
}

TEST_CASE("lengths and the multiplicity morphism from the command line") {
  CliRun len = cli({"weyl", "length", "--fixture", "A1", "t[1]"});
  CHECK(len.code == 0);
  CHECK(len.out == "2\n");

  CliRun m = cli({"hecke", "m", "--fixture", "A1", "theta[-1]"});
  CHECK(m.code == 0);
  CHECK(m.out == "v^(-2)\n");

  CliRun red = cli({"weyl", "reduced", "--fixture", "A1", "t[1]"});
  CHECK(red.code == 0);
  CHECK(red.out == "[0 1]\n");

  CliRun br = cli({"weyl", "bruhat", "--fixture", "A1", "e", "t[1]"});
  CHECK(br.code == 0);
  CHECK(br.out == "true\n");
}

TEST_CASE("fold summaries") {
  CliRun r = cli({"fold", "--fixture", "A4-fold"});
  CHECK(r.code == 0);
  CHECK(r.out.find("fixed group type: B2") != std::string::npos);
  CliRun j = cli({"fold", "--fixture", "A2-fold", "--json"});
  CHECK(j.code == 0);
  CHECK(j.out.find("\"free_rank\": 1") != std::string::npos);
  CHECK(j.out.find("\"non_reduced\": true") != std::string::npos);
}

TEST_CASE("rep and central commands") {
  CliRun w = cli({"rep", "weights", "--fixture", "A1", "1"});
  CHECK(w.code == 0);
  CHECK(w.out == "-1 : 1\n0 : 1\n1 : 1\n");
  CliRun cl = cli({"rep", "classify", "--fixture", "A1-adj", "1"});
  CHECK(cl.code == 0);
  CHECK(cl.out == "minuscule\n");
  CliRun kd = cli({"central", "kerdim", "--fixture", "A1", "1"});
  CHECK(kd.code == 0);
  CHECK(kd.out == "1\n");
  CliRun po = cli({"central", "poly", "--fixture", "A2-fold", "1,0"});
  CHECK(po.code == 0);
  CHECK(po.out == "v^(2) + 1 + v^(-2)\n");
}

TEST_CASE("exit codes") {
  // malformed element: caret-positioned parse error on stderr, exit 2
  CliRun bad = cli({"weyl", "length", "--fixture", "A1", "t[1] * sX"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find('^') != std::string::npos);

  CliRun nofix = cli({"weyl", "length", "--fixture", "Z9", "e"});
  CHECK(nofix.code == 2);

  CliRun usage = cli({"weyl", "frobnicate", "--fixture", "A1", "e"});
  CHECK(usage.code == 2);

  CliRun nothing = cli({});
  CHECK(nothing.code == 2);
}

TEST_CASE("verification is deterministic and exits zero on the smallest sweep") {
  CliRun a = cli({"verify", "--fixture", "A1", "--max-length", "4", "--dim-bound", "12"});
  CHECK(a.code == 0);
  CHECK(a.out.find("FAIL") == std::string::npos);
  CliRun b = cli({"verify", "--fixture", "A1", "--max-length", "4", "--dim-bound", "12"});
  CHECK(b.out == a.out);

  CliRun j = cli({"verify", "--fixture", "A1", "--max-length", "4", "--dim-bound", "12", "--json"});
  CHECK(j.code == 0);
  CHECK(j.out.find("\"check_id\"") != std::string::npos);
  CHECK(j.out.find("\"paper_ref\"") != std::string::npos);
  CHECK(j.out.find("\"status\"") != std::string::npos);
  CHECK(j.out.find("\"elapsed_ms\"") != std::string::npos);
}
