// The verification suite: every cross-module identity the library is built
// around, run over bounded enumerations with a structured pass/fail report.
// Case sweeps are data-parallel; the serial path is kept selectable both as
// a reference for the parallel runner and for timing comparisons.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "taw/fixture.hpp"

namespace taw {

struct VerifyOptions {
  int max_length = 8;
  Int dim_bound = 200;
  std::uint64_t seed = 1;
  bool parallel = true;
  int threads = 0;                // 0 = library default
  std::vector<std::string> only;  // restrict to these check ids; empty = all
};

struct CheckResult {
  std::string check_id;
  std::string law;  // the identity being checked, serialized as paper_ref
  bool pass = false;
  std::string counterexample;  // empty when passing
  long long cases = 0;
  long long elapsed_ms = 0;
};

std::vector<CheckResult> verify_fixture(const Fixture& fx, const VerifyOptions& opts);

bool all_pass(const std::vector<CheckResult>& results);
std::string report_json(const std::string& fixture_name, const VerifyOptions& opts,
                        const std::vector<CheckResult>& results);
std::string report_tsv(const std::vector<CheckResult>& results);
std::string report_plain(const std::vector<CheckResult>& results);

}  // namespace taw
