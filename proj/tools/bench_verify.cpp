// Times the verification sweeps in the reference serial mode against the
// parallel runner on the same fixture and prints the speedup.
#include <chrono>
#include <iostream>

#include "taw/verify.hpp"

namespace {

long long run_once(const taw::Fixture& fx, bool parallel, int max_length) {
  taw::VerifyOptions opts;
  opts.max_length = max_length;
  opts.dim_bound = 60;
  opts.parallel = parallel;
  auto t0 = std::chrono::steady_clock::now();
  auto results = taw::verify_fixture(fx, opts);
  auto t1 = std::chrono::steady_clock::now();
  if (!taw::all_pass(results)) {
    std::cerr << "verification failed during benchmark\n" << taw::report_plain(results);
    std::exit(1);
  }
  return std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  std::string fixture = argc > 1 ? argv[1] : "A2-fold";
  int max_length = argc > 2 ? std::atoi(argv[2]) : 8;
  taw::Fixture fx = taw::make_fixture(fixture);
  std::cout << "fixture " << fixture << ", max length " << max_length << "\n";
  long long serial = run_once(fx, false, max_length);
  long long parallel = run_once(fx, true, max_length);
  std::cout << "serial reference: " << serial << " ms\n";
  std::cout << "parallel:         " << parallel << " ms\n";
  if (parallel > 0)
    std::cout << "speedup:          " << static_cast<double>(serial) / parallel << "x\n";
  return 0;
}
