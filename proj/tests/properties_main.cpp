// Randomized property suites; pass a seed to override the fixed default.
#include <chrono>
#include <cstdio>
#include <string>

#include "properties.hpp"

int main(int argc, char** argv) {
  using namespace qpcc::testing;
  const unsigned seed = argc > 1 ? static_cast<unsigned>(std::stoul(argv[1])) : kPropertySeed;
  std::printf("seed %u\n", seed);
  int bad = 0;
  for (const auto& run : all_properties()) {
    auto t0 = std::chrono::steady_clock::now();
    PropertyResult r = run(seed);
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] %-26s %4d instances, %d failures (%.2f s)\n", r.ok() ? "PASS" : "FAIL", r.name.c_str(),
                r.instances, r.failures, s);
    if (!r.ok()) {
      ++bad;
      if (!r.first_failure.empty()) std::printf("       first failure: %s\n", r.first_failure.c_str());
    }
  }
  return bad == 0 ? 0 : 1;
}
