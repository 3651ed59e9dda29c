// One line per criterion; exit status is nonzero when any criterion fails.

#include <cstdio>
#include <cstdlib>
#include <string>

#include "acceptance.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 1;
  bool all = true;
  lagorb::acceptance::run_all(seed, [&](const lagorb::acceptance::CriterionResult& r) {
    all = all && r.pass;
    std::printf("%s criterion %2d: %s (%s, %.2f s)\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.detail.c_str(), r.seconds);
    std::fflush(stdout);
  });
  return all ? 0 : 1;
}
