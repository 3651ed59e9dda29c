#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace lagorb::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

inline constexpr int kCriteria = 10;

CriterionResult run_one(int id, std::uint64_t seed);

/// Runs criteria 1..10 in order; `progress` sees each result as it lands.
std::vector<CriterionResult> run_all(std::uint64_t seed,
                                     const std::function<void(const CriterionResult&)>& progress = {});

}  // namespace lagorb::acceptance
