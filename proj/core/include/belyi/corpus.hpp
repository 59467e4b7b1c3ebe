#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "belyi/seed.hpp"

namespace belyi {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string expected;
  std::string computed;
  std::string detail;
  double ms = 0;
};

struct CorpusOptions {
  std::uint64_t seed = kDefaultSeed;
  // Criterion whose expected value is altered before comparison; 0 for none.
  int perturb = 0;
};

inline constexpr int kCriterionCount = 11;

CriterionResult run_criterion(int id, const CorpusOptions& opts = {});
std::vector<CriterionResult> run_corpus(const CorpusOptions& opts = {});

// "PASS  7 name  expected ... computed ... (12 ms)"
std::string format_result(const CriterionResult& r);

}  // namespace belyi
