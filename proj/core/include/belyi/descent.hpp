#pragma once

#include <string>
#include <vector>

#include "belyi/cover.hpp"
#include "belyi/seed.hpp"

namespace belyi {

enum class Verdict { kDescends, kDoesNotDescend, kInconclusive };
std::string to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

struct DescentRow {
  int row = 0;
  long long degree = 1;
  long long n = 0;  // multiplicity in the left term
  long long m = 0;  // multiplicity in the middle term
  bool passes = true;
  friend bool operator==(const DescentRow&, const DescentRow&) = default;
};

struct Certificate {
  std::vector<Permutation> generators;  // generators of D1 inside D
  long long order = 1;
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct DescentReport {
  int degree = 1;
  int genus = 0;
  long long order_H = 1, order_J = 1, order_W = 1, order_D = 1, index_HW = 1;
  bool is_galois = false;
  std::vector<DescentRow> rows;
  Verdict verdict = Verdict::kInconclusive;
  bool refined = false;
  std::vector<Certificate> certificates;
  friend bool operator==(const DescentReport&, const DescentReport&) = default;
};

struct DescentOptions {
  bool refine = false;
  std::uint64_t seed = kDefaultSeed;
};

DescentReport descent_report(const BelyiCover& cover, const DescentOptions& opts = {});
DescentReport descent_report(const ClosureData& cd, const TablePtr& table_of_D,
                             const TateCharacters& tc, bool refine,
                             std::uint64_t seed = kDefaultSeed);

// For every irreducible character of D1, the restrictions of the left and
// Jacobian terms do not both contain it.
bool subgroup_certify(const TateCharacters& tc, const PermGroup& d1,
                      std::uint64_t seed = kDefaultSeed);
bool subgroup_certify(const ClosureData& cd, const PermGroup& d1,
                      std::uint64_t seed = kDefaultSeed);

// Cyclic subgroups of D (one per conjugacy class) and D itself that certify.
std::vector<Certificate> refine_search(const ClosureData& cd, const TateCharacters& tc,
                                       std::uint64_t seed = kDefaultSeed);
std::vector<Certificate> refine_search(const ClosureData& cd, std::uint64_t seed = kDefaultSeed);

}  // namespace belyi
