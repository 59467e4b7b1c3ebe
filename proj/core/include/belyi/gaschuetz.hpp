#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "belyi/cayley.hpp"
#include "belyi/seed.hpp"

namespace belyi {

// d(G) and the lexicographically least generating tuple of that length.
int min_generators(const CayleyGroup& g, std::uint64_t seed = kDefaultSeed);
std::optional<std::vector<int>> generating_tuple(const CayleyGroup& g, int d);
// All ordered d-tuples generating g (exhaustive; sized for small groups).
std::vector<std::vector<int>> generating_tuples(const CayleyGroup& g, int d);

struct SurjectionProblem {
  CayleyGroup g1;
  CayleyGroup g2;
  std::vector<int> psi;  // full map G1 -> G2
  std::vector<int> s2;   // tuple in G2

  // psi given on g1.generator_indices(); checks homomorphism and surjectivity.
  static SurjectionProblem from_generator_images(const CayleyGroup& g1, const CayleyGroup& g2,
                                                 const std::vector<int>& psi_on_generators,
                                                 std::vector<int> s2);
  // psi given on every element; checks homomorphism and surjectivity.
  static SurjectionProblem from_map(const CayleyGroup& g1, const CayleyGroup& g2,
                                    std::vector<int> psi, std::vector<int> s2);
};

// Lexicographically least S1 with psi(S1) = S2 generating G1.  Throws
// PreconditionError if |S2| < d(G1) or S2 does not generate G2, and
// InvariantError if no lift exists.
std::vector<int> lift_generators(const SurjectionProblem& p);
long long count_lifts(const SurjectionProblem& p);

}  // namespace belyi
