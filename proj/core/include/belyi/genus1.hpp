#pragma once

#include <array>
#include <utility>
#include <vector>

#include "belyi/cayley.hpp"
#include "belyi/cover.hpp"
#include "belyi/cyclotomic.hpp"

namespace belyi {

struct InertiaTriple {
  int a = 0, b = 0, c = 0;  // a >= b >= c >= 2
  friend bool operator==(const InertiaTriple&, const InertiaTriple&) = default;
  friend auto operator<=>(const InertiaTriple&, const InertiaTriple&) = default;
};

// Solutions of 1/a + 1/b + 1/c = 1.
std::vector<InertiaTriple> inertia_triples();

// Cyclic cover y^d = t^a (t-1)^b: x = i -> i+a, y = i -> i+b on Z/d.
BelyiCover kummer_cover(int a, int b, int d);
// The six (a, b, d) with d in {3, 4, 6} used as genus-one building blocks.
std::vector<std::array<int, 3>> kummer_admissible();

using Vec2 = std::pair<int, int>;

struct CmModule {
  int d = 3;
  int n = 1;
  std::array<std::array<int, 2>, 2> matrix{};  // companion matrix of the d-th cyclotomic polynomial
  std::vector<std::vector<Vec2>> stable_subgroups;  // each sorted, (0,0) first
};

std::array<std::array<int, 2>, 2> cm_matrix(int d);
bool cm_matrix_ok(int d, int n);  // minimal polynomial holds mod n
std::vector<std::vector<Vec2>> subgroups_z2(int n);
std::vector<std::vector<Vec2>> cm_stable_subgroups(int d, int n);
CmModule cm_module(int d, int n);

// J x| Z/d with (j1, k1)(j2, k2) = (j1 + C^k1 j2, k1 + k2); element (j, k) has
// index k |J| + position of j in the sorted list.
CayleyGroup build_genus1_group(int d, int n, const std::vector<Vec2>& j);

// j(zeta_t) = 256 (z^2 - z + 1)^3 / (z^2 (z - 1)^2).
Cyclotomic j_invariant(int t);
// Size of the Galois orbit of j(zeta_t); t odd and > 1.
int j_invariant_degree(int t);

}  // namespace belyi
