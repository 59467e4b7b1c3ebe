#pragma once

#include <optional>
#include <string>
#include <vector>

#include "belyi/cayley.hpp"
#include "belyi/perm_group.hpp"

namespace belyi {

CayleyGroup cyclic_group(int n);
CayleyGroup direct_product(const CayleyGroup& a, const CayleyGroup& b);
// N x| K with k acting on N through the automorphisms auts[i] assigned to
// the generators of K (each a permutation of N's element indices).
CayleyGroup semidirect_product(const CayleyGroup& n, const CayleyGroup& k,
                               const std::vector<std::vector<int>>& auts);
// Z/m x| Z/n with the generator of Z/n acting as multiplication by r.
CayleyGroup metacyclic(int m, int n, int r);
// Dicyclic group of order 4n: <a, x | a^2n, x^2 = a^n, x a x^-1 = a^-1>.
CayleyGroup dicyclic_group(int n);
PermGroup symmetric_group(int n);
PermGroup alternating_group(int n);
PermGroup dihedral_perm_group(int n);  // order 2n acting on n points

// Extends generator images to a homomorphism; nullopt when not well defined.
std::optional<std::vector<int>> extend_homomorphism(const CayleyGroup& from,
                                                    const CayleyGroup& to,
                                                    const std::vector<int>& gen_images);
std::optional<std::vector<int>> find_isomorphism(const CayleyGroup& a, const CayleyGroup& b);
bool isomorphic(const CayleyGroup& a, const CayleyGroup& b);

std::vector<std::vector<int>> all_subgroups(const CayleyGroup& g);
std::vector<std::vector<int>> normal_subgroups(const CayleyGroup& g);

struct Quotient {
  CayleyGroup group;
  std::vector<int> proj;  // element of G -> element of G/N
};
Quotient quotient(const CayleyGroup& g, const std::vector<int>& normal);

// Regular permutation representation (right multiplication).
PermGroup regular_perm_group(const CayleyGroup& g);

struct NamedGroup {
  std::string name;
  CayleyGroup group;
};
// One group from every isomorphism class of order <= max_order (max 24).
std::vector<NamedGroup> small_groups(int max_order);
// Expected number of isomorphism classes of each order 1..24.
int small_group_count(int order);

}  // namespace belyi
