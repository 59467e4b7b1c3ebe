#pragma once

#include <memory>
#include <vector>

#include "belyi/classes.hpp"
#include "belyi/perm_group.hpp"

namespace belyi {

// Finite group given by its multiplication table; the identity is index 0.
class CayleyGroup {
 public:
  static constexpr int kMaxOrder = 2048;

  // table[a][b] = a*b over labels 0..n-1; the identity may sit anywhere and
  // is moved to index 0. Returns the relabelling in *relabel when given.
  static CayleyGroup from_table(const std::vector<std::vector<int>>& table,
                                std::vector<int>* relabel = nullptr);
  // Same element order as g.elements(); generators follow g.generators().
  static CayleyGroup from_perm_group(const PermGroup& g);
  // Table assumed valid with identity 0; used by internal constructions.
  static CayleyGroup from_valid_table(int n, std::vector<int> table,
                                      std::vector<int> gens = {});

  int order() const;
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int power(int a, long long k) const;
  int element_order(int a) const;
  bool is_abelian() const;

  const std::vector<int>& generator_indices() const;
  const ClassData& classes() const;

  // Sorted element list of the subgroup generated by gens.
  std::vector<int> closure(const std::vector<int>& gens) const;
  bool generates(const std::vector<int>& gens) const;

  // Copy with a different distinguished generating set.
  CayleyGroup with_generators(const std::vector<int>& gens) const;
  std::vector<std::vector<int>> table() const;

 private:
  struct Lazy;
  int n_ = 0;
  std::vector<int> table_;
  std::vector<int> inv_;
  std::vector<int> gens_;
  std::shared_ptr<Lazy> lazy_;
};

}  // namespace belyi
