#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "belyi/classes.hpp"
#include "belyi/permutation.hpp"

namespace belyi {

// Finite permutation group with fully enumerated elements. Elements are
// sorted lexicographically by image list, so the identity has index 0.
// Copies share the underlying immutable state.
class PermGroup {
 public:
  static constexpr long long kMaxOrder = 400000;

  static PermGroup generate(const std::vector<Permutation>& gens);
  static PermGroup trivial(int degree);

  int degree() const;
  long long order() const;
  const std::vector<Permutation>& generators() const;
  const std::vector<int>& generator_indices() const;
  const std::vector<Permutation>& elements() const;
  const Permutation& element(int i) const;

  // Index of p among elements(), or -1.
  int index_of(const Permutation& p) const;
  bool contains(const Permutation& p) const { return index_of(p) >= 0; }
  int mul(int i, int j) const;
  int inv(int i) const;

  const ClassData& classes() const;
  int class_of(const Permutation& p) const;

  bool is_transitive() const;
  bool is_abelian() const;
  std::vector<int> orbit(int point) const;  // 0-based points

  // Subgroup made of the listed element indices (must be closed).
  PermGroup subgroup_from_indices(const std::vector<int>& idx) const;
  PermGroup subgroup(const std::vector<Permutation>& gens) const;

 private:
  struct State;
  explicit PermGroup(std::shared_ptr<const State> s) : s_(std::move(s)) {}
  static PermGroup from_sorted(int degree, std::vector<Permutation> elements,
                               std::vector<Permutation> gens);
  std::shared_ptr<const State> s_;
};

struct ConjugacyClass {
  Permutation rep;
  long long size;
};

std::vector<ConjugacyClass> conjugacy_classes(const PermGroup& g);
// Class index of reps[c]^k.
int power_map(const PermGroup& g, int c, long long k);

bool is_subgroup(const PermGroup& s, const PermGroup& g);
PermGroup stabilizer(const PermGroup& g, int point);  // 1-based point
PermGroup normalizer(const PermGroup& g, const PermGroup& s);

// Action of g by right multiplication on the right cosets S\G. Coset 0 is S.
struct CosetAction {
  PermGroup image;
  std::vector<Permutation> reps;   // one representative per coset
  std::vector<int> coset_of;       // element index of g -> coset
  std::vector<Permutation> images_of_generators;
  Permutation image_of(const Permutation& x) const;
  PermGroup source;
};
CosetAction coset_action(const PermGroup& g, const PermGroup& s);

}  // namespace belyi
