#pragma once

#include <memory>
#include <vector>

#include "belyi/character_table.hpp"
#include "belyi/cohomology.hpp"
#include "belyi/free_group.hpp"

namespace belyi {

// R/[R,R] for R = ker(F_d -> H), with H acting by conjugation.
class RelationModule {
 public:
  RelationModule(const CayleyGroup& h, const std::vector<int>& images);

  const CayleyGroup& group() const { return sd_->group(); }
  const SchreierData& schreier() const { return *sd_; }
  int d() const { return sd_->rank_free(); }
  int rank() const { return sd_->rank(); }
  const std::vector<int>& images() const { return sd_->images(); }
  const FreeWord& transversal(int h) const { return sd_->transversal(h); }
  const std::vector<FreeWord>& free_generators() const { return sd_->free_generators(); }
  const IntMatrix& action(int h) const { return action_[h]; }

 private:
  std::shared_ptr<const SchreierData> sd_;
  std::vector<IntMatrix> action_;
};

RelationModule schreier_data(const CayleyGroup& h, const std::vector<int>& images);
std::vector<long long> rewrite(const RelationModule& rm, const FreeWord& w);

// Character of the action on Q (x) R/[R,R]; throws InvariantError unless it
// equals trivial + (d-1) regular.
VirtualCharacter rational_character(const RelationModule& rm, const TablePtr& table);
VirtualCharacter expected_relation_character(const TablePtr& table, int d);

FiniteHModule reduce_mod(const RelationModule& rm, long long m);
// Cocycle of 1 -> R/[R,R]R^m -> F/[R,R]R^m -> H -> 1 for the transversal section.
Cocycle2 extension_cocycle(const RelationModule& rm, long long m);

struct MainTheoremReport {
  long long order_P = 0;
  long long order_aut_h = 0;
  std::vector<long long> h2_invariants;
  std::vector<long long> beta_class;
  std::vector<IntMatrix> stabilizer;    // Aut_{H,beta}
  std::vector<IntMatrix> restrictions;  // from automorphisms of P over H
  bool equal = false;
};

MainTheoremReport verify_main_theorem(const RelationModule& rm, long long m);

}  // namespace belyi
