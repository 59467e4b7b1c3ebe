#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "belyi/cayley.hpp"
#include "belyi/cyclotomic.hpp"
#include "belyi/perm_group.hpp"
#include "belyi/seed.hpp"

namespace belyi {

using ClassFunction = std::vector<Cyclotomic>;

// Irreducible characters, one row per class. Row 0 is the trivial
// character; remaining rows are ordered by degree, then by values.
class CharacterTable {
 public:
  static std::shared_ptr<const CharacterTable> compute(const CayleyGroup& g,
                                                       std::uint64_t seed = kDefaultSeed);
  // Keeps g so that permutations can be located in classes.
  static std::shared_ptr<const CharacterTable> compute(const PermGroup& g,
                                                       std::uint64_t seed = kDefaultSeed);

  const CayleyGroup& group() const { return group_; }
  const std::optional<PermGroup>& perm_group() const { return perm_; }
  const ClassData& classes() const { return group_.classes(); }
  long long order() const { return group_.order(); }
  int exponent() const { return classes().exponent; }
  int size() const { return static_cast<int>(rows_.size()); }
  const std::vector<ClassFunction>& rows() const { return rows_; }
  const ClassFunction& row(int i) const { return rows_.at(i); }
  const std::vector<long long>& degrees() const { return degrees_; }
  int dixon_prime() const { return prime_; }

  int class_of_element(int index) const { return classes().class_of.at(index); }
  int class_of(const Permutation& p) const;  // needs perm_group()

 private:
  CayleyGroup group_;
  std::optional<PermGroup> perm_;
  std::vector<ClassFunction> rows_;
  std::vector<long long> degrees_;
  int prime_ = 0;
};

using TablePtr = std::shared_ptr<const CharacterTable>;

inline TablePtr character_table(const PermGroup& g, std::uint64_t seed = kDefaultSeed) {
  return CharacterTable::compute(g, seed);
}
inline TablePtr character_table(const CayleyGroup& g, std::uint64_t seed = kDefaultSeed) {
  return CharacterTable::compute(g, seed);
}

// Integer combination of irreducible characters.
struct VirtualCharacter {
  TablePtr table;
  std::vector<long long> mults;

  long long degree() const;
  bool is_genuine() const;
  ClassFunction values() const;
  friend bool operator==(const VirtualCharacter& a, const VirtualCharacter& b) {
    return a.table == b.table && a.mults == b.mults;
  }
};

VirtualCharacter operator+(const VirtualCharacter& a, const VirtualCharacter& b);
VirtualCharacter operator-(const VirtualCharacter& a, const VirtualCharacter& b);
VirtualCharacter operator*(long long k, const VirtualCharacter& a);

VirtualCharacter irreducible(const TablePtr& t, int row);
VirtualCharacter regular_character(const TablePtr& t);

// (1/|G|) sum_g a(g) conj(b(g)).
Cyclotomic inner_product_exact(const CharacterTable& t, const ClassFunction& a, const ClassFunction& b);
// Same, required to be an integer.
long long inner_product(const CharacterTable& t, const ClassFunction& a, const ClassFunction& b);
long long inner_product(const VirtualCharacter& a, const VirtualCharacter& b);
VirtualCharacter decompose(const TablePtr& t, const ClassFunction& f);

// dim of the fixed space of <g> in the representation of the given row.
long long fixed_space_dim(const CharacterTable& t, int row, const Permutation& g);
long long fixed_space_dim_at(const CharacterTable& t, int row, int element_index);

// Permutation character of the table's permutation group on its points.
VirtualCharacter perm_character(const TablePtr& t);
ClassFunction perm_class_function(const CharacterTable& t);

// Restriction to a subgroup of the same permutation degree.
VirtualCharacter restrict(const VirtualCharacter& chi, const TablePtr& sub);
// Restriction along an embedding (element index of sub -> element index of G).
VirtualCharacter restrict(const VirtualCharacter& chi, const TablePtr& sub,
                          const std::vector<int>& embedding);

}  // namespace belyi
