#pragma once

#include <array>
#include <vector>

#include "belyi/character_table.hpp"
#include "belyi/perm_group.hpp"

namespace belyi {

// Monodromy x over 0 and y over 1; z = (x y)^-1 over infinity.
struct BelyiCover {
  int degree = 1;
  Permutation x;
  Permutation y;

  // Checks degrees and transitivity.
  static BelyiCover from_monodromy(const Permutation& x, const Permutation& y);
  // Regular action of <x, y> on itself by right multiplication.
  static BelyiCover galois(const Permutation& x, const Permutation& y);
  // Action of <x, y> on the right cosets of s.
  static BelyiCover on_cosets(const Permutation& x, const Permutation& y, const PermGroup& s);

  Permutation z() const;
  Permutation sigma(int branch) const;  // 0, 1, 2 = infinity
};

struct BranchRecord {
  int e = 1;          // ramification index of Z over the branch point
  Permutation g;      // representative of the coset W g
  Permutation w;      // g sigma^e g^-1, an element of W
  Permutation d;      // image of w in D
  int d_order = 1;
};

struct ClosureData {
  BelyiCover cover;
  PermGroup H;
  PermGroup J;
  PermGroup W;
  PermGroup D;
  CosetAction deck;   // W acting on J\W, image D
  CosetAction fibre;  // H acting on W\H
  long long index_HW = 1;
  bool is_galois = false;
  std::array<std::vector<BranchRecord>, 3> branch;

  Permutation to_deck(const Permutation& w) const { return deck.image_of(w); }
  int points_of_Z() const;
};

ClosureData validate(const BelyiCover& cover);
int genus(const BelyiCover& cover);

struct TateCharacters {
  VirtualCharacter left;
  VirtualCharacter middle;
  VirtualCharacter jac;
};
TateCharacters tate_characters(const ClosureData& cd, const TablePtr& table_of_D);

// Permutation character of D acting on J\H by left multiplication, counted
// directly on cosets.
ClassFunction deck_coset_character(const ClosureData& cd, const CharacterTable& table_of_D);

}  // namespace belyi
