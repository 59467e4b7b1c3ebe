#pragma once

#include <string>
#include <vector>

#include "belyi/cayley.hpp"

namespace belyi {

// Reduced word in x_1..x_d; letter +i is x_i, -i is x_i^-1 (i >= 1).
class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(const std::vector<int>& letters);
  static FreeWord generator(int i) { return FreeWord({i}); }

  const std::vector<int>& letters() const { return l_; }
  std::size_t length() const { return l_.size(); }
  bool empty() const { return l_.empty(); }
  FreeWord inverse() const;
  FreeWord operator*(const FreeWord& o) const;
  std::string str() const;  // e.g. "x y x^-1", "1" when empty

  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  friend auto operator<=>(const FreeWord&, const FreeWord&) = default;

 private:
  std::vector<int> l_;
};

// Reidemeister-Schreier data for pi: F_d -> H, x_i -> images[i-1].
class SchreierData {
 public:
  SchreierData(const CayleyGroup& h, const std::vector<int>& images);

  const CayleyGroup& group() const { return h_; }
  int rank_free() const { return static_cast<int>(images_.size()); }
  const std::vector<int>& images() const { return images_; }
  int rank() const { return static_cast<int>(free_gens_.size()); }
  const FreeWord& transversal(int h) const { return trans_[h]; }
  const std::vector<FreeWord>& free_generators() const { return free_gens_; }

  int evaluate(const FreeWord& w) const;  // pi(w)
  // Exponent sums over the free generators of R; requires pi(w) = 1.
  std::vector<long long> rewrite(const FreeWord& w) const;
  // Matrix of conjugation by the transversal word of h on R/[R,R]:
  // column j is rewrite(t_h r_j t_h^-1).
  std::vector<std::vector<long long>> action_matrix(int h) const;

 private:
  CayleyGroup h_;
  std::vector<int> images_;
  std::vector<FreeWord> trans_;
  std::vector<FreeWord> free_gens_;
  std::vector<std::vector<int>> slot_;  // [coset][letter] -> free generator or -1
};

}  // namespace belyi
