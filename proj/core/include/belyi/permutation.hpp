#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace belyi {

// A bijection of {0..n-1}. Products apply the left factor first:
// (p * q)(i) = q(p(i)). Serialized forms are 1-based.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  static Permutation from_one_based(const std::vector<int>& images);
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator[](int i) const { return img_[i]; }
  const std::vector<int>& images() const { return img_; }
  std::vector<int> one_based() const;

  Permutation inverse() const;
  Permutation pow(long long k) const;
  bool is_identity() const;
  int order() const;
  int fixed_points() const;
  int cycle_count() const;
  std::vector<std::vector<int>> cycles() const;  // nontrivial cycles, 1-based
  std::string str() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(Unchecked, std::vector<int> images) : img_(std::move(images)) {}
  friend Permutation compose(const Permutation& p, const Permutation& q);

  std::vector<int> img_;
};

Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation operator*(const Permutation& p, const Permutation& q) {
  return compose(p, q);
}

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace belyi
