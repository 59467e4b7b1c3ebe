#include "belyi/permutation.hpp"

#include <numeric>
#include <sstream>

#include "belyi/error.hpp"

namespace belyi {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    require(v >= 0 && v < degree() && !seen[v], "images do not form a bijection");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  require(n >= 0, "negative degree");
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return Permutation(std::move(v));
}

Permutation Permutation::from_one_based(const std::vector<int>& images) {
  std::vector<int> v(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) v[i] = images[i] - 1;
  return Permutation(std::move(v));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  std::vector<char> used(n, 0);
  for (const auto& c : cycles) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      int a = c[k] - 1;
      int b = c[(k + 1) % c.size()] - 1;
      require(a >= 0 && a < n && b >= 0 && b < n, "cycle point out of range");
      require(!used[a], "cycles are not disjoint");
      used[a] = 1;
      v[a] = b;
    }
  }
  return Permutation(std::move(v));
}

std::vector<int> Permutation::one_based() const {
  std::vector<int> v(img_);
  for (int& x : v) ++x;
  return v;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  require(p.degree() == q.degree(), "degree mismatch in composition");
  std::vector<int> v(p.degree());
  for (int i = 0; i < p.degree(); ++i) v[i] = q[p[i]];
  return Permutation(Permutation::Unchecked{}, std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> v(img_.size());
  for (int i = 0; i < degree(); ++i) v[img_[i]] = i;
  return Permutation(Unchecked{}, std::move(v));
}

Permutation Permutation::pow(long long k) const {
  int n = degree();
  long long o = order();
  k %= o;
  if (k < 0) k += o;
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) {
    int j = i;
    for (long long t = 0; t < k; ++t) j = img_[j];
    v[i] = j;
  }
  return Permutation(Unchecked{}, std::move(v));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

int Permutation::order() const {
  long long o = 1;
  std::vector<char> seen(img_.size(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    long long len = 0;
    for (int j = i; !seen[j]; j = img_[j]) {
      seen[j] = 1;
      ++len;
    }
    o = std::lcm(o, len);
  }
  return static_cast<int>(o);
}

int Permutation::fixed_points() const {
  int c = 0;
  for (int i = 0; i < degree(); ++i) c += img_[i] == i;
  return c;
}

int Permutation::cycle_count() const {
  int c = 0;
  std::vector<char> seen(img_.size(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    ++c;
    for (int j = i; !seen[j]; j = img_[j]) seen[j] = 1;
  }
  return c;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(img_.size(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    std::vector<int> c;
    for (int j = i; !seen[j]; j = img_[j]) {
      seen[j] = 1;
      c.push_back(j + 1);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string Permutation::str() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t k = 0; k < c.size(); ++k) os << (k ? " " : "") << c[k];
    os << ')';
  }
  return os.str();
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int v : p.images()) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace belyi
