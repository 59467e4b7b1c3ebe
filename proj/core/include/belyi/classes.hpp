#pragma once

#include <deque>
#include <vector>

namespace belyi {

// Conjugacy classes of a finite group whose elements are indexed 0..n-1
// with the identity at index 0.
struct ClassData {
  std::vector<int> reps;
  std::vector<long long> sizes;
  std::vector<int> orders;
  std::vector<int> class_of;
  std::vector<int> inverse;
  std::vector<std::vector<int>> power;  // power[c][k]: class of reps[c]^k
  int exponent = 1;

  int count() const { return static_cast<int>(reps.size()); }
  int power_map(int c, long long k) const {
    long long o = orders[c];
    k %= o;
    if (k < 0) k += o;
    return power[c][static_cast<std::size_t>(k)];
  }
};

namespace detail {

template <class G>
ClassData compute_classes(const G& g) {
  const int n = static_cast<int>(g.order());
  const std::vector<int>& gens = g.generator_indices();
  ClassData cd;
  cd.class_of.assign(n, -1);
  std::vector<int> ginv;
  for (int s : gens) ginv.push_back(g.inv(s));
  for (int x = 0; x < n; ++x) {
    if (cd.class_of[x] >= 0) continue;
    int c = cd.count();
    cd.reps.push_back(x);
    cd.class_of[x] = c;
    long long size = 1;
    std::deque<int> queue{x};
    while (!queue.empty()) {
      int y = queue.front();
      queue.pop_front();
      for (std::size_t k = 0; k < gens.size(); ++k) {
        int z = g.mul(g.mul(ginv[k], y), gens[k]);
        if (cd.class_of[z] < 0) {
          cd.class_of[z] = c;
          ++size;
          queue.push_back(z);
        }
      }
    }
    cd.sizes.push_back(size);
  }
  long long expo = 1;
  for (int c = 0; c < cd.count(); ++c) {
    int r = cd.reps[c];
    std::vector<int> pw{0};
    int p = r;
    while (p != 0) {
      pw.push_back(p);
      p = g.mul(p, r);
    }
    std::vector<int> cls;
    for (int e : pw) cls.push_back(cd.class_of[e]);
    cd.orders.push_back(static_cast<int>(pw.size()));
    cd.inverse.push_back(cd.class_of[g.inv(r)]);
    cd.power.push_back(std::move(cls));
    long long o = static_cast<long long>(pw.size());
    long long a = expo, b = o;
    while (b) {
      long long t = a % b;
      a = b;
      b = t;
    }
    expo = expo / a * o;
  }
  cd.exponent = static_cast<int>(expo);
  return cd;
}

}  // namespace detail
}  // namespace belyi
