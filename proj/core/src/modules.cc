#include "belyi/modules.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "belyi/error.hpp"

namespace belyi {

std::vector<std::vector<long long>> abelian_shapes(long long max_order, int max_rank) {
  std::vector<std::vector<long long>> out;
  std::vector<long long> cur;
  std::function<void(long long, long long)> rec = [&](long long first, long long budget) {
    if (!cur.empty()) out.push_back(cur);
    if (static_cast<int>(cur.size()) == max_rank) return;
    for (long long m = first; m <= budget; m += first) {
      if (m < 2) continue;
      cur.push_back(m);
      rec(m, budget / m);
      cur.pop_back();
    }
  };
  rec(1, max_order);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    long long pa = 1, pb = 1;
    for (long long x : a) pa *= x;
    for (long long x : b) pb *= x;
    return pa != pb ? pa < pb : a < b;
  });
  return out;
}

namespace {

IntMatrix mul(const IntMatrix& a, const IntMatrix& b, const std::vector<long long>& mods) {
  const std::size_t k = mods.size();
  IntMatrix c(k, std::vector<long long>(k, 0));
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t l = 0; l < k; ++l)
      if (a[r][l])
        for (std::size_t j = 0; j < k; ++j) c[r][j] += a[r][l] * b[l][j];
    for (auto& x : c[r]) x = ((x % mods[r]) + mods[r]) % mods[r];
  }
  return c;
}

}  // namespace

std::vector<FiniteHModule> modules_up_to_iso(const CayleyGroup& h, const std::vector<long long>& shape) {
  if (h.order() == 1) return {FiniteHModule::trivial(h, shape)};
  const auto autos = automorphisms_of_abelian(shape);
  const int na = static_cast<int>(autos.size());
  auto index_of = [&](const IntMatrix& m) {
    auto it = std::lower_bound(autos.begin(), autos.end(), m);
    ensure(it != autos.end() && *it == m, "product left the automorphism group");
    return static_cast<int>(it - autos.begin());
  };
  const IntMatrix id = autos.empty() ? IntMatrix{} : [&] {
    IntMatrix e(shape.size(), std::vector<long long>(shape.size(), 0));
    for (std::size_t i = 0; i < shape.size(); ++i) e[i][i] = 1;
    return e;
  }();
  std::vector<int> order(na, 0), inverse(na, 0);
  for (int i = 0; i < na; ++i) {
    IntMatrix p = autos[i];
    int k = 1;
    while (p != id) {
      p = mul(p, autos[i], shape);
      ++k;
    }
    order[i] = k;
  }
  for (int i = 0; i < na; ++i) {
    IntMatrix p = id;
    for (int k = 1; k < order[i]; ++k) p = mul(p, autos[i], shape);
    inverse[i] = index_of(p);
  }
  const auto& gens = h.generator_indices();
  const int s = static_cast<int>(gens.size());
  std::vector<std::vector<int>> cand(s);
  for (int i = 0; i < s; ++i) {
    int o = h.element_order(gens[i]);
    for (int a = 0; a < na; ++a)
      if (o % order[a] == 0) cand[i].push_back(a);
  }
  // Does gens[i] -> autos[t[i]] extend to a homomorphism?
  auto extends = [&](const std::vector<int>& t) {
    std::vector<IntMatrix> act(h.order());
    std::vector<char> seen(h.order(), 0);
    act[0] = id;
    seen[0] = 1;
    std::vector<int> queue{0};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      int x = queue[q];
      for (int i = 0; i < s; ++i) {
        int y = h.mul(x, gens[i]);
        IntMatrix m = mul(act[x], autos[t[i]], shape);
        if (seen[y]) {
          if (act[y] != m) return false;
          continue;
        }
        seen[y] = 1;
        act[y] = std::move(m);
        queue.push_back(y);
      }
    }
    return true;
  };
  std::vector<FiniteHModule> out;
  std::set<std::vector<int>> seen;
  std::vector<int> t(s, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == s) {
      if (seen.count(t) || !extends(t)) return;
      for (int g = 0; g < na; ++g) {
        std::vector<int> c(s);
        for (int j = 0; j < s; ++j) c[j] = index_of(mul(mul(autos[g], autos[t[j]], shape), autos[inverse[g]], shape));
        seen.insert(std::move(c));
      }
      std::vector<IntMatrix> ga(s);
      for (int j = 0; j < s; ++j) ga[j] = autos[t[j]];
      out.push_back(FiniteHModule::from_generator_action(h, shape, ga));
      return;
    }
    for (int a : cand[i]) {
      t[i] = a;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace belyi
