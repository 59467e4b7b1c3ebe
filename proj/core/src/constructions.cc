#include "belyi/constructions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "belyi/error.hpp"

namespace belyi {

CayleyGroup cyclic_group(int n) {
  require(n >= 1, "cyclic group of order < 1");
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  return CayleyGroup::from_valid_table(n, std::move(t), n > 1 ? std::vector<int>{1} : std::vector<int>{});
}

CayleyGroup direct_product(const CayleyGroup& a, const CayleyGroup& b) {
  const int na = a.order(), nb = b.order(), n = na * nb;
  if (n > CayleyGroup::kMaxOrder) throw ScaleError("direct product of order above " + std::to_string(CayleyGroup::kMaxOrder));
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      t[static_cast<std::size_t>(x) * n + y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
  std::vector<int> gens;
  for (int g : a.generator_indices()) gens.push_back(g * nb);
  for (int g : b.generator_indices()) gens.push_back(g);
  return CayleyGroup::from_valid_table(n, std::move(t), std::move(gens));
}

CayleyGroup semidirect_product(const CayleyGroup& nn, const CayleyGroup& k,
                               const std::vector<std::vector<int>>& auts) {
  const int a = nn.order(), b = k.order(), n = a * b;
  if (n > CayleyGroup::kMaxOrder) throw ScaleError("semidirect product of order above " + std::to_string(CayleyGroup::kMaxOrder));
  const auto& kg = k.generator_indices();
  require(auts.size() == kg.size(), "one automorphism per generator of K is required");
  for (const auto& f : auts) {
    require(static_cast<int>(f.size()) == a, "automorphism has wrong size");
    for (int x = 0; x < a; ++x)
      for (int y = 0; y < a; ++y)
        require(f[nn.mul(x, y)] == nn.mul(f[x], f[y]), "map is not a homomorphism of N");
  }
  // phi[kk] as a map on N, with phi[k1 k2] = phi[k1] o phi[k2].
  std::vector<std::vector<int>> phi(b);
  phi[0].resize(a);
  std::iota(phi[0].begin(), phi[0].end(), 0);
  std::vector<int> queue{0};
  for (std::size_t h = 0; h < queue.size(); ++h) {
    int x = queue[h];
    for (std::size_t i = 0; i < kg.size(); ++i) {
      int y = k.mul(x, kg[i]);
      std::vector<int> f(a);
      for (int v = 0; v < a; ++v) f[v] = phi[x][auts[i][v]];
      if (phi[y].empty()) {
        phi[y] = std::move(f);
        queue.push_back(y);
      } else {
        require(phi[y] == f, "automorphism images do not define an action of K");
      }
    }
  }
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int k1 = 0; k1 < b; ++k1)
    for (int x1 = 0; x1 < a; ++x1)
      for (int k2 = 0; k2 < b; ++k2)
        for (int x2 = 0; x2 < a; ++x2)
          t[static_cast<std::size_t>(k1 * a + x1) * n + (k2 * a + x2)] =
              k.mul(k1, k2) * a + nn.mul(x1, phi[k1][x2]);
  std::vector<int> gens;
  for (int g : nn.generator_indices()) gens.push_back(g);
  for (int g : kg) gens.push_back(g * a);
  return CayleyGroup::from_valid_table(n, std::move(t), std::move(gens));
}

CayleyGroup metacyclic(int m, int n, int r) {
  require(std::gcd(r, m) == 1, "multiplier must be a unit");
  long long p = 1;
  for (int i = 0; i < n; ++i) p = p * r % m;
  require(p % m == 1 % m, "multiplier order does not divide n");
  std::vector<int> f(m);
  for (int x = 0; x < m; ++x) f[x] = static_cast<int>(static_cast<long long>(r) * x % m);
  return semidirect_product(cyclic_group(m), cyclic_group(n), n > 1 ? std::vector<std::vector<int>>{f}
                                                                   : std::vector<std::vector<int>>{});
}

CayleyGroup dicyclic_group(int n) {
  require(n >= 1, "dicyclic index < 1");
  const int m = 2 * n, sz = 4 * n;
  std::vector<int> t(static_cast<std::size_t>(sz) * sz);
  for (int u = 0; u < sz; ++u)
    for (int v = 0; v < sz; ++v) {
      int k = u % m, e = u / m, l = v % m, f = v / m;
      int kk = k + (e ? m - l : l) + (e && f ? n : 0);
      t[static_cast<std::size_t>(u) * sz + v] = (kk % m) + m * (e ^ f);
    }
  return CayleyGroup::from_valid_table(sz, std::move(t), {1, m});
}

PermGroup symmetric_group(int n) {
  if (n <= 1) return PermGroup::trivial(std::max(n, 1));
  std::vector<int> cyc(n);
  std::iota(cyc.begin(), cyc.end(), 1);
  return PermGroup::generate({Permutation::from_cycles(n, {{1, 2}}), Permutation::from_cycles(n, {cyc})});
}

PermGroup alternating_group(int n) {
  if (n <= 2) return PermGroup::trivial(std::max(n, 1));
  if (n == 3) return PermGroup::generate({Permutation::from_cycles(3, {{1, 2, 3}})});
  std::vector<int> cyc;
  for (int i = (n % 2 ? 1 : 2); i <= n; ++i) cyc.push_back(i);
  return PermGroup::generate({Permutation::from_cycles(n, {{1, 2, 3}}), Permutation::from_cycles(n, {cyc})});
}

PermGroup dihedral_perm_group(int n) {
  require(n >= 3, "dihedral group needs n >= 3");
  std::vector<int> rot(n), ref(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    ref[i] = (n - i) % n;
  }
  return PermGroup::generate({Permutation(rot), Permutation(ref)});
}

std::optional<std::vector<int>> extend_homomorphism(const CayleyGroup& from, const CayleyGroup& to,
                                                    const std::vector<int>& gen_images) {
  const auto& gens = from.generator_indices();
  require(gens.size() == gen_images.size(), "one image per generator is required");
  std::vector<int> map(from.order(), -1);
  map[0] = 0;
  std::vector<int> queue{0};
  for (std::size_t h = 0; h < queue.size(); ++h) {
    int x = queue[h];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      int y = from.mul(x, gens[i]);
      int v = to.mul(map[x], gen_images[i]);
      if (map[y] < 0) {
        map[y] = v;
        queue.push_back(y);
      } else if (map[y] != v) {
        return std::nullopt;
      }
    }
  }
  return map;
}

namespace {

std::map<int, int> order_profile(const CayleyGroup& g) {
  std::map<int, int> m;
  for (int x = 0; x < g.order(); ++x) ++m[g.element_order(x)];
  return m;
}

std::vector<int> high_order_generators(const CayleyGroup& g) {
  std::vector<int> elems(g.order());
  std::iota(elems.begin(), elems.end(), 0);
  std::stable_sort(elems.begin(), elems.end(),
                   [&](int a, int b) { return g.element_order(a) > g.element_order(b); });
  std::vector<int> gens;
  std::vector<char> in(g.order(), 0);
  in[0] = 1;
  for (int x : elems) {
    if (in[x]) continue;
    gens.push_back(x);
    for (int y : g.closure(gens)) in[y] = 1;
  }
  return gens;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const CayleyGroup& a, const CayleyGroup& b) {
  if (a.order() != b.order()) return std::nullopt;
  if (a.order() == 1) return std::vector<int>{0};
  if (order_profile(a) != order_profile(b)) return std::nullopt;
  if (a.classes().count() != b.classes().count()) return std::nullopt;
  CayleyGroup ag = a.with_generators(high_order_generators(a));
  const auto& gens = ag.generator_indices();
  std::vector<std::vector<int>> cand(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    int o = a.element_order(gens[i]);
    long long cs = a.classes().sizes[a.classes().class_of[gens[i]]];
    for (int y = 0; y < b.order(); ++y)
      if (b.element_order(y) == o && b.classes().sizes[b.classes().class_of[y]] == cs)
        cand[i].push_back(y);
  }
  std::vector<int> img(gens.size());
  std::optional<std::vector<int>> found;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (found) return;
    if (i == gens.size()) {
      auto m = extend_homomorphism(ag, b, img);
      if (!m) return;
      std::vector<char> hit(b.order(), 0);
      for (int v : *m) {
        if (hit[v]) return;
        hit[v] = 1;
      }
      found = std::move(m);
      return;
    }
    std::vector<int> pre(gens.begin(), gens.begin() + static_cast<long>(i) + 1);
    std::size_t want = a.closure(pre).size();
    for (int y : cand[i]) {
      img[i] = y;
      std::vector<int> post(img.begin(), img.begin() + static_cast<long>(i) + 1);
      if (b.closure(post).size() != want) continue;
      rec(i + 1);
      if (found) return;
    }
  };
  rec(0);
  return found;
}

bool isomorphic(const CayleyGroup& a, const CayleyGroup& b) { return find_isomorphism(a, b).has_value(); }

std::vector<std::vector<int>> all_subgroups(const CayleyGroup& g) {
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> cyclic, out;
  for (int x = 0; x < g.order(); ++x) {
    auto c = g.closure({x});
    if (seen.insert(c).second) {
      cyclic.push_back(c);
      out.push_back(c);
    }
  }
  std::vector<int> cyc_gen;
  for (const auto& c : cyclic) {
    for (int x : c)
      if (g.closure({x}) == c) {
        cyc_gen.push_back(x);
        break;
      }
  }
  for (std::size_t h = 0; h < out.size(); ++h) {
    for (int x : cyc_gen) {
      if (std::binary_search(out[h].begin(), out[h].end(), x)) continue;
      std::vector<int> gens(out[h]);
      gens.push_back(x);
      auto j = g.closure(gens);
      if (seen.insert(j).second) out.push_back(std::move(j));
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& p, const auto& q) {
    return p.size() != q.size() ? p.size() < q.size() : p < q;
  });
  return out;
}

std::vector<std::vector<int>> normal_subgroups(const CayleyGroup& g) {
  std::vector<std::vector<int>> out;
  for (auto& s : all_subgroups(g)) {
    std::vector<char> in(g.order(), 0);
    for (int x : s) in[x] = 1;
    bool normal = true;
    for (int t : g.generator_indices())
      for (int x : s)
        if (!in[g.mul(g.mul(g.inv(t), x), t)]) normal = false;
    if (normal) out.push_back(std::move(s));
  }
  return out;
}

Quotient quotient(const CayleyGroup& g, const std::vector<int>& normal) {
  const int n = g.order();
  std::vector<char> in(n, 0);
  for (int x : normal) in[x] = 1;
  require(in[0] && static_cast<int>(g.closure(normal).size()) == static_cast<int>(normal.size()),
          "not a subgroup");
  for (int t : g.generator_indices())
    for (int x : normal) require(in[g.mul(g.mul(g.inv(t), x), t)], "subgroup is not normal");
  std::vector<int> proj(n, -1), reps;
  for (int x = 0; x < n; ++x) {
    if (proj[x] >= 0) continue;
    int c = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int y : normal) proj[g.mul(x, y)] = c;
  }
  const int q = static_cast<int>(reps.size());
  std::vector<int> t(static_cast<std::size_t>(q) * q);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) t[static_cast<std::size_t>(a) * q + b] = proj[g.mul(reps[a], reps[b])];
  std::vector<int> gens;
  for (int s : g.generator_indices())
    if (proj[s] != 0 && std::find(gens.begin(), gens.end(), proj[s]) == gens.end()) gens.push_back(proj[s]);
  return {CayleyGroup::from_valid_table(q, std::move(t), std::move(gens)), std::move(proj)};
}

PermGroup regular_perm_group(const CayleyGroup& g) {
  if (g.order() == 1) return PermGroup::trivial(1);
  std::vector<Permutation> gens;
  for (int s : g.generator_indices()) {
    std::vector<int> v(g.order());
    for (int x = 0; x < g.order(); ++x) v[x] = g.mul(x, s);
    gens.emplace_back(std::move(v));
  }
  return PermGroup::generate(gens);
}

int small_group_count(int order) {
  static const int counts[] = {0, 1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14, 1, 5, 1, 5, 2, 2, 1, 15};
  require(order >= 1 && order <= 24, "small group counts are tabulated up to order 24");
  return counts[order];
}

std::vector<NamedGroup> small_groups(int max_order) {
  require(max_order <= 24, "the catalogue stops at order 24");
  auto C = cyclic_group;
  auto x = direct_product;
  auto D = [](int n) { return metacyclic(n, 2, n - 1); };
  CayleyGroup s3 = metacyclic(3, 2, 2);
  CayleyGroup d4 = D(4);
  CayleyGroup q8 = dicyclic_group(2);
  CayleyGroup a4 = CayleyGroup::from_perm_group(alternating_group(4));
  CayleyGroup c2 = C(2), c3 = C(3), c4 = C(4);
  CayleyGroup c2c2 = x(c2, c2);

  std::vector<NamedGroup> all;
  for (int n = 1; n <= 24; ++n) all.push_back({"C" + std::to_string(n), C(n)});
  all.push_back({"C2xC2", c2c2});
  all.push_back({"S3", s3});
  all.push_back({"C2xC4", x(c2, c4)});
  all.push_back({"C2^3", x(c2c2, c2)});
  all.push_back({"D4", d4});
  all.push_back({"Q8", q8});
  all.push_back({"C3xC3", x(c3, c3)});
  all.push_back({"D5", D(5)});
  all.push_back({"C2xC6", x(c2, C(6))});
  all.push_back({"D6", D(6)});
  all.push_back({"A4", a4});
  all.push_back({"Dic3", dicyclic_group(3)});
  all.push_back({"D7", D(7)});
  all.push_back({"C4xC4", x(c4, c4)});
  all.push_back({"C2xC8", x(c2, C(8))});
  all.push_back({"C2xC2xC4", x(c2c2, c4)});
  all.push_back({"C2^4", x(c2c2, c2c2)});
  all.push_back({"D8", D(8)});
  all.push_back({"Q16", dicyclic_group(4)});
  all.push_back({"SD16", metacyclic(8, 2, 3)});
  all.push_back({"M16", metacyclic(8, 2, 5)});
  all.push_back({"C4:C4", metacyclic(4, 4, 3)});
  all.push_back({"C2^2:C4", semidirect_product(c2c2, c4, {{0, 2, 1, 3}})});
  all.push_back({"D4xC2", x(d4, c2)});
  all.push_back({"Q8xC2", x(q8, c2)});
  {
    // C4 x C2 with the C2 factor sending (a, b) to (a + 2b, b).
    CayleyGroup c4c2 = x(c4, c2);
    std::vector<int> f(8);
    for (int e = 0; e < 8; ++e) {
      int a = e / 2, b = e % 2;
      f[e] = ((a + 2 * b) % 4) * 2 + b;
    }
    all.push_back({"C4oD4", semidirect_product(c4c2, c2, {f})});
  }
  all.push_back({"C3xC6", x(c3, C(6))});
  all.push_back({"D9", D(9)});
  all.push_back({"S3xC3", x(s3, c3)});
  {
    CayleyGroup c3c3 = x(c3, c3);
    std::vector<int> neg(9);
    for (int e = 0; e < 9; ++e) neg[e] = ((3 - e / 3) % 3) * 3 + (3 - e % 3) % 3;
    all.push_back({"C3^2:C2", semidirect_product(c3c3, c2, {neg})});
  }
  all.push_back({"C2xC10", x(c2, C(10))});
  all.push_back({"D10", D(10)});
  all.push_back({"Dic5", dicyclic_group(5)});
  all.push_back({"F20", metacyclic(5, 4, 2)});
  all.push_back({"C7:C3", metacyclic(7, 3, 2)});
  all.push_back({"D11", D(11)});
  all.push_back({"C2xC12", x(c2, C(12))});
  all.push_back({"C2xC2xC6", x(c2c2, C(6))});
  all.push_back({"C3:C8", metacyclic(3, 8, 2)});
  {
    // Q8 generators a = i (index 1) and x = j (index 4); i -> j -> k -> i.
    int k = q8.mul(1, 4);
    auto f = extend_homomorphism(q8, q8, {4, k});
    ensure(f.has_value(), "quaternion rotation is not a homomorphism");
    all.push_back({"SL(2,3)", semidirect_product(q8, c3, {*f})});
  }
  all.push_back({"Dic6", dicyclic_group(6)});
  all.push_back({"C4xS3", x(c4, s3)});
  all.push_back({"D12", D(12)});
  all.push_back({"C2xDic3", x(c2, dicyclic_group(3))});
  {
    std::vector<int> neg{0, 2, 1}, id{0, 1, 2};
    all.push_back({"C3:D4", semidirect_product(c3, d4, {neg, id})});
  }
  all.push_back({"C3xD4", x(c3, d4)});
  all.push_back({"C3xQ8", x(c3, q8)});
  all.push_back({"S4", CayleyGroup::from_perm_group(symmetric_group(4))});
  all.push_back({"C2xA4", x(c2, a4)});
  all.push_back({"C2xC2xS3", x(c2c2, s3)});

  std::vector<NamedGroup> out;
  for (auto& g : all)
    if (g.group.order() <= max_order) out.push_back(std::move(g));
  std::stable_sort(out.begin(), out.end(),
                   [](const NamedGroup& a, const NamedGroup& b) { return a.group.order() < b.group.order(); });
  return out;
}

}  // namespace belyi
