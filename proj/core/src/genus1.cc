#include "belyi/genus1.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "belyi/error.hpp"

namespace belyi {

std::vector<InertiaTriple> inertia_triples() {
  // c >= 4 gives a sum below 1, and for c in {2, 3} every solution has a <= 6.
  std::vector<InertiaTriple> out;
  for (int a = 2; a <= 6; ++a)
    for (int b = 2; b <= a; ++b)
      for (int c = 2; c <= b; ++c)
        if (b * c + a * c + a * b == a * b * c) out.push_back({a, b, c});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::array<int, 3>> kummer_admissible() {
  return {{1, 1, 3}, {2, 2, 3}, {1, 2, 6}, {5, 4, 6}, {1, 1, 4}, {3, 3, 4}};
}

BelyiCover kummer_cover(int a, int b, int d) {
  require(d == 3 || d == 4 || d == 6, "d must be 3, 4 or 6");
  require(a > 0 && a < d && b > 0 && b < d, "exponents must lie in 1..d-1");
  require(std::gcd(std::gcd(a, b), d) == 1, "gcd(a, b, d) > 1: the cover is not connected");
  std::vector<int> x(d), y(d);
  for (int i = 0; i < d; ++i) {
    x[i] = (i + a) % d;
    y[i] = (i + b) % d;
  }
  return BelyiCover::from_monodromy(Permutation(x), Permutation(y));
}

std::array<std::array<int, 2>, 2> cm_matrix(int d) {
  switch (d) {
    case 3: return {{{0, -1}, {1, -1}}};  // x^2 + x + 1
    case 4: return {{{0, -1}, {1, 0}}};   // x^2 + 1
    case 6: return {{{0, -1}, {1, 1}}};   // x^2 - x + 1
    default: throw PreconditionError("d must be 3, 4 or 6");
  }
}

namespace {

int md(long long a, int n) {
  long long r = a % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

Vec2 apply(const std::array<std::array<int, 2>, 2>& m, Vec2 v, int n) {
  return {md(static_cast<long long>(m[0][0]) * v.first + m[0][1] * v.second, n),
          md(static_cast<long long>(m[1][0]) * v.first + m[1][1] * v.second, n)};
}

}  // namespace

bool cm_matrix_ok(int d, int n) {
  require(n >= 1, "level must be positive");
  auto c = cm_matrix(d);
  // minimal polynomial x^2 - t x + 1
  const int t = d == 3 ? -1 : d == 4 ? 0 : 1;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      long long sq = static_cast<long long>(c[i][0]) * c[0][j] + static_cast<long long>(c[i][1]) * c[1][j];
      if (md(sq - t * c[i][j] + (i == j ? 1 : 0), n) != 0) return false;
    }
  return true;
}

std::vector<std::vector<Vec2>> subgroups_z2(int n) {
  require(n >= 1 && n <= 64, "level must lie in 1..64");
  std::set<std::vector<Vec2>> found;
  for (int a = 0; a < n * n; ++a)
    for (int b = a; b < n * n; ++b) {
      Vec2 u{a / n, a % n}, v{b / n, b % n};
      std::set<Vec2> s;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          s.insert({md(static_cast<long long>(i) * u.first + static_cast<long long>(j) * v.first, n),
                    md(static_cast<long long>(i) * u.second + static_cast<long long>(j) * v.second, n)});
      found.insert(std::vector<Vec2>(s.begin(), s.end()));
    }
  std::vector<std::vector<Vec2>> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& x, const auto& y) { return x.size() < y.size(); });
  return out;
}

std::vector<std::vector<Vec2>> cm_stable_subgroups(int d, int n) {
  auto c = cm_matrix(d);
  std::vector<std::vector<Vec2>> out;
  for (auto& s : subgroups_z2(n)) {
    std::set<Vec2> set(s.begin(), s.end());
    bool ok = std::all_of(s.begin(), s.end(), [&](Vec2 v) { return set.count(apply(c, v, n)) > 0; });
    if (ok) out.push_back(s);
  }
  return out;
}

CmModule cm_module(int d, int n) {
  ensure(cm_matrix_ok(d, n), "companion matrix fails its minimal polynomial");
  return CmModule{d, n, cm_matrix(d), cm_stable_subgroups(d, n)};
}

CayleyGroup build_genus1_group(int d, int n, const std::vector<Vec2>& j) {
  auto c = cm_matrix(d);
  std::vector<Vec2> js(j);
  std::sort(js.begin(), js.end());
  require(!js.empty() && js[0] == Vec2{0, 0}, "J must contain 0");
  for (auto& v : js) require(v.first >= 0 && v.first < n && v.second >= 0 && v.second < n, "J element out of range");
  std::set<Vec2> set(js.begin(), js.end());
  require(set.size() == js.size(), "J has repeated elements");
  for (auto& v : js) {
    require(set.count(apply(c, v, n)) > 0, "J is not stable under the CM matrix");
    for (auto& w : js)
      require(set.count({md(v.first + w.first, n), md(v.second + w.second, n)}) > 0, "J is not a subgroup");
  }
  const int m = static_cast<int>(js.size());
  const int order = m * d;
  require(order <= CayleyGroup::kMaxOrder, "group too large");
  auto pos = [&](Vec2 v) { return static_cast<int>(std::lower_bound(js.begin(), js.end(), v) - js.begin()); };
  // powers of C applied to J
  std::vector<std::vector<int>> cpow(d, std::vector<int>(m));
  for (int i = 0; i < m; ++i) {
    Vec2 v = js[i];
    for (int k = 0; k < d; ++k) {
      cpow[k][i] = pos(v);
      v = apply(c, v, n);
    }
    ensure(v == js[i], "C^d is not the identity on J");
  }
  std::vector<int> table(static_cast<std::size_t>(order) * order);
  for (int k1 = 0; k1 < d; ++k1)
    for (int i1 = 0; i1 < m; ++i1)
      for (int k2 = 0; k2 < d; ++k2)
        for (int i2 = 0; i2 < m; ++i2) {
          Vec2 a = js[i1], b = js[cpow[k1][i2]];
          int j = pos({md(a.first + b.first, n), md(a.second + b.second, n)});
          table[static_cast<std::size_t>(k1 * m + i1) * order + k2 * m + i2] = ((k1 + k2) % d) * m + j;
        }
  std::vector<int> gens{m};  // (0, 1)
  for (int i = 1; i < m; ++i) gens.push_back(i);
  return CayleyGroup::from_valid_table(order, std::move(table), gens);
}

namespace {

Cyclotomic j_num(int t) {
  Cyclotomic z = Cyclotomic::zeta(t);
  Cyclotomic one(t, Rational(1));
  Cyclotomic q = z * z - z + one;
  return q * q * q * Rational(256);
}

Cyclotomic j_den(int t) {
  Cyclotomic z = Cyclotomic::zeta(t);
  Cyclotomic one(t, Rational(1));
  Cyclotomic w = z - one;
  return z * z * w * w;
}

long long pow_mod(long long b, long long e, long long m) {
  long long r = 1 % m;
  b %= m;
  for (; e > 0; e >>= 1, b = static_cast<long long>(static_cast<__int128>(b) * b % m))
    if (e & 1) r = static_cast<long long>(static_cast<__int128>(r) * b % m);
  return r;
}

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

}  // namespace

Cyclotomic j_invariant(int t) {
  require(t > 1, "t must exceed 1");
  return j_num(t) * j_den(t).inverse();
}

int j_invariant_degree(int t) {
  require(t > 1 && t % 2 == 1, "t must be odd and greater than 1");
  // j(zeta^a) = j(zeta) is decided exactly; values that differ after reducing
  // at a prime p = 1 mod t (zeta -> w, w of order t) certainly differ.
  long long p = t + 1;
  while (!is_prime(p)) p += t;
  long long g = 2;
  for (;; ++g) {
    bool prim = true;
    long long q = p - 1;
    for (long long f = 2; f * f <= q; ++f)
      if (q % f == 0) {
        if (pow_mod(g, (p - 1) / f, p) == 1) prim = false;
        while (q % f == 0) q /= f;
      }
    if (q > 1 && pow_mod(g, (p - 1) / q, p) == 1) prim = false;
    if (prim) break;
  }
  long long w = pow_mod(g, (p - 1) / t, p);
  auto j_mod = [&](long long a) {
    long long x = pow_mod(w, a, p);
    long long q = ((x * x - x + 1) % p + p) % p;
    long long num = 256 % p * pow_mod(q, 3, p) % p;
    long long e = ((x - 1) % p + p) % p;
    long long den = x * x % p * (e * e % p) % p;
    return std::make_pair(num, den);
  };
  auto [n1, d1] = j_mod(1);
  Cyclotomic num = j_num(t), den = j_den(t);
  int stab = 0, units = 0;
  for (int a = 1; a < t; ++a) {
    if (std::gcd(a, t) != 1) continue;
    ++units;
    auto [na, da] = j_mod(a);
    if (static_cast<__int128>(na) * d1 % p != static_cast<__int128>(n1) * da % p) continue;
    if (num.galois(a) * den == num * den.galois(a)) ++stab;
  }
  ensure(stab >= 1 && units % stab == 0, "stabilizer size does not divide phi(t)");
  return units / stab;
}

}  // namespace belyi
