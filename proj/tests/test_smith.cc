#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "belyi/error.hpp"
#include "belyi/smith.hpp"

using namespace belyi;

namespace {

IntMatrix random_matrix(int r, int c, long long e, std::mt19937_64& rng) {
  IntMatrix a(r, std::vector<long long>(c));
  for (auto& row : a)
    for (auto& x : row) x = static_cast<long long>(rng() % e);
  return a;
}

IntMatrix mul(const IntMatrix& a, const IntMatrix& b, long long e) {
  IntMatrix c(a.size(), std::vector<long long>(b.empty() ? 0 : b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < c[i].size(); ++j) c[i][j] = (c[i][j] + a[i][k] * b[k][j]) % e;
  return c;
}

// Calls f on every vector of (Z/m_0) x ... x (Z/m_{n-1}).
template <class F>
void each_vector(const std::vector<long long>& m, F f) {
  std::vector<long long> v(m.size(), 0);
  while (true) {
    f(v);
    std::size_t i = 0;
    while (i < v.size() && ++v[i] == m[i]) v[i++] = 0;
    if (i == v.size()) return;
  }
}

std::vector<long long> apply(const IntMatrix& a, const std::vector<long long>& x, long long e) {
  std::vector<long long> y(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) y[i] = (y[i] + a[i][j] * x[j]) % e;
  return y;
}

}  // namespace

TEST_CASE("smith form diagonalizes") {
  std::mt19937_64 rng(3);
  for (long long e : {2LL, 4LL, 6LL, 12LL, 30LL, 64LL}) {
    for (int trial = 0; trial < 20; ++trial) {
      int r = 1 + static_cast<int>(rng() % 5), c = 1 + static_cast<int>(rng() % 5);
      IntMatrix a = random_matrix(r, c, e, rng);
      SmithForm s = smith_mod(a, e);
      IntMatrix d = mul(mul(s.U, a, e), s.C, e);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) {
          long long want = (i == j && i < static_cast<int>(s.diag.size())) ? s.diag[i] % e : 0;
          CHECK(mod_normalize(d[i][j], e) == want);
        }
      for (long long x : s.diag) CHECK((x == 0 || e % x == 0));
      IntMatrix id = mul(s.U, s.Uinv, e);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) CHECK(id[i][j] == (i == j ? 1 % e : 0));
    }
  }
}

TEST_CASE("solve and kernel agree with enumeration") {
  std::mt19937_64 rng(5);
  for (long long e : {2LL, 4LL, 6LL, 9LL}) {
    for (int trial = 0; trial < 15; ++trial) {
      int r = 1 + static_cast<int>(rng() % 3), c = 1 + static_cast<int>(rng() % 3);
      IntMatrix a = random_matrix(r, c, e, rng);
      SmithForm s = smith_mod(a, e);
      std::set<std::vector<long long>> image, kernel;
      each_vector(std::vector<long long>(c, e), [&](const std::vector<long long>& x) {
        auto y = apply(a, x, e);
        image.insert(y);
        if (std::all_of(y.begin(), y.end(), [](long long v) { return v == 0; })) kernel.insert(x);
      });
      each_vector(std::vector<long long>(r, e), [&](const std::vector<long long>& y) {
        auto x = solve_mod(s, y);
        CHECK(x.has_value() == (image.count(y) > 0));
        if (x) CHECK(apply(a, *x, e) == y);
      });
      std::set<std::vector<long long>> span{std::vector<long long>(c, 0)};
      for (const auto& k : kernel_mod(s)) {
        CHECK(kernel.count(k) == 1);
        std::set<std::vector<long long>> next = span;
        for (const auto& v : span) {
          std::vector<long long> w = v;
          for (long long t = 1; t < e; ++t) {
            for (int i = 0; i < c; ++i) w[i] = (w[i] + k[i]) % e;
            next.insert(w);
          }
        }
        span = next;
      }
      CHECK(span.size() == kernel.size());
    }
  }
}

TEST_CASE("maps between finite abelian groups") {
  // Z/4 x Z/2 -> Z/4, (a, b) -> a + 2b
  AbelianShape a{{4, 2}}, b{{4}};
  AbelianMap f(a, b, {{1, 2}});
  for (long long y = 0; y < 4; ++y) {
    auto x = f.preimage({y});
    REQUIRE(x.has_value());
    CHECK(((*x)[0] + 2 * (*x)[1]) % 4 == y);
  }
  // Z/2 -> Z/4, a -> 2a has image {0, 2}
  AbelianMap g(AbelianShape{{2}}, b, {{2}});
  for (long long y = 0; y < 4; ++y) {
    CHECK(g.preimage({y}).has_value() == (y % 2 == 0));
    auto ob = g.obstruction({y});
    bool zero = true;
    for (std::size_t k = 0; k < ob.size(); ++k) zero = zero && ob[k] % g.obstruction_moduli()[k] == 0;
    CHECK(zero == (y % 2 == 0));
  }
  CHECK_THROWS_AS(AbelianMap(AbelianShape{{2}}, b, {{1}}), PreconditionError);
}

TEST_CASE("random maps: obstruction vanishes exactly on the image") {
  std::mt19937_64 rng(9);
  const std::vector<long long> mods{2, 3, 4, 6};
  for (int trial = 0; trial < 40; ++trial) {
    AbelianShape a, b;
    int n = 1 + static_cast<int>(rng() % 2), m = 1 + static_cast<int>(rng() % 2);
    for (int i = 0; i < n; ++i) a.moduli.push_back(mods[rng() % mods.size()]);
    for (int i = 0; i < m; ++i) b.moduli.push_back(mods[rng() % mods.size()]);
    IntMatrix t(m, std::vector<long long>(n));
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < n; ++c) {
        // smallest step making the entry well defined
        long long step = b.moduli[r] / std::gcd(b.moduli[r], a.moduli[c]);
        t[r][c] = step * static_cast<long long>(rng() % b.moduli[r]) % b.moduli[r];
      }
    AbelianMap f(a, b, t);
    std::set<std::vector<long long>> image;
    each_vector(a.moduli, [&](const std::vector<long long>& x) {
      std::vector<long long> y(m, 0);
      for (int r = 0; r < m; ++r) {
        for (int c = 0; c < n; ++c) y[r] += t[r][c] * x[c];
        y[r] = mod_normalize(y[r], b.moduli[r]);
      }
      image.insert(y);
    });
    each_vector(b.moduli, [&](const std::vector<long long>& y) {
      auto ob = f.obstruction(y);
      bool zero = true;
      for (std::size_t k = 0; k < ob.size(); ++k) zero = zero && ob[k] % f.obstruction_moduli()[k] == 0;
      CHECK(zero == (image.count(y) > 0));
      CHECK(f.preimage(y).has_value() == (image.count(y) > 0));
    });

    // kernel modulo the subgroup generated by one random kernel element
    std::vector<std::vector<long long>> ker;
    each_vector(a.moduli, [&](const std::vector<long long>& x) {
      std::vector<long long> y(m, 0);
      bool z = true;
      for (int r = 0; r < m; ++r) {
        for (int c = 0; c < n; ++c) y[r] += t[r][c] * x[c];
        z = z && mod_normalize(y[r], b.moduli[r]) == 0;
      }
      if (z) ker.push_back(x);
    });
    const auto& gen = ker[rng() % ker.size()];
    std::set<std::vector<long long>> sub;
    std::vector<long long> w(n, 0);
    do {
      sub.insert(w);
      for (int i = 0; i < n; ++i) w[i] = (w[i] + gen[i]) % a.moduli[i];
    } while (!sub.count(w));
    Subquotient q(a, b, t, {gen});
    CHECK(q.order() * static_cast<long long>(sub.size()) == static_cast<long long>(ker.size()));
    for (const auto& x : ker) CHECK(q.in_kernel(x));
  }
}
