#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <set>

#include "belyi/constructions.hpp"
#include "belyi/descent.hpp"
#include "belyi/error.hpp"
#include "belyi/genus1.hpp"

using namespace belyi;

namespace {

int orbits(const Permutation& p) {
  std::vector<char> seen(p.degree(), 0);
  int k = 0;
  for (int i = 0; i < p.degree(); ++i) {
    if (seen[i]) continue;
    ++k;
    for (int u = i; !seen[u]; u = p[u]) seen[u] = 1;
  }
  return k;
}

// Distinct values of j at the primitive t-th roots of unity, in floating point.
int numeric_orbit(int t) {
  std::vector<std::complex<double>> vals;
  for (int a = 1; a < t; ++a) {
    if (std::gcd(a, t) != 1) continue;
    std::complex<double> z = std::polar(1.0, 2 * M_PI * a / t);
    std::complex<double> j = 256.0 * std::pow(z * z - z + 1.0, 3) / (z * z * (z - 1.0) * (z - 1.0));
    bool seen = false;
    for (auto v : vals) seen = seen || std::abs(v - j) < 1e-6 * (1 + std::abs(j));
    if (!seen) vals.push_back(j);
  }
  return static_cast<int>(vals.size());
}

// Subgroups of (Z/n)^2 stable under c, by testing every subset.
std::set<std::vector<Vec2>> brute_stable(int d, int n) {
  auto c = cm_matrix(d);
  const int sz = n * n;
  std::set<std::vector<Vec2>> out;
  for (long long mask = 1; mask < (1LL << sz); mask += 2) {
    auto in = [&](int a, int b) {
      int k = ((a % n + n) % n) * n + ((b % n + n) % n);
      return (mask >> k) & 1;
    };
    bool ok = true;
    std::vector<Vec2> s;
    for (int k = 0; k < sz && ok; ++k) {
      if (!((mask >> k) & 1)) continue;
      int a = k / n, b = k % n;
      s.push_back({a, b});
      ok = in(c[0][0] * a + c[0][1] * b, c[1][0] * a + c[1][1] * b);
      for (int l = 0; l < sz && ok; ++l)
        if ((mask >> l) & 1) ok = in(a + l / n, b + l % n);
    }
    if (ok) out.insert(s);
  }
  return out;
}

}  // namespace

TEST_CASE("inertia triples") {
  std::vector<InertiaTriple> brute;
  for (int a = 2; a <= 100; ++a)
    for (int b = 2; b <= a; ++b)
      for (int c = 2; c <= b; ++c)
        if (b * c + a * c + a * b == a * b * c) brute.push_back({a, b, c});
  std::sort(brute.begin(), brute.end());
  CHECK(inertia_triples() == brute);
  CHECK(brute.size() == 3);
}

TEST_CASE("Kummer covers have genus one and descend") {
  for (auto [a, b, d] : kummer_admissible()) {
    BelyiCover c = kummer_cover(a, b, d);
    Permutation z = c.z();
    int s = -2 * d + (d - orbits(c.x)) + (d - orbits(c.y)) + (d - orbits(z));
    CHECK(s / 2 + 1 == 1);
    CHECK(genus(c) == 1);
    CHECK(descent_report(c).verdict == Verdict::kDescends);
  }
  CHECK_THROWS_AS(kummer_cover(1, 1, 5), PreconditionError);
  CHECK_THROWS_AS(kummer_cover(2, 2, 4), PreconditionError);
  CHECK_THROWS_AS(kummer_cover(0, 1, 3), PreconditionError);
}

TEST_CASE("CM-stable subgroups match subset enumeration") {
  for (int d : {3, 4, 6})
    for (int n : {1, 2, 3, 4}) {
      CHECK(cm_matrix_ok(d, n));
      auto got = cm_stable_subgroups(d, n);
      std::set<std::vector<Vec2>> s(got.begin(), got.end());
      CHECK(s.size() == got.size());
      CHECK(s == brute_stable(d, n));
    }
  CHECK(subgroups_z2(2).size() == 5);
  CHECK(cm_module(4, 2).stable_subgroups.size() == 3);
}

TEST_CASE("genus one groups") {
  std::vector<Vec2> full{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  CayleyGroup g = build_genus1_group(3, 2, full);
  CHECK(g.order() == 12);
  CHECK(isomorphic(g, CayleyGroup::from_perm_group(alternating_group(4))));
  CHECK(isomorphic(build_genus1_group(3, 1, {{0, 0}}), cyclic_group(3)));
  CayleyGroup h = build_genus1_group(6, 3, cm_stable_subgroups(6, 3).back());
  CHECK(h.order() == 54);
  CHECK(h.generates(h.generator_indices()));
  CHECK_THROWS_AS(build_genus1_group(3, 2, {{0, 0}, {0, 1}}), PreconditionError);
  CHECK_THROWS_AS(build_genus1_group(3, 2, {{0, 1}}), PreconditionError);
}

TEST_CASE("j invariant") {
  Cyclotomic j3 = j_invariant(3);
  REQUIRE(j3.is_rational());
  CHECK(j3.rational_value() == Rational(2048, 3));
  CHECK(j_invariant_degree(3) == 1);
  CHECK(j_invariant_degree(5) == 2);
  for (int t = 3; t <= 45; t += 2) {
    CAPTURE(t);
    int deg = j_invariant_degree(t);
    CHECK(deg == numeric_orbit(t));
    CHECK(euler_phi(t) % deg == 0);
  }
  CHECK_THROWS_AS(j_invariant_degree(4), PreconditionError);
  CHECK_THROWS_AS(j_invariant_degree(1), PreconditionError);
}
