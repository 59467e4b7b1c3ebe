#include <doctest.h>

#include <set>

#include "belyi/constructions.hpp"
#include "belyi/error.hpp"
#include "belyi/gaschuetz.hpp"

using namespace belyi;

namespace {

bool brute_generates(const CayleyGroup& g, const std::vector<int>& t) {
  std::set<int> s{0};
  bool grew = true;
  while (grew) {
    grew = false;
    for (int x : std::vector<int>(s.begin(), s.end()))
      for (int y : t)
        if (s.insert(g.mul(x, y)).second) grew = true;
  }
  return static_cast<int>(s.size()) == g.order();
}

int brute_rank(const CayleyGroup& g) {
  if (g.order() == 1) return 0;
  for (int d = 1;; ++d) {
    std::vector<int> t(d, 0);
    for (;;) {
      if (brute_generates(g, t)) return d;
      int i = 0;
      while (i < d && ++t[i] == g.order()) t[i++] = 0;
      if (i == d) break;
    }
  }
}

CayleyGroup s4() { return CayleyGroup::from_perm_group(symmetric_group(4)); }
CayleyGroup s3() { return CayleyGroup::from_perm_group(symmetric_group(3)); }

// S4 -> S3 through the action on the three pairings of {1,2,3,4}.
std::vector<int> s4_to_s3() {
  PermGroup g = symmetric_group(4);
  PermGroup v = g.subgroup({Permutation::from_cycles(4, {{1, 2, 3, 4}}),
                            Permutation::from_cycles(4, {{1, 3}})});
  CosetAction ca = coset_action(g, v);
  PermGroup s = symmetric_group(3);
  std::vector<int> psi(g.order());
  for (int i = 0; i < g.order(); ++i) psi[i] = s.index_of(ca.image_of(g.element(i)));
  return psi;
}

}  // namespace

TEST_CASE("minimal generator numbers") {
  for (const auto& ng : small_groups(16)) {
    CAPTURE(ng.name);
    CHECK(min_generators(ng.group) == brute_rank(ng.group));
  }
  CHECK(min_generators(direct_product(direct_product(cyclic_group(2), cyclic_group(2)), cyclic_group(2))) == 3);
  CHECK(min_generators(s4()) == 2);
}

TEST_CASE("generating tuples") {
  CHECK(generating_tuples(s3(), 2).size() == 18);
  CHECK(generating_tuples(cyclic_group(6), 1).size() == 2);
  auto t = generating_tuple(s3(), 2);
  REQUIRE(t.has_value());
  CHECK(brute_generates(s3(), *t));
  CHECK(*t == generating_tuples(s3(), 2).front());
  CHECK_FALSE(generating_tuple(s3(), 1).has_value());
}

TEST_CASE("lifting along S4 -> S3") {
  auto psi = s4_to_s3();
  CayleyGroup g1 = s4(), g2 = s3();
  for (const auto& s2 : generating_tuples(g2, 2)) {
    SurjectionProblem p = SurjectionProblem::from_map(g1, g2, psi, s2);
    std::vector<int> s1 = lift_generators(p);
    REQUIRE(s1.size() == 2);
    for (int i = 0; i < 2; ++i) CHECK(psi[s1[i]] == s2[i]);
    CHECK(brute_generates(g1, s1));
    long long brute = 0;
    std::vector<int> best;
    for (int a = 0; a < g1.order(); ++a)
      for (int b = 0; b < g1.order(); ++b)
        if (psi[a] == s2[0] && psi[b] == s2[1] && brute_generates(g1, {a, b})) {
          if (best.empty()) best = {a, b};
          ++brute;
        }
    CHECK(count_lifts(p) == brute);
    CHECK(s1 == best);
  }
}

TEST_CASE("bad problems") {
  auto psi = s4_to_s3();
  CayleyGroup g1 = s4(), g2 = s3();
  auto gens = generating_tuples(g2, 2).front();
  CHECK_THROWS_AS(SurjectionProblem::from_map(g1, g2, std::vector<int>(24, 0), gens), PreconditionError);
  CHECK_THROWS_AS(SurjectionProblem::from_map(g1, g2, {0, 1}, gens), PreconditionError);
  SurjectionProblem short_tuple = SurjectionProblem::from_map(g1, g2, psi, {gens[0]});
  CHECK_THROWS_AS(lift_generators(short_tuple), PreconditionError);
  SurjectionProblem not_gen = SurjectionProblem::from_map(g1, g2, psi, {0, 0});
  CHECK_THROWS_AS(lift_generators(not_gen), PreconditionError);
}
