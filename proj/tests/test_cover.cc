#include <doctest.h>

#include <algorithm>
#include <random>

#include "belyi/constructions.hpp"
#include "belyi/cover.hpp"
#include "belyi/error.hpp"
#include "belyi/json_io.hpp"

using namespace belyi;

namespace {

BelyiCover load_cover(const std::string& name) {
  return cover_from_json(read_json_file(std::string(BELYI_DATA_DIR) + "/" + name));
}

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

int rh_genus(const BelyiCover& c) {
  Permutation z = (c.x * c.y).inverse();
  int s = -2 * c.degree + (c.degree - orbits(c.x)) + (c.degree - orbits(c.y)) + (c.degree - orbits(z));
  return s / 2 + 1;
}

Permutation random_perm(int n, std::mt19937_64& rng) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(v);
}

}  // namespace

TEST_CASE("genus of random covers matches Riemann-Hurwitz") {
  std::mt19937_64 rng(7);
  int tried = 0;
  while (tried < 60) {
    int n = 1 + static_cast<int>(rng() % 7);
    Permutation x = random_perm(n, rng), y = random_perm(n, rng);
    if (!PermGroup::generate({x, y}).is_transitive()) continue;
    ++tried;
    BelyiCover c = BelyiCover::from_monodromy(x, y);
    CHECK(genus(c) == rh_genus(c));
    CHECK((c.x * c.y * c.z()).is_identity());
  }
}

TEST_CASE("closure data of the degree five A5 cover") {
  BelyiCover c = load_cover("a5_deg5.json");
  ClosureData cd = validate(c);
  CHECK(cd.H.order() == 60);
  CHECK(cd.J.order() == 12);
  CHECK(cd.W.order() == 12);
  CHECK(cd.D.order() == 1);
  CHECK(cd.index_HW == 5);
  CHECK_FALSE(cd.is_galois);
  CHECK(genus(c) == 1);
  for (int b = 0; b < 3; ++b) {
    long long total = 0;
    for (const auto& r : cd.branch[b]) {
      total += r.e;
      CHECK(cd.W.contains(r.w));
      CHECK(r.d_order == 1);
    }
    CHECK(total == cd.index_HW);
  }
}

TEST_CASE("galois closure is regular") {
  BelyiCover base = load_cover("a5_deg5.json");
  BelyiCover g = BelyiCover::galois(base.x, base.y);
  CHECK(g.degree == 60);
  ClosureData cd = validate(g);
  CHECK(cd.is_galois);
  CHECK(cd.J.order() == 1);
  CHECK(cd.D.order() == 60);
  CHECK(cd.index_HW == 1);
  for (int b = 0; b < 3; ++b) {
    REQUIRE(cd.branch[b].size() == 1);
    CHECK(cd.branch[b][0].d_order == g.sigma(b).order());
  }
  CHECK(cd.points_of_Z() == 3);
}

TEST_CASE("cosets of a subgroup") {
  PermGroup s4 = symmetric_group(4);
  Permutation x = Permutation::from_cycles(4, {{1, 2}});
  Permutation y = Permutation::from_cycles(4, {{1, 2, 3, 4}});
  PermGroup v = s4.subgroup({Permutation::from_cycles(4, {{1, 2}, {3, 4}}),
                             Permutation::from_cycles(4, {{1, 3}, {2, 4}})});
  BelyiCover c = BelyiCover::on_cosets(x, y, v);
  CHECK(c.degree == 6);
  ClosureData cd = validate(c);
  CHECK(cd.H.order() == 6);
  CHECK(cd.is_galois);
}

TEST_CASE("Tate characters are consistent") {
  BelyiCover c = load_cover("cubic.json");
  ClosureData cd = validate(c);
  auto t = character_table(cd.D);
  TateCharacters tc = tate_characters(cd, t);
  CHECK(tc.jac.degree() == 2 * genus(c));
  CHECK(tc.middle == tc.left + tc.jac);
  CHECK(tc.jac.is_genuine());
  CHECK(decompose(t, deck_coset_character(cd, *t)) == cd.index_HW * regular_character(t));
}

TEST_CASE("bad monodromy is rejected") {
  Permutation x = Permutation::from_cycles(4, {{1, 2}});
  Permutation y = Permutation::from_cycles(4, {{3, 4}});
  CHECK_THROWS_AS(BelyiCover::from_monodromy(x, y), PreconditionError);
  CHECK_THROWS_AS(BelyiCover::from_monodromy(x, Permutation::identity(3)), PreconditionError);
  CHECK_THROWS_AS(BelyiCover{}.sigma(3), PreconditionError);
}
