#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "belyi/constructions.hpp"
#include "belyi/error.hpp"
#include "belyi/perm_group.hpp"

using namespace belyi;

namespace {

Permutation cyc(int n, std::vector<std::vector<int>> c) { return Permutation::from_cycles(n, c); }

// Classes by direct conjugation over all elements.
std::multiset<long long> brute_class_sizes(const PermGroup& g) {
  const auto& el = g.elements();
  std::set<Permutation> seen;
  std::multiset<long long> sizes;
  for (const auto& x : el) {
    if (seen.count(x)) continue;
    std::set<Permutation> cls;
    for (const auto& h : el) cls.insert(h.inverse() * x * h);
    for (const auto& y : cls) seen.insert(y);
    sizes.insert(static_cast<long long>(cls.size()));
  }
  return sizes;
}

long long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST_CASE("composition applies the left factor first") {
  Permutation p = cyc(3, {{1, 2}});
  Permutation q = cyc(3, {{2, 3}});
  Permutation pq = p * q;
  for (int i = 0; i < 3; ++i) CHECK(pq[i] == q[p[i]]);
  CHECK(pq == cyc(3, {{1, 3, 2}}));
  CHECK((p * p.inverse()).is_identity());
  CHECK(cyc(5, {{1, 2, 3}, {4, 5}}).order() == 6);
  CHECK(cyc(5, {{1, 2, 3}}).pow(-1) == cyc(5, {{1, 3, 2}}));
  CHECK(Permutation::from_one_based({2, 3, 1}).one_based() == std::vector<int>{2, 3, 1});
}

TEST_CASE("invalid permutations are rejected") {
  CHECK_THROWS_AS(Permutation({0, 0, 1}), PreconditionError);
  CHECK_THROWS_AS(Permutation({0, 3}), PreconditionError);
  CHECK_THROWS_AS(Permutation::from_one_based({0, 1}), PreconditionError);
  CHECK_THROWS_AS(cyc(3, {{1, 4}}), PreconditionError);
}

TEST_CASE("symmetric and alternating orders") {
  for (int n = 1; n <= 6; ++n) {
    CHECK(symmetric_group(n).order() == factorial(n));
    if (n >= 2) CHECK(alternating_group(n).order() == factorial(n) / 2);
  }
  PermGroup s4 = symmetric_group(4);
  CHECK(s4.element(0).is_identity());
  CHECK(std::is_sorted(s4.elements().begin(), s4.elements().end()));
  for (int i = 0; i < s4.order(); ++i) {
    CHECK(s4.index_of(s4.element(i)) == i);
    CHECK(s4.element(s4.inv(i)) == s4.element(i).inverse());
    for (int j = 0; j < s4.order(); j += 5)
      CHECK(s4.element(s4.mul(i, j)) == s4.element(i) * s4.element(j));
  }
}

TEST_CASE("conjugacy classes agree with direct conjugation") {
  for (const PermGroup& g : {symmetric_group(4), alternating_group(5), dihedral_perm_group(5),
                             dihedral_perm_group(6)}) {
    auto cls = conjugacy_classes(g);
    std::multiset<long long> sizes;
    long long total = 0;
    for (const auto& c : cls) {
      sizes.insert(c.size);
      total += c.size;
      CHECK(g.class_of(c.rep) == static_cast<int>(&c - cls.data()));
    }
    CHECK(total == g.order());
    CHECK(sizes == brute_class_sizes(g));
  }
  CHECK(conjugacy_classes(alternating_group(5)).size() == 5);
  CHECK(conjugacy_classes(dihedral_perm_group(5)).size() == 4);
}

TEST_CASE("power map") {
  PermGroup a5 = alternating_group(5);
  auto cls = conjugacy_classes(a5);
  for (int c = 0; c < static_cast<int>(cls.size()); ++c)
    for (int k = -3; k <= 7; ++k) CHECK(power_map(a5, c, k) == a5.class_of(cls[c].rep.pow(k)));
}

TEST_CASE("stabilizer normalizer and transitivity") {
  PermGroup s5 = symmetric_group(5);
  PermGroup st = stabilizer(s5, 3);
  CHECK(st.order() == 24);
  for (const auto& p : st.elements()) CHECK(p[2] == 2);
  CHECK(is_subgroup(st, s5));
  CHECK(s5.is_transitive());
  CHECK_FALSE(st.is_transitive());
  CHECK(st.orbit(2) == std::vector<int>{2});

  PermGroup c5 = s5.subgroup({cyc(5, {{1, 2, 3, 4, 5}})});
  PermGroup nn = normalizer(s5, c5);
  long long brute = 0;
  for (const auto& g : s5.elements()) {
    bool ok = true;
    for (const auto& c : c5.elements()) ok = ok && c5.contains(g.inverse() * c * g);
    brute += ok;
  }
  CHECK(nn.order() == brute);
  CHECK(nn.order() == 20);
  CHECK(c5.is_abelian());
}

TEST_CASE("coset action on right cosets") {
  PermGroup s4 = symmetric_group(4);
  PermGroup h = stabilizer(s4, 4);
  CosetAction ca = coset_action(s4, h);
  CHECK(ca.image.degree() == 4);
  CHECK(ca.image.order() == 24);
  CHECK(ca.reps.size() == 4);
  // coset of x*g is the image of coset of x under g
  for (int i = 0; i < s4.order(); ++i) {
    const auto& x = s4.element(i);
    CHECK(h.contains(x * ca.reps[ca.coset_of[i]].inverse()));
    for (const auto& g : s4.generators()) {
      int j = s4.index_of(x * g);
      CHECK(ca.coset_of[j] == ca.image_of(g)[ca.coset_of[i]]);
    }
  }
  CHECK(ca.coset_of[0] == 0);
}
