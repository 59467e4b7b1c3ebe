#include <doctest.h>

#include <random>
#include <set>

#include "belyi/constructions.hpp"
#include "belyi/error.hpp"
#include "belyi/relmod.hpp"

using namespace belyi;

namespace {

FreeWord random_word(int d, int len, std::mt19937_64& rng) {
  std::vector<int> l;
  for (int i = 0; i < len; ++i) {
    int g = 1 + static_cast<int>(rng() % d);
    l.push_back(rng() % 2 ? g : -g);
  }
  return FreeWord(l);
}

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c(a.size(), std::vector<long long>(b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

CayleyGroup s3() { return CayleyGroup::from_perm_group(symmetric_group(3)); }

}  // namespace

TEST_CASE("free words reduce") {
  FreeWord a({1, 2, -2, -1, 1});
  CHECK(a == FreeWord::generator(1));
  CHECK((a * a.inverse()).empty());
  CHECK(FreeWord({1, -2}).str() == "x y^-1");
  CHECK(FreeWord().str() == "1");
}

TEST_CASE("Schreier generators for Z/2 of rank 2") {
  RelationModule rm(cyclic_group(2), {1, 0});
  CHECK(rm.rank() == 3);
  std::set<std::string> names;
  for (const auto& w : rm.free_generators()) names.insert(w.str());
  CHECK(names == std::set<std::string>{"y", "x^2", "x y x^-1"});
  CHECK(rm.transversal(0).empty());
}

TEST_CASE("rewriting is additive and inverts the generators") {
  std::mt19937_64 rng(31);
  for (int d : {1, 2, 3}) {
    CayleyGroup h = s3();
    std::vector<int> images;
    auto gens = h.generator_indices();
    for (int i = 0; i < d; ++i) images.push_back(i < static_cast<int>(gens.size()) ? gens[i] : 0);
    if (!h.generates(images)) continue;
    RelationModule rm(h, images);
    CHECK(rm.rank() == h.order() * (d - 1) + 1);
    for (int j = 0; j < rm.rank(); ++j) {
      std::vector<long long> e(rm.rank(), 0);
      e[j] = 1;
      CHECK(rewrite(rm, rm.free_generators()[j]) == e);
    }
    auto in_r = [&](FreeWord w) { return w * rm.transversal(rm.schreier().evaluate(w)).inverse(); };
    for (int trial = 0; trial < 30; ++trial) {
      FreeWord u = in_r(random_word(d, 6, rng)), v = in_r(random_word(d, 6, rng));
      CHECK(rm.schreier().evaluate(u) == 0);
      auto ru = rewrite(rm, u), rv = rewrite(rm, v), ruv = rewrite(rm, u * v);
      for (int j = 0; j < rm.rank(); ++j) CHECK(ruv[j] == ru[j] + rv[j]);
      auto rinv = rewrite(rm, u.inverse());
      for (int j = 0; j < rm.rank(); ++j) CHECK(rinv[j] == -ru[j]);
    }
  }
}

TEST_CASE("conjugation action is a representation with the expected traces") {
  for (auto [h, d] : {std::pair{s3(), 2}, std::pair{cyclic_group(4), 2},
                      std::pair{CayleyGroup::from_perm_group(alternating_group(4)), 2},
                      std::pair{cyclic_group(3), 3}}) {
    std::vector<int> images;
    auto gens = h.generator_indices();
    for (int i = 0; i < d; ++i) images.push_back(i < static_cast<int>(gens.size()) ? gens[i] : 0);
    RelationModule rm(h, images);
    const int n = h.order();
    for (int a = 0; a < n; ++a) {
      long long tr = 0;
      for (int i = 0; i < rm.rank(); ++i) tr += rm.action(a)[i][i];
      CHECK(tr == (a == 0 ? rm.rank() : 1));
      for (int b = 0; b < n; ++b) CHECK(matmul(rm.action(a), rm.action(b)) == rm.action(h.mul(a, b)));
    }
    auto t = character_table(h);
    CHECK(rational_character(rm, t) == expected_relation_character(t, d));
  }
}

TEST_CASE("rank one presentation of a cyclic group gives a cyclic extension") {
  for (int k : {2, 3, 4}) {
    for (long long m : {2LL, 3LL}) {
      RelationModule rm(cyclic_group(k), {1});
      Cocycle2 beta = extension_cocycle(rm, m);
      ExtensionGroup e = build_extension(beta);
      CHECK(isomorphic(e.group, cyclic_group(static_cast<int>(k * m))));
    }
  }
}

TEST_CASE("main theorem on small cases") {
  MainTheoremReport r = verify_main_theorem(RelationModule(cyclic_group(2), {1, 0}), 2);
  CHECK(r.order_P == 16);
  CHECK(r.equal);
  CHECK(r.stabilizer.size() == r.restrictions.size());
  MainTheoremReport r3 = verify_main_theorem(RelationModule(cyclic_group(3), {1}), 3);
  CHECK(r3.order_P == 9);
  CHECK(r3.equal);
  CHECK(r3.beta_class.size() == r3.h2_invariants.size());
}

TEST_CASE("bad presentations") {
  CHECK_THROWS_AS(RelationModule(cyclic_group(2), {}), PreconditionError);
  CHECK_THROWS_AS(reduce_mod(RelationModule(cyclic_group(2), {1}), 1), PreconditionError);
  CHECK_THROWS(RelationModule(s3(), {1}));
}
