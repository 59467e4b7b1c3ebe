#include <doctest.h>

#include "belyi/character_table.hpp"
#include "belyi/constructions.hpp"
#include "belyi/error.hpp"

using namespace belyi;

namespace {

Permutation cyc(int n, std::vector<std::vector<int>> c) { return Permutation::from_cycles(n, c); }

long long brute_centralizer(const PermGroup& g, const Permutation& x) {
  long long k = 0;
  for (const auto& h : g.elements()) k += (h * x == x * h);
  return k;
}

int fixed_points_on_pairs(const Permutation& p) {
  int n = p.degree(), k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int a = p[i], b = p[j];
      k += (std::min(a, b) == i && std::max(a, b) == j);
    }
  return k;
}

}  // namespace

TEST_CASE("cyclotomic arithmetic") {
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(7) == 6);
  CHECK(cyclotomic_polynomial(6) == std::vector<long long>{1, -1, 1});
  Cyclotomic z = Cyclotomic::zeta(5);
  Cyclotomic sum(5);
  for (int k = 0; k < 5; ++k) sum += Cyclotomic::zeta(5, k);
  CHECK(sum.is_zero());
  CHECK((z * z.conj()) == Cyclotomic(5, 1));
  CHECK((z * z.inverse()) == Cyclotomic(5, 1));
  Cyclotomic w = Cyclotomic::zeta(3);
  CHECK((w + w.conj()).rational_value() == Rational(-1));
  CHECK(w.lift(6) == Cyclotomic::zeta(6, 2));
  Cyclotomic half = Cyclotomic(4, Rational(1, 2));
  CHECK_FALSE(half.is_integral());
  CHECK(Cyclotomic::zeta(4).galois(3) == Cyclotomic::zeta(4).conj());
  CHECK_THROWS(Cyclotomic::zeta(4).rational_value());
}

TEST_CASE("cyclic group of order 3") {
  auto t = character_table(cyclic_group(3));
  REQUIRE(t->size() == 3);
  CHECK(t->degrees() == std::vector<long long>{1, 1, 1});
  for (int r = 0; r < 3; ++r) {
    int gen = t->classes().class_of[1];
    Cyclotomic v = t->row(r)[gen];
    CHECK((v * v * v) == Cyclotomic(3, 1));
  }
  CHECK(t->row(0)[1] == Cyclotomic(3, 1));
}

TEST_CASE("degrees of S3 and A5") {
  CHECK(character_table(symmetric_group(3))->degrees() == std::vector<long long>{1, 1, 2});
  CHECK(character_table(alternating_group(5))->degrees() == std::vector<long long>{1, 3, 3, 4, 5});
  CHECK(character_table(symmetric_group(4))->degrees() == std::vector<long long>{1, 1, 2, 3, 3});
}

TEST_CASE("A5 characters from its permutation actions") {
  PermGroup a5 = alternating_group(5);
  auto t = character_table(a5);
  for (int c = 0; c < t->classes().count(); ++c) {
    const Permutation& g = a5.element(t->classes().reps[c]);
    Cyclotomic four = t->row(3)[c];
    Cyclotomic five = t->row(4)[c];
    CHECK(four.rational_value() == Rational(g.fixed_points() - 1));
    CHECK(five.rational_value() == Rational(fixed_points_on_pairs(g) - g.fixed_points()));
  }
}

TEST_CASE("orthogonality against brute centralizers") {
  for (const PermGroup& g : {symmetric_group(4), alternating_group(5), dihedral_perm_group(6)}) {
    auto t = character_table(g);
    int k = t->size();
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) CHECK(inner_product(*t, t->row(i), t->row(j)) == (i == j));
    for (int a = 0; a < k; ++a) {
      long long cent = brute_centralizer(g, g.element(t->classes().reps[a]));
      for (int b = 0; b < k; ++b) {
        Cyclotomic s(t->exponent());
        for (int r = 0; r < k; ++r) s += t->row(r)[a] * t->row(r)[b].conj();
        CHECK(s == Cyclotomic(t->exponent(), a == b ? cent : 0));
      }
    }
  }
}

TEST_CASE("fixed space dimensions and permutation character") {
  PermGroup a5 = alternating_group(5);
  auto t = character_table(a5);
  Permutation g3 = cyc(5, {{1, 2, 3}});
  CHECK(fixed_space_dim(*t, 3, g3) == 2);
  CHECK(fixed_space_dim(*t, 1, cyc(5, {{1, 2, 3, 4, 5}})) == 1);
  CHECK(fixed_space_dim(*t, 4, g3) == 1);
  CHECK(fixed_space_dim(*t, 0, g3) == 1);
  VirtualCharacter pc = perm_character(t);
  CHECK(pc.mults == std::vector<long long>{1, 0, 0, 1, 0});
  CHECK(pc.is_genuine());
  CHECK(pc.degree() == 5);
  VirtualCharacter reg = regular_character(t);
  CHECK(reg.mults == std::vector<long long>{1, 3, 3, 4, 5});
  CHECK(inner_product(reg, reg) == 60);
  CHECK(decompose(t, reg.values()) == reg);
  CHECK((reg - pc).degree() == 55);
}

TEST_CASE("restriction to a cyclic subgroup") {
  PermGroup s3 = symmetric_group(3);
  auto t = character_table(s3);
  PermGroup c3 = s3.subgroup({cyc(3, {{1, 2, 3}})});
  auto tc = character_table(c3);
  VirtualCharacter r = restrict(irreducible(t, 2), tc);
  CHECK(r.degree() == 2);
  CHECK(r.mults == std::vector<long long>{0, 1, 1});
  VirtualCharacter sgn = restrict(irreducible(t, 1), tc);
  CHECK(sgn.mults == std::vector<long long>{1, 0, 0});
}

TEST_CASE("deterministic across seeds") {
  PermGroup s4 = symmetric_group(4);
  auto a = character_table(s4, 1);
  auto b = character_table(s4, 99);
  REQUIRE(a->size() == b->size());
  for (int r = 0; r < a->size(); ++r) CHECK(a->row(r) == b->row(r));
}
