#include <doctest.h>

#include <random>
#include <set>

#include "belyi/cohomology.hpp"
#include "belyi/constructions.hpp"
#include "belyi/error.hpp"
#include "belyi/json_io.hpp"
#include "belyi/modules.hpp"

using namespace belyi;

namespace {

// Cocycle identity h1.b(h2,h3) + b(h1,h2h3) = b(h1h2,h3) + b(h1,h2), evaluated directly.
bool is_cocycle(const FiniteHModule& m, const std::vector<ModElem>& t) {
  const CayleyGroup& h = m.group();
  const int n = h.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        ModElem l = m.add(m.act(a, t[b * n + c]), t[a * n + h.mul(b, c)]);
        ModElem r = m.add(t[h.mul(a, b) * n + c], t[a * n + b]);
        if (l != r) return false;
      }
  return true;
}

std::vector<ModElem> delta(const FiniteHModule& m, const std::vector<ModElem>& c) {
  const CayleyGroup& h = m.group();
  const int n = h.order();
  std::vector<ModElem> t(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a * n + b] = m.add(m.sub(m.act(a, c[b]), c[h.mul(a, b)]), c[a]);
  return t;
}

// |Z^2| / |B^2| over normalized cochains.
long long brute_h2_order(const FiniteHModule& m) {
  const int n = m.group().order();
  const long long sz = m.size();
  const int cells = (n - 1) * (n - 1);
  long long total = 1;
  for (int i = 0; i < cells; ++i) total *= sz;
  long long z2 = 0;
  std::vector<ModElem> t(n * n, m.zero());
  for (long long code = 0; code < total; ++code) {
    long long c = code;
    for (int a = 1; a < n; ++a)
      for (int b = 1; b < n; ++b) {
        t[a * n + b] = m.decode(c % sz);
        c /= sz;
      }
    z2 += is_cocycle(m, t);
  }
  std::set<std::vector<ModElem>> b2;
  long long cochains = 1;
  for (int i = 1; i < n; ++i) cochains *= sz;
  for (long long code = 0; code < cochains; ++code) {
    std::vector<ModElem> c(n, m.zero());
    long long x = code;
    for (int h = 1; h < n; ++h) {
      c[h] = m.decode(x % sz);
      x /= sz;
    }
    b2.insert(delta(m, c));
  }
  return z2 / static_cast<long long>(b2.size());
}

IntMatrix scalar(long long s) { return {{s}}; }

std::vector<FiniteHModule> small_modules() {
  CayleyGroup z2 = cyclic_group(2), z3 = cyclic_group(3), z4 = cyclic_group(4);
  CayleyGroup v4 = direct_product(z2, z2);
  IntMatrix swap{{0, 1}, {1, 0}};
  return {
      FiniteHModule::trivial(z2, {2}),
      FiniteHModule::trivial(z2, {4}),
      FiniteHModule::from_generator_action(z2, {4}, {scalar(-1)}),
      FiniteHModule::from_generator_action(z2, {2, 2}, {swap}),
      FiniteHModule::trivial(z3, {3}),
      FiniteHModule::trivial(z3, {2}),
      FiniteHModule::trivial(z4, {2}),
      FiniteHModule::trivial(v4, {2}),
      FiniteHModule::from_generator_action(v4, {2, 2}, {swap, IntMatrix{{1, 0}, {0, 1}}}),
      FiniteHModule::trivial(z2, {2, 2}),
  };
}

bool is_hom(const CayleyGroup& g, const std::vector<int>& f) {
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      if (f[g.mul(a, b)] != g.mul(f[a], f[b])) return false;
  return true;
}

// Whether (h, m) -> (h, gamma m + c(h)) is an automorphism of E for some normalized c.
bool brute_extends(const IntMatrix& gamma, const ExtensionGroup& e) {
  const FiniteHModule& m = e.module;
  const int n = m.group().order();
  const long long sz = m.size();
  long long total = 1;
  for (int i = 1; i < n; ++i) total *= sz;
  for (long long code = 0; code < total; ++code) {
    std::vector<ModElem> c(n, m.zero());
    long long x = code;
    for (int h = 1; h < n; ++h) {
      c[h] = m.decode(x % sz);
      x /= sz;
    }
    std::vector<int> f(e.group.order());
    for (int i = 0; i < e.group.order(); ++i) {
      auto [h, v] = e.split(i);
      f[i] = e.element(h, m.add(m.apply(gamma, v), c[h]));
    }
    if (is_hom(e.group, f)) return true;
  }
  return false;
}

std::vector<ModElem> random_cochain(const FiniteHModule& m, std::mt19937_64& rng) {
  std::vector<ModElem> c(m.group().order(), m.zero());
  for (std::size_t h = 1; h < c.size(); ++h) c[h] = m.decode(static_cast<long long>(rng() % m.size()));
  return c;
}

}  // namespace

TEST_CASE("H2 order agrees with cochain enumeration") {
  for (const auto& m : small_modules()) {
    SecondCohomology h(m);
    CAPTURE(m.group().order());
    CAPTURE(m.size());
    CHECK(h.order() == brute_h2_order(m));
  }
}

TEST_CASE("known second cohomology groups") {
  auto mods = small_modules();
  CHECK(h2(mods[0]).invariants() == std::vector<long long>{2});
  CHECK(h2(mods[2]).invariants() == std::vector<long long>{2});
  CHECK(h2(mods[3]).order() == 1);
  CHECK(h2(mods[4]).invariants() == std::vector<long long>{3});
  CHECK(h2(mods[5]).order() == 1);
  CHECK(h2(mods[7]).invariants() == std::vector<long long>{2, 2, 2});
}

TEST_CASE("classes are constant on cohomology classes") {
  std::mt19937_64 rng(17);
  for (const auto& m : small_modules()) {
    SecondCohomology h(m);
    std::vector<long long> inv = h.invariants();
    for (std::size_t i = 0; i < h.basis().size(); ++i) {
      std::vector<long long> e(inv.size(), 0);
      e[i] = 1;
      CHECK(h.class_of(h.basis()[i]) == e);
      CHECK(is_cocycle(m, h.basis()[i].table()));
    }
    for (int trial = 0; trial < 8; ++trial) {
      std::vector<long long> v(inv.size());
      for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<long long>(rng() % inv[i]);
      Cocycle2 rep = h.representative(v);
      CHECK(h.class_of(rep) == v);
      Cocycle2 moved = rep.plus_coboundary(random_cochain(m, rng));
      CHECK(is_cocycle(m, moved.table()));
      CHECK(h.class_of(moved) == v);
      CHECK(h.cohomologous(rep, moved));
      CHECK(h.class_of(rep + moved) == h.class_of(rep.scaled(2)));
    }
  }
}

TEST_CASE("extension class round trip") {
  std::mt19937_64 rng(23);
  for (const auto& m : small_modules()) {
    SecondCohomology h(m);
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<long long> v(h.invariants().size());
      for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<long long>(rng() % h.invariants()[i]);
      Cocycle2 beta = h.representative(v).plus_coboundary(random_cochain(m, rng));
      ExtensionGroup e = build_extension(beta);
      CHECK(e.group.order() == m.group().order() * m.size());
      auto proj = e.projection();
      const CayleyGroup& hg = m.group();
      for (int a = 0; a < e.group.order(); ++a)
        for (int b = 0; b < e.group.order(); b += 3)
          CHECK(proj[e.group.mul(a, b)] == hg.mul(proj[a], proj[b]));
      Cocycle2 back = extension_class(e.group, m, e.projection(), e.fiber(), e.section());
      CHECK(back == beta);
    }
  }
}

TEST_CASE("Z/4 twisted by Z/2 with a nonzero class gives Q8") {
  auto pm = module_from_json(read_json_file(std::string(BELYI_DATA_DIR) + "/z2_on_z4.json"));
  Cocycle2 beta = cocycle_from_json(pm.module, read_json_file(std::string(BELYI_DATA_DIR) + "/z2_z4_cocycle.json"));
  SecondCohomology h(pm.module);
  CHECK(h.class_of(beta) == std::vector<long long>{1});
  ExtensionGroup e = build_extension(beta);
  CHECK(isomorphic(e.group, dicyclic_group(2)));
  CHECK(isomorphic(build_extension(Cocycle2::zero(pm.module)).group, metacyclic(4, 2, 3)));
}

TEST_CASE("automorphism counts") {
  CHECK(automorphisms_of_abelian({2, 2}).size() == 6);
  CHECK(automorphisms_of_abelian({2, 2, 2}).size() == 168);
  CHECK(automorphisms_of_abelian({4}).size() == 2);
  CHECK(automorphisms_of_abelian({2, 4}).size() == 8);
  CHECK(automorphisms_of_abelian({4, 4}).size() == 96);
  CHECK(automorphisms_of_abelian({3, 3}).size() == 48);
  auto mods = small_modules();
  CHECK(aut_h(mods[3]).size() == 2);  // centralizer of the swap in GL2(2)
  CHECK(aut_h(mods[7]).size() == 1);
  CHECK(aut_h(mods[9]).size() == 6);
}

TEST_CASE("extension of automorphisms matches brute force") {
  std::mt19937_64 rng(29);
  for (const auto& m : small_modules()) {
    SecondCohomology h(m);
    auto autos = aut_h(m);
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<long long> v(h.invariants().size());
      for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<long long>(rng() % h.invariants()[i]);
      Cocycle2 beta = h.representative(v);
      ExtensionGroup e = build_extension(beta);
      auto stab = stabilizer_beta(autos, beta, h);
      std::set<IntMatrix> in_stab(stab.begin(), stab.end());
      for (const auto& g : autos) {
        bool brute = brute_extends(g, e);
        auto ext = extend_automorphism(g, e);
        CHECK(ext.has_value() == brute);
        CHECK((in_stab.count(g) > 0) == brute);
        CHECK((h.class_of(beta.transformed(g)) == v) == brute);
        if (ext) {
          CHECK(is_hom(e.group, ext->images));
          std::set<int> img(ext->images.begin(), ext->images.end());
          CHECK(static_cast<int>(img.size()) == e.group.order());
          for (long long code = 0; code < m.size(); ++code) {
            ModElem x = m.decode(code);
            CHECK(ext->images[e.element(0, x)] == e.element(0, m.apply(g, x)));
          }
        }
      }
    }
  }
}

TEST_CASE("invalid input and limits") {
  CayleyGroup z2 = cyclic_group(2);
  CHECK_THROWS_AS(FiniteHModule(z2, {2}, {scalar(1)}), PreconditionError);
  CHECK_THROWS_AS(FiniteHModule::from_generator_action(cyclic_group(3), {4}, {scalar(-1)}),
                  PreconditionError);
  CHECK_THROWS_AS(FiniteHModule::trivial(z2, {1}), PreconditionError);
  FiniteHModule m = FiniteHModule::trivial(z2, {2});
  CHECK_THROWS_AS(Cocycle2(m, {{1}, {0}, {0}, {1}}), PreconditionError);
  CHECK_THROWS_AS(Cocycle2(m, {{0}, {0}}), PreconditionError);
  FiniteHModule twisted = FiniteHModule::from_generator_action(z2, {4}, {scalar(-1)});
  CHECK_THROWS_AS(Cocycle2(twisted, {{0}, {0}, {0}, {1}}), PreconditionError);
  CHECK_THROWS_AS(build_extension(Cocycle2::zero(FiniteHModule::trivial(z2, {2048}))), ScaleError);
  CHECK_THROWS_AS(extend_automorphism(scalar(2), build_extension(Cocycle2::zero(twisted))),
                  PreconditionError);
}

TEST_CASE("cyclic groups on trivial cyclic modules") {
  for (int n : {2, 3, 4}) {
    FiniteHModule m = FiniteHModule::trivial(cyclic_group(n), {n});
    SecondCohomology h(m);
    CHECK(h.invariants() == std::vector<long long>{n});
    CHECK(h.order() == brute_h2_order(m));
  }
  CHECK(h2(FiniteHModule::trivial(cyclic_group(1), {6})).order() == 1);
}

TEST_CASE("Z/4 as an extension of Z/2 by Z/2") {
  CayleyGroup z4 = cyclic_group(4);
  CayleyGroup z2 = cyclic_group(2);
  FiniteHModule m = FiniteHModule::trivial(z2, {2});
  int g = z4.generator_indices()[0];
  int g2 = z4.mul(g, g);
  std::vector<int> proj(4), fiber{0, g2};
  for (int k = 0, x = 0; k < 4; ++k, x = z4.mul(x, g)) proj[x] = k % 2;
  Cocycle2 a = extension_class(z4, m, proj, fiber, {0, g});
  Cocycle2 b = extension_class(z4, m, proj, fiber, {0, z4.mul(g2, g)});
  CHECK(a(1, 1) == ModElem{1});
  SecondCohomology h(m);
  CHECK(h.class_of(a) == std::vector<long long>{1});
  CHECK(h.cohomologous(a, b));
  CHECK_THROWS_AS(extension_class(z4, m, proj, fiber, {0, g2}), PreconditionError);
}

TEST_CASE("stabilizer of the Z/8 class") {
  CayleyGroup z2 = cyclic_group(2);
  FiniteHModule m = FiniteHModule::trivial(z2, {4});
  Cocycle2 beta(m, {{0}, {0}, {0}, {1}});
  CHECK(isomorphic(build_extension(beta).group, cyclic_group(8)));
  SecondCohomology h(m);
  auto autos = aut_h(m);
  CHECK(autos.size() == 2);
  auto stab = stabilizer_beta(autos, beta, h);
  CHECK(stab.size() == 2);
  bool fixed = h.cohomologous(beta.transformed(scalar(3)), beta);
  CHECK(fixed == (h.class_of(beta.scaled(2)) == std::vector<long long>{0}));
  CHECK(stabilizer_beta(autos, Cocycle2::zero(m), h).size() == autos.size());
  CHECK(aut_h(FiniteHModule::trivial(cyclic_group(1), {3})).size() == 2);
  CHECK(168 % aut_h(FiniteHModule::trivial(cyclic_group(3), {2, 2, 2})).size() == 0);
}
