#include "belyi/relmod.hpp"

#include <algorithm>
#include <set>

#include "belyi/constructions.hpp"
#include "belyi/error.hpp"

namespace belyi {

namespace {

IntMatrix mul_int(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  IntMatrix c(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l)
      if (a[i][l] != 0)
        for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][l] * b[l][j];
  return c;
}

}  // namespace

RelationModule::RelationModule(const CayleyGroup& h, const std::vector<int>& images) {
  require(!images.empty(), "free group rank must be at least 1");
  sd_ = std::make_shared<SchreierData>(h, images);
  const int n = h.order();
  ensure(rank() == n * (d() - 1) + 1, "rank differs from |H|(d-1)+1");
  action_.resize(n);
  for (int x = 0; x < n; ++x) action_[x] = sd_->action_matrix(x);
  const auto& gens = h.generator_indices();
  for (int a = 0; a < n; ++a)
    for (int g : gens)
      ensure(mul_int(action_[a], action_[g]) == action_[h.mul(a, g)],
             "conjugation action on R/[R,R] is not a homomorphism");
}

RelationModule schreier_data(const CayleyGroup& h, const std::vector<int>& images) {
  return RelationModule(h, images);
}

std::vector<long long> rewrite(const RelationModule& rm, const FreeWord& w) {
  return rm.schreier().rewrite(w);
}

VirtualCharacter expected_relation_character(const TablePtr& table, int d) {
  VirtualCharacter triv = irreducible(table, 0);
  return triv + static_cast<long long>(d - 1) * regular_character(table);
}

VirtualCharacter rational_character(const RelationModule& rm, const TablePtr& table) {
  require(table->group().order() == rm.group().order() &&
              table->group().table() == rm.group().table(),
          "character table belongs to a different group");
  const auto& cls = table->classes();
  ClassFunction f;
  for (int rep : cls.reps) {
    const IntMatrix& a = rm.action(rep);
    long long tr = 0;
    for (std::size_t i = 0; i < a.size(); ++i) tr += a[i][i];
    f.push_back(Cyclotomic(table->exponent(), Rational(tr)));
  }
  VirtualCharacter chi = decompose(table, f);
  ensure(chi == expected_relation_character(table, rm.d()),
         "relation module character differs from trivial + (d-1) regular");
  return chi;
}

FiniteHModule reduce_mod(const RelationModule& rm, long long m) {
  require(m >= 2, "modulus must be at least 2");
  const int n = rm.group().order();
  std::vector<IntMatrix> act(n);
  for (int x = 0; x < n; ++x) act[x] = rm.action(x);
  return FiniteHModule(rm.group(), std::vector<long long>(rm.rank(), m), std::move(act));
}

Cocycle2 extension_cocycle(const RelationModule& rm, long long m) {
  FiniteHModule mod = reduce_mod(rm, m);
  const CayleyGroup& h = rm.group();
  const int n = h.order();
  std::vector<ModElem> t(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      t[static_cast<std::size_t>(a) * n + b] = mod.reduce(
          rewrite(rm, rm.transversal(a) * rm.transversal(b) * rm.transversal(h.mul(a, b)).inverse()));
  return Cocycle2(mod, std::move(t));
}

MainTheoremReport verify_main_theorem(const RelationModule& rm, long long m) {
  Cocycle2 beta = extension_cocycle(rm, m);
  const FiniteHModule& mod = beta.module();
  ExtensionGroup p = build_extension(beta);
  SecondCohomology hd = h2(mod);
  auto autos = aut_h(mod);

  MainTheoremReport rep;
  rep.order_P = p.group.order();
  rep.order_aut_h = static_cast<long long>(autos.size());
  rep.h2_invariants = hd.invariants();
  rep.beta_class = hd.class_of(beta);
  rep.stabilizer = stabilizer_beta(autos, beta, hd);

  // P is generated by the images of x_1..x_d, namely (pi(x_i), rewrite(x_i t_{pi(x_i)}^-1)).
  const int d = rm.d();
  std::vector<int> gens(d);
  for (int i = 0; i < d; ++i) {
    int img = rm.images()[i];
    FreeWord w = FreeWord::generator(i + 1) * rm.transversal(img).inverse();
    gens[i] = p.element(img, mod.reduce(rewrite(rm, w)));
  }
  CayleyGroup pg = p.group.with_generators(gens);
  ensure(pg.generates(gens), "images of the free generators do not generate P");
  // Every automorphism over H sends a generator into its own fiber.
  const long long sz = mod.size();
  std::set<IntMatrix> found;
  std::vector<long long> digit(d, 0);
  for (;;) {
    std::vector<int> target(d);
    for (int i = 0; i < d; ++i) {
      auto [hh, v] = p.split(gens[i]);
      target[i] = p.element(hh, mod.add(v, mod.decode(digit[i])));
    }
    auto phi = extend_homomorphism(pg, pg, target);
    if (phi) {
      std::vector<char> hit(pg.order(), 0);
      bool bij = true;
      for (int y : *phi) {
        if (hit[y]) { bij = false; break; }
        hit[y] = 1;
      }
      if (bij) {
        IntMatrix g(mod.rank(), std::vector<long long>(mod.rank(), 0));
        for (int c = 0; c < mod.rank(); ++c) {
          ModElem u = mod.zero();
          u[c] = 1;
          auto [hh, v] = p.split((*phi)[p.element(0, u)]);
          ensure(hh == 0, "automorphism over H does not preserve the fiber");
          for (int r = 0; r < mod.rank(); ++r) g[r][c] = v[r];
        }
        found.insert(g);
      }
    }
    int i = 0;
    for (; i < d; ++i) {
      if (++digit[i] < sz) break;
      digit[i] = 0;
    }
    if (i == d) break;
  }
  rep.restrictions.assign(found.begin(), found.end());
  std::sort(rep.stabilizer.begin(), rep.stabilizer.end());
  rep.equal = rep.restrictions == rep.stabilizer;
  return rep;
}

}  // namespace belyi
