#include "belyi/cover.hpp"

#include "belyi/error.hpp"

namespace belyi {

BelyiCover BelyiCover::from_monodromy(const Permutation& x, const Permutation& y) {
  require(x.degree() == y.degree(), "x and y have different degrees");
  require(x.degree() >= 1, "cover of degree 0");
  PermGroup h = PermGroup::generate({x, y});
  require(h.is_transitive(), "monodromy group is not transitive");
  return BelyiCover{x.degree(), x, y};
}

BelyiCover BelyiCover::galois(const Permutation& x, const Permutation& y) {
  require(x.degree() == y.degree(), "x and y have different degrees");
  PermGroup h = PermGroup::generate({x, y});
  auto regular = [&](const Permutation& s) {
    std::vector<int> v(h.order());
    for (int i = 0; i < static_cast<int>(h.order()); ++i) v[i] = h.index_of(h.element(i) * s);
    return Permutation(std::move(v));
  };
  return from_monodromy(regular(x), regular(y));
}

BelyiCover BelyiCover::on_cosets(const Permutation& x, const Permutation& y, const PermGroup& s) {
  PermGroup h = PermGroup::generate({x, y});
  CosetAction ca = coset_action(h, s);
  return from_monodromy(ca.image_of(x), ca.image_of(y));
}

Permutation BelyiCover::z() const { return (x * y).inverse(); }

Permutation BelyiCover::sigma(int branch) const {
  require(branch >= 0 && branch <= 2, "branch index out of range");
  return branch == 0 ? x : branch == 1 ? y : z();
}

int ClosureData::points_of_Z() const {
  int n = 0;
  for (const auto& b : branch) n += static_cast<int>(b.size());
  return n;
}

ClosureData validate(const BelyiCover& cover) {
  require(cover.x.degree() == cover.degree && cover.y.degree() == cover.degree, "degree mismatch");
  PermGroup h = PermGroup::generate({cover.x, cover.y});
  require(h.is_transitive(), "monodromy group is not transitive");
  PermGroup j = stabilizer(h, 1);
  PermGroup w = normalizer(h, j);
  CosetAction deck = coset_action(w, j);
  CosetAction fibre = coset_action(h, w);
  ClosureData cd{cover, h, j, w, deck.image, deck, fibre,
                 static_cast<long long>(fibre.reps.size()), j.order() == 1, {}};
  ensure(cd.D.order() * j.order() == w.order(), "deck group has the wrong order");

  const Permutation sig[3] = {cover.x, cover.y, cover.z()};
  for (int b = 0; b < 3; ++b) {
    Permutation act = fibre.image_of(sig[b]);
    std::vector<char> seen(act.degree(), 0);
    long long total = 0;
    for (int c = 0; c < act.degree(); ++c) {
      if (seen[c]) continue;
      int e = 0;
      for (int u = c; !seen[u]; u = act[u]) {
        seen[u] = 1;
        ++e;
      }
      BranchRecord r;
      r.e = e;
      r.g = fibre.reps[c];
      r.w = r.g * sig[b].pow(e) * r.g.inverse();
      ensure(w.contains(r.w), "inertia element is not in W");
      r.d = deck.image_of(r.w);
      r.d_order = r.d.order();
      total += e;
      cd.branch[b].push_back(std::move(r));
    }
    ensure(total == cd.index_HW, "ramification indices do not sum to [H:W]");
  }
  return cd;
}

int genus(const BelyiCover& cover) {
  const int n = cover.degree;
  long long s = -2LL * n;
  for (const auto& sg : {cover.x, cover.y, cover.z()}) s += n - sg.cycle_count();
  ensure(s % 2 == 0 && s >= -2, "Riemann-Hurwitz gives an invalid genus");
  return static_cast<int>((s + 2) / 2);
}

TateCharacters tate_characters(const ClosureData& cd, const TablePtr& t) {
  require(t->perm_group().has_value() && t->order() == cd.D.order(), "table does not belong to D");
  const int k = t->size();
  VirtualCharacter left{t, std::vector<long long>(k, 0)};
  VirtualCharacter middle{t, std::vector<long long>(k, 0)};
  for (int v = 0; v < k; ++v) {
    long long n = v == 0 ? -1 : 0;
    for (const auto& br : cd.branch)
      for (const auto& r : br) n += fixed_space_dim(*t, v, r.d);
    left.mults[v] = n;
    middle.mults[v] = (v == 0 ? 1 : 0) + cd.index_HW * t->degrees()[v];
  }
  VirtualCharacter jac = middle - left;
  ensure(left.is_genuine(), "left term has a negative multiplicity");
  ensure(jac.is_genuine(), "Jacobian term has a negative multiplicity");
  ensure(jac.degree() == 2LL * genus(cd.cover), "Jacobian degree differs from twice the genus");
  return {left, middle, jac};
}

ClassFunction deck_coset_character(const ClosureData& cd, const CharacterTable& t) {
  require(t.perm_group().has_value() && t.order() == cd.D.order(), "table does not belong to D");
  const PermGroup& d = *t.perm_group();
  std::vector<int> pre(d.order(), -1);
  for (int i = 0; i < static_cast<int>(cd.W.order()); ++i) {
    int k = d.index_of(cd.to_deck(cd.W.element(i)));
    if (pre[k] < 0) pre[k] = i;
  }
  CosetAction jh = coset_action(cd.H, cd.J);
  ClassFunction f;
  for (int rep : t.classes().reps) {
    const Permutation& w = cd.W.element(pre[rep]);
    long long fixed = 0;
    for (std::size_t c = 0; c < jh.reps.size(); ++c) {
      const Permutation& h = jh.reps[c];
      if (jh.coset_of[cd.H.index_of(w * h)] == jh.coset_of[cd.H.index_of(h)]) ++fixed;
    }
    f.emplace_back(t.exponent(), Rational(fixed));
  }
  return f;
}

}  // namespace belyi
