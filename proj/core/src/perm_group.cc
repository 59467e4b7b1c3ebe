#include "belyi/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "belyi/error.hpp"

namespace belyi {

struct PermGroup::State {
  int degree = 0;
  std::vector<Permutation> gens;
  std::vector<int> gen_idx;
  std::vector<Permutation> elems;
  std::unordered_map<Permutation, int, PermutationHash> index;
  mutable std::once_flag classes_once;
  mutable std::unique_ptr<ClassData> classes;
};

PermGroup PermGroup::from_sorted(int degree, std::vector<Permutation> elements,
                                 std::vector<Permutation> gens) {
  auto s = std::make_shared<State>();
  s->degree = degree;
  s->elems = std::move(elements);
  s->index.reserve(s->elems.size() * 2);
  for (std::size_t i = 0; i < s->elems.size(); ++i)
    s->index.emplace(s->elems[i], static_cast<int>(i));
  s->gens = std::move(gens);
  for (const auto& g : s->gens) s->gen_idx.push_back(s->index.at(g));
  return PermGroup(std::move(s));
}

PermGroup PermGroup::generate(const std::vector<Permutation>& gens) {
  require(!gens.empty(), "empty generator list");
  const int n = gens.front().degree();
  for (const auto& g : gens) require(g.degree() == n, "generators have different degrees");
  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<Permutation> elems{Permutation::identity(n)};
  seen.insert(elems.front());
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : gens) {
      Permutation p = elems[head] * g;
      if (seen.insert(p).second) {
        elems.push_back(std::move(p));
        if (static_cast<long long>(elems.size()) > kMaxOrder)
          throw ScaleError("group order exceeds " + std::to_string(kMaxOrder));
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return from_sorted(n, std::move(elems), gens);
}

PermGroup PermGroup::trivial(int degree) {
  return from_sorted(degree, {Permutation::identity(degree)}, {});
}

int PermGroup::degree() const { return s_->degree; }
long long PermGroup::order() const { return static_cast<long long>(s_->elems.size()); }
const std::vector<Permutation>& PermGroup::generators() const { return s_->gens; }
const std::vector<int>& PermGroup::generator_indices() const { return s_->gen_idx; }
const std::vector<Permutation>& PermGroup::elements() const { return s_->elems; }
const Permutation& PermGroup::element(int i) const { return s_->elems[i]; }

int PermGroup::index_of(const Permutation& p) const {
  if (p.degree() != degree()) return -1;
  auto it = s_->index.find(p);
  return it == s_->index.end() ? -1 : it->second;
}

int PermGroup::mul(int i, int j) const { return s_->index.at(s_->elems[i] * s_->elems[j]); }
int PermGroup::inv(int i) const { return s_->index.at(s_->elems[i].inverse()); }

const ClassData& PermGroup::classes() const {
  std::call_once(s_->classes_once, [this] {
    s_->classes = std::make_unique<ClassData>(detail::compute_classes(*this));
  });
  return *s_->classes;
}

int PermGroup::class_of(const Permutation& p) const {
  int i = index_of(p);
  require(i >= 0, "element not in group");
  return classes().class_of[i];
}

std::vector<int> PermGroup::orbit(int point) const {
  require(point >= 0 && point < degree(), "point out of range");
  std::vector<char> seen(degree(), 0);
  std::vector<int> orb{point};
  seen[point] = 1;
  for (std::size_t h = 0; h < orb.size(); ++h)
    for (const auto& g : generators()) {
      int q = g[orb[h]];
      if (!seen[q]) {
        seen[q] = 1;
        orb.push_back(q);
      }
    }
  return orb;
}

bool PermGroup::is_transitive() const {
  return degree() <= 1 || static_cast<int>(orbit(0).size()) == degree();
}

bool PermGroup::is_abelian() const {
  const auto& g = generators();
  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t b = a + 1; b < g.size(); ++b)
      if (g[a] * g[b] != g[b] * g[a]) return false;
  return true;
}

PermGroup PermGroup::subgroup_from_indices(const std::vector<int>& idx) const {
  std::vector<int> sorted(idx);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  require(!sorted.empty() && sorted.front() == 0, "subset does not contain the identity");
  std::vector<Permutation> elems;
  elems.reserve(sorted.size());
  for (int i : sorted) elems.push_back(element(i));

  std::vector<int> gens;
  std::unordered_set<int> closure{0};
  for (int i : sorted) {
    if (closure.count(i)) continue;
    gens.push_back(i);
    closure = {0};
    std::vector<int> frontier{0};
    for (std::size_t h = 0; h < frontier.size(); ++h)
      for (int gi : gens) {
        int p = mul(frontier[h], gi);
        if (closure.insert(p).second) frontier.push_back(p);
      }
    ensure(closure.size() <= sorted.size(), "subset is not closed under products");
  }
  ensure(closure.size() == sorted.size(), "subset is not a subgroup");
  std::vector<Permutation> gp;
  for (int i : gens) gp.push_back(element(i));
  return from_sorted(degree(), std::move(elems), std::move(gp));
}

PermGroup PermGroup::subgroup(const std::vector<Permutation>& gens) const {
  for (const auto& g : gens) require(contains(g), "generator not in group");
  if (gens.empty()) return trivial(degree());
  return generate(gens);
}

std::vector<ConjugacyClass> conjugacy_classes(const PermGroup& g) {
  const ClassData& cd = g.classes();
  std::vector<ConjugacyClass> out;
  for (int c = 0; c < cd.count(); ++c) out.push_back({g.element(cd.reps[c]), cd.sizes[c]});
  return out;
}

int power_map(const PermGroup& g, int c, long long k) { return g.classes().power_map(c, k); }

bool is_subgroup(const PermGroup& s, const PermGroup& g) {
  if (s.degree() != g.degree()) return false;
  for (const auto& x : s.generators())
    if (!g.contains(x)) return false;
  return true;
}

PermGroup stabilizer(const PermGroup& g, int point) {
  require(point >= 1 && point <= g.degree(), "point out of range");
  std::vector<int> idx;
  for (int i = 0; i < static_cast<int>(g.order()); ++i)
    if (g.element(i)[point - 1] == point - 1) idx.push_back(i);
  return g.subgroup_from_indices(idx);
}

PermGroup normalizer(const PermGroup& g, const PermGroup& s) {
  require(is_subgroup(s, g), "not a subgroup");
  std::vector<Permutation> sg = s.generators();
  std::vector<int> idx;
  for (int i = 0; i < static_cast<int>(g.order()); ++i) {
    const Permutation& h = g.element(i);
    Permutation hi = h.inverse();
    bool ok = true;
    for (const auto& x : sg)
      if (!s.contains(hi * x * h)) {
        ok = false;
        break;
      }
    if (ok) idx.push_back(i);
  }
  return g.subgroup_from_indices(idx);
}

Permutation CosetAction::image_of(const Permutation& x) const {
  std::vector<int> v(reps.size());
  for (std::size_t c = 0; c < reps.size(); ++c) {
    int e = source.index_of(reps[c] * x);
    require(e >= 0, "element not in group");
    v[c] = coset_of[e];
  }
  return Permutation(std::move(v));
}

CosetAction coset_action(const PermGroup& g, const PermGroup& s) {
  require(is_subgroup(s, g), "not a subgroup");
  CosetAction ca{PermGroup::trivial(1), {}, std::vector<int>(g.order(), -1), {}, g};
  for (int i = 0; i < static_cast<int>(g.order()); ++i) {
    if (ca.coset_of[i] >= 0) continue;
    int c = static_cast<int>(ca.reps.size());
    ca.reps.push_back(g.element(i));
    for (const auto& y : s.elements()) ca.coset_of[g.index_of(y * g.element(i))] = c;
  }
  for (const auto& x : g.generators()) ca.images_of_generators.push_back(ca.image_of(x));
  int k = static_cast<int>(ca.reps.size());
  ca.image = ca.images_of_generators.empty() ? PermGroup::trivial(k)
                                              : PermGroup::generate(ca.images_of_generators);
  return ca;
}

}  // namespace belyi
