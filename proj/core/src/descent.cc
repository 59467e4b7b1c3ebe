#include "belyi/descent.hpp"

#include <set>

#include "belyi/error.hpp"

namespace belyi {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kDescends: return "DESCENDS";
    case Verdict::kDoesNotDescend: return "DOES_NOT_DESCEND";
    case Verdict::kInconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

Verdict verdict_from_string(const std::string& s) {
  if (s == "DESCENDS") return Verdict::kDescends;
  if (s == "DOES_NOT_DESCEND") return Verdict::kDoesNotDescend;
  require(s == "INCONCLUSIVE", "unknown verdict " + s);
  return Verdict::kInconclusive;
}

bool subgroup_certify(const TateCharacters& tc, const PermGroup& d1, std::uint64_t seed) {
  const auto& d = tc.left.table->perm_group();
  require(d.has_value() && is_subgroup(d1, *d), "D1 is not a subgroup of D");
  TablePtr t1 = character_table(d1, seed);
  VirtualCharacter l = restrict(tc.left, t1);
  VirtualCharacter j = restrict(tc.jac, t1);
  for (int i = 0; i < t1->size(); ++i)
    if (std::min(l.mults[i], j.mults[i]) != 0) return false;
  return true;
}

bool subgroup_certify(const ClosureData& cd, const PermGroup& d1, std::uint64_t seed) {
  TablePtr t = character_table(cd.D, seed);
  return subgroup_certify(tate_characters(cd, t), d1, seed);
}

std::vector<Certificate> refine_search(const ClosureData& cd, const TateCharacters& tc,
                                       std::uint64_t seed) {
  const PermGroup& d = cd.D;
  std::vector<PermGroup> candidates;
  std::set<std::vector<Permutation>> seen;
  for (int rep : d.classes().reps) {
    PermGroup c = rep == 0 ? PermGroup::trivial(d.degree()) : d.subgroup({d.element(rep)});
    if (seen.insert(c.elements()).second) candidates.push_back(c);
  }
  if (seen.insert(d.elements()).second) candidates.push_back(d);
  std::vector<Certificate> out;
  for (const auto& c : candidates)
    if (subgroup_certify(tc, c, seed)) out.push_back({c.generators(), c.order()});
  return out;
}

std::vector<Certificate> refine_search(const ClosureData& cd, std::uint64_t seed) {
  TablePtr t = character_table(cd.D, seed);
  return refine_search(cd, tate_characters(cd, t), seed);
}

DescentReport descent_report(const ClosureData& cd, const TablePtr& t, const TateCharacters& tc,
                             bool refine, std::uint64_t seed) {
  DescentReport r;
  r.degree = cd.cover.degree;
  r.genus = genus(cd.cover);
  r.order_H = cd.H.order();
  r.order_J = cd.J.order();
  r.order_W = cd.W.order();
  r.order_D = cd.D.order();
  r.index_HW = cd.index_HW;
  r.is_galois = cd.is_galois;
  bool all_pass = true;
  for (int v = 0; v < t->size(); ++v) {
    DescentRow row;
    row.row = v;
    row.degree = t->degrees()[v];
    row.n = tc.left.mults[v];
    row.m = tc.middle.mults[v];
    ensure(row.n >= 0 && row.n <= row.m, "left multiplicity outside [0, m_V]");
    row.passes = row.n == 0 || row.n == row.m;
    all_pass = all_pass && row.passes;
    r.rows.push_back(row);
  }
  r.refined = refine;
  if (refine) r.certificates = refine_search(cd, tc, seed);
  if (all_pass || !r.certificates.empty())
    r.verdict = Verdict::kDescends;
  else if (cd.is_galois)
    r.verdict = Verdict::kDoesNotDescend;
  else
    r.verdict = Verdict::kInconclusive;
  return r;
}

DescentReport descent_report(const BelyiCover& cover, const DescentOptions& opts) {
  ClosureData cd = validate(cover);
  TablePtr t = character_table(cd.D, opts.seed);
  TateCharacters tc = tate_characters(cd, t);
  return descent_report(cd, t, tc, opts.refine, opts.seed);
}

}  // namespace belyi
