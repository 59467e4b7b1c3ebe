#include <doctest.h>

#include <algorithm>
#include <random>

#include "belyi/constructions.hpp"
#include "belyi/descent.hpp"
#include "belyi/error.hpp"
#include "belyi/json_io.hpp"
#include "belyi/report.hpp"

using namespace belyi;

namespace {

BelyiCover load_cover(const std::string& name) {
  return cover_from_json(read_json_file(std::string(BELYI_DATA_DIR) + "/" + name));
}

// Fixed dimension of <g> by averaging the character over its powers.
long long averaged_fixed_dim(const CharacterTable& t, int row, const Permutation& g) {
  const PermGroup& d = *t.perm_group();
  int o = g.order();
  Cyclotomic s(t.exponent());
  Permutation p = Permutation::identity(g.degree());
  for (int k = 0; k < o; ++k) {
    s += t.row(row)[d.class_of(p)];
    p = p * g;
  }
  Rational r = s.rational_value() / Rational(o);
  REQUIRE(r.is_integer());
  return r.num();
}

}  // namespace

TEST_CASE("regular A5 cover does not descend") {
  DescentReport r = descent_report(load_cover("a5_regular.json"));
  CHECK(r.degree == 60);
  CHECK(r.is_galois);
  CHECK(r.order_D == 60);
  CHECK(r.verdict == Verdict::kDoesNotDescend);
  REQUIRE(r.rows.size() == 5);
  std::vector<long long> dims, ns, ms;
  for (const auto& row : r.rows) {
    dims.push_back(row.degree);
    ns.push_back(row.n);
    ms.push_back(row.m);
  }
  CHECK(dims == std::vector<long long>{1, 3, 3, 4, 5});
  CHECK(ns == std::vector<long long>{2, 3, 3, 2, 3});
  CHECK(ms == std::vector<long long>{2, 3, 3, 4, 5});
  CHECK_FALSE(r.rows[3].passes);
  CHECK_FALSE(r.rows[4].passes);
}

TEST_CASE("isogeny cover is inconclusive") {
  DescentReport r = descent_report(load_cover("a4_isogeny.json"), {.refine = true});
  CHECK(r.degree == 6);
  CHECK(r.order_H == 12);
  CHECK(r.order_D == 2);
  CHECK_FALSE(r.is_galois);
  REQUIRE(r.rows.size() == 2);
  CHECK(r.rows[0].n == 2);
  CHECK(r.rows[0].m == 4);
  CHECK(r.certificates.empty());
  CHECK(r.verdict == Verdict::kInconclusive);
}

TEST_CASE("cyclic cubic descends") {
  DescentReport r = descent_report(load_cover("cubic.json"));
  CHECK(r.genus == 1);
  CHECK(r.verdict == Verdict::kDescends);
  for (const auto& row : r.rows) CHECK(row.passes);
}

TEST_CASE("rows agree with averaged characters and D certifies exactly when rows pass") {
  std::mt19937_64 rng(11);
  int done = 0;
  while (done < 40) {
    int n = 2 + static_cast<int>(rng() % 6);
    std::vector<int> a(n), b(n);
    for (int i = 0; i < n; ++i) a[i] = b[i] = i;
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    Permutation x(a), y(b);
    if (!PermGroup::generate({x, y}).is_transitive()) continue;
    ++done;
    BelyiCover c = BelyiCover::from_monodromy(x, y);
    ClosureData cd = validate(c);
    auto t = character_table(cd.D);
    TateCharacters tc = tate_characters(cd, t);
    DescentReport r = descent_report(cd, t, tc, true);
    bool all = true;
    for (int v = 0; v < t->size(); ++v) {
      long long nv = v == 0 ? -1 : 0;
      for (const auto& br : cd.branch)
        for (const auto& rec : br) nv += averaged_fixed_dim(*t, v, rec.d);
      CHECK(r.rows[v].n == nv);
      CHECK(r.rows[v].m == (v == 0) + cd.index_HW * t->degrees()[v]);
      all = all && (nv == 0 || nv == r.rows[v].m);
    }
    CHECK(subgroup_certify(tc, cd.D) == all);
    if (r.verdict != Verdict::kDescends) CHECK(r.certificates.empty());
    for (const auto& cert : r.certificates) CHECK(subgroup_certify(tc, cd.D.subgroup(cert.generators)));
  }
}

TEST_CASE("report serialization") {
  DescentReport r = descent_report(load_cover("a4_isogeny.json"), {.refine = true});
  CHECK(descent_report_from_json(descent_report_to_json(r)) == r);
  std::string text = descent_report_text(r);
  CHECK(text.find("verdict: INCONCLUSIVE") != std::string::npos);
  CHECK(verdict_from_string(to_string(Verdict::kDescends)) == Verdict::kDescends);
  CHECK_THROWS_AS(verdict_from_string("MAYBE"), PreconditionError);

  AnalysisReport a = analyze(load_cover("a5_deg5.json"));
  CHECK(a.order_H == 60);
  CHECK(a.index_HW == 5);
  CHECK(analysis_report_from_json(analysis_report_to_json(a)) == a);
}

TEST_CASE("certificate subgroup must lie in D") {
  ClosureData cd = validate(load_cover("cubic.json"));
  CHECK_THROWS_AS(subgroup_certify(cd, symmetric_group(3)), PreconditionError);
}
