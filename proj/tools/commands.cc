#include "commands.hpp"

#include <chrono>
#include <sstream>

#include "belyi/cohomology.hpp"
#include "belyi/constructions.hpp"
#include "belyi/corpus.hpp"
#include "belyi/error.hpp"
#include "belyi/gaschuetz.hpp"
#include "belyi/genus1.hpp"
#include "belyi/json_io.hpp"
#include "belyi/relmod.hpp"
#include "belyi/report.hpp"

namespace belyi::cli {
namespace {

// Inline JSON or a path to a JSON file.
Json load(const std::string& arg) {
  auto p = arg.find_first_not_of(" \t\n");
  if (p != std::string::npos && (arg[p] == '[' || arg[p] == '{')) return parse_json_text(arg, "argument");
  return read_json_file(arg);
}

std::string cell(const std::vector<long long>& v) {
  if (v.empty()) return "-";
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

void emit(const Common& c, const Json& j, const std::string& text, std::ostream& out) {
  if (c.json)
    out << dump(j) << "\n";
  else
    out << text;
}

std::vector<int> element_indices(const PermGroup& g, const std::vector<Permutation>& ps,
                                 const std::string& what) {
  std::vector<int> out;
  for (const auto& p : ps) {
    require(p.degree() == g.degree(), what + ": permutation of the wrong degree");
    int i = g.index_of(p);
    require(i >= 0, what + ": " + p.str() + " is not in the group");
    out.push_back(i);
  }
  return out;
}

std::vector<Permutation> permutations(const Json& j, const std::string& what) {
  require(j.is_array(), what + ": expected an array of permutations");
  std::vector<Permutation> out;
  for (const auto& p : j) out.push_back(permutation_from_json(p));
  return out;
}

}  // namespace

int analyze(const Common& c, const std::string& input, std::ostream& out) {
  auto report = analyze(cover_from_json(load(input)));
  emit(c, analysis_report_to_json(report), analysis_report_text(report), out);
  return 0;
}

int descend(const Common& c, const std::string& input, bool refine, std::ostream& out) {
  auto report = descent_report(cover_from_json(load(input)), {refine, c.seed});
  emit(c, descent_report_to_json(report), descent_report_text(report), out);
  return 0;
}

int chartab(const Common& c, const std::string& group, std::ostream& out) {
  auto g = group_from_json(load(group));
  auto t = character_table(g, c.seed);
  const auto& cls = t->classes();
  TextTable tt({"class", "rep", "size", "order"});
  for (int k = 0; k < cls.count(); ++k) {
    tt.add({std::to_string(k), g.element(cls.reps[k]).str(), std::to_string(cls.sizes[k]),
            std::to_string(cls.orders[k])});
  }
  std::vector<std::string> vh = {"chi", "deg"};
  for (int k = 0; k < cls.count(); ++k) vh.push_back("c" + std::to_string(k));
  TextTable vt(vh);
  for (int r = 0; r < t->size(); ++r) {
    std::vector<std::string> row = {std::to_string(r), std::to_string(t->degrees()[r])};
    for (const auto& z : t->row(r)) row.push_back(z.str());
    vt.add(row);
  }
  emit(c, character_table_to_json(*t), tt.str() + "\n" + vt.str(), out);
  return 0;
}

int cohomology(const Common& c, const std::string& module, const std::string& cocycle,
               bool basis, std::ostream& out) {
  auto parsed = module_from_json(load(module));
  const auto& m = parsed.module;
  SecondCohomology hc(m);
  auto autos = aut_h(m);
  Json j{{"order_H", m.group().order()},
         {"shape", m.shape()},
         {"h2_invariants", hc.invariants()},
         {"h2_order", hc.order()},
         {"aut_h_order", autos.size()}};
  std::vector<std::string> row = {std::to_string(m.group().order()), cell(m.shape()),
                                  cell(hc.invariants()), std::to_string(hc.order()),
                                  std::to_string(autos.size())};
  std::vector<std::string> head = {"|H|", "shape", "H^2", "|H^2|", "|Aut_H(M)|"};
  if (!cocycle.empty()) {
    auto beta = cocycle_from_json(m, load(cocycle));
    auto cls = hc.class_of(beta);
    auto stab = stabilizer_beta(autos, beta, hc);
    auto ext = build_extension(beta);
    long long extending = 0;
    for (const auto& g : autos) extending += extend_automorphism(g, ext).has_value();
    j["class"] = cls;
    j["stabilizer_order"] = stab.size();
    j["extending_automorphisms"] = extending;
    head.insert(head.end(), {"class", "|stab|", "extending"});
    row.insert(row.end(), {cell(cls), std::to_string(stab.size()), std::to_string(extending)});
  }
  if (basis) {
    Json b = Json::array();
    for (const auto& beta : hc.basis()) b.push_back(cocycle_to_json(beta));
    j["basis"] = b;
  }
  TextTable tt(head);
  tt.add(row);
  emit(c, j, tt.str(), out);
  return 0;
}

int relmod(const Common& c, const std::string& group, int rank, long long mod, bool verify,
           std::ostream& out) {
  require(rank >= 1, "rank must be at least 1");
  require(mod >= 2, "modulus must be at least 2");
  auto g = group_from_json(load(group));
  auto h = CayleyGroup::from_perm_group(g);
  std::vector<int> images = h.generator_indices();
  if (static_cast<int>(images.size()) > rank) {
    auto tuple = generating_tuple(h, rank);
    require(tuple.has_value(), "the group is not generated by " + std::to_string(rank) + " elements");
    images = *tuple;
  }
  while (static_cast<int>(images.size()) < rank) images.push_back(0);
  auto rm = schreier_data(h, images);
  auto table = character_table(g, c.seed);
  auto chi = rational_character(rm, table);

  Json gens = Json::array();
  for (const auto& w : rm.free_generators()) gens.push_back(w.str());
  Json images_json = Json::array();
  for (int i : images) images_json.push_back(permutation_to_json(g.element(i)));
  Json j{{"order_H", h.order()},
         {"d", rank},
         {"images", images_json},
         {"rank", rm.rank()},
         {"free_generators", gens},
         {"character", chi.mults},
         {"expected_character", expected_relation_character(table, rank).mults}};
  std::ostringstream text;
  TextTable summary({"|H|", "d", "rank", "character"});
  summary.add({std::to_string(h.order()), std::to_string(rank), std::to_string(rm.rank()),
               cell(chi.mults)});
  text << summary.str();

  Json h2j;
  try {
    auto m = reduce_mod(rm, mod);
    SecondCohomology hc(m);
    auto beta = extension_cocycle(rm, mod);
    h2j = Json{{"modulus", mod},
               {"invariants", hc.invariants()},
               {"order", hc.order()},
               {"extension_class", hc.class_of(beta)}};
    TextTable ht({"m", "H^2", "|H^2|", "class"});
    ht.add({std::to_string(mod), cell(hc.invariants()), std::to_string(hc.order()),
            cell(hc.class_of(beta))});
    text << "\n" << ht.str();
  } catch (const ScaleError& e) {
    h2j = Json{{"modulus", mod}, {"error", e.what()}};
    text << "\nH^2: " << e.what() << "\n";
  }
  j["h2"] = h2j;

  if (verify) {
    auto rep = verify_main_theorem(rm, mod);
    j["verification"] = Json{{"order_P", rep.order_P},
                             {"order_aut_h", rep.order_aut_h},
                             {"stabilizer_order", rep.stabilizer.size()},
                             {"restrictions", rep.restrictions.size()},
                             {"equal", rep.equal}};
    TextTable vt({"|P|", "|Aut_H|", "|stab|", "|restr|", "verdict"});
    vt.add({std::to_string(rep.order_P), std::to_string(rep.order_aut_h),
            std::to_string(rep.stabilizer.size()), std::to_string(rep.restrictions.size()),
            rep.equal ? "EQUAL" : "DIFFERENT"});
    text << "\n" << vt.str();
  }
  emit(c, j, text.str(), out);
  return 0;
}

int gaschuetz_lift(const Common& c, const std::string& g1s, const std::string& g2s,
                   const std::string& psis, const std::string& tuples, std::ostream& out) {
  auto g1 = group_from_json(load(g1s));
  auto g2 = group_from_json(load(g2s));
  auto psi = permutations(load(psis), "psi");
  auto tuple = permutations(load(tuples), "tuple");
  require(psi.size() == g1.generators().size(), "psi must give one image per generator of g1");
  auto c1 = CayleyGroup::from_perm_group(g1);
  auto c2 = CayleyGroup::from_perm_group(g2);
  auto p = SurjectionProblem::from_generator_images(c1, c2, element_indices(g2, psi, "psi"),
                                                    element_indices(g2, tuple, "tuple"));
  auto s1 = lift_generators(p);
  long long count = count_lifts(p);
  Json lifted = Json::array();
  TextTable t({"i", "s2", "s1"});
  for (std::size_t i = 0; i < s1.size(); ++i) {
    lifted.push_back(permutation_to_json(g1.element(s1[i])));
    t.add({std::to_string(i + 1), tuple[i].str(), g1.element(s1[i]).str()});
  }
  emit(c, Json{{"lift", lifted}, {"count", count}},
       t.str() + "\nlifts: " + std::to_string(count) + "\n", out);
  return 0;
}

int genus1_triples(const Common& c, std::ostream& out) {
  Json j = Json::array();
  TextTable t({"a", "b", "c"});
  for (const auto& tr : inertia_triples()) {
    j.push_back(Json::array({tr.a, tr.b, tr.c}));
    t.add({std::to_string(tr.a), std::to_string(tr.b), std::to_string(tr.c)});
  }
  emit(c, j, t.str(), out);
  return 0;
}

int genus1_kummer(const Common& c, int a, int b, int d, std::ostream& out) {
  auto cover = kummer_cover(a, b, d);
  auto report = descent_report(cover, {false, c.seed});
  std::vector<long long> orders = {cover.x.order(), cover.y.order(), cover.z().order()};
  Json j{{"cover", cover_to_json(cover)},
         {"inertia_orders", orders},
         {"genus", report.genus},
         {"verdict", to_string(report.verdict)}};
  TextTable t({"a", "b", "d", "inertia", "genus", "verdict"});
  t.add({std::to_string(a), std::to_string(b), std::to_string(d), cell(orders),
         std::to_string(report.genus), to_string(report.verdict)});
  emit(c, j, t.str(), out);
  return 0;
}

int genus1_cm(const Common& c, int d, int n, std::ostream& out) {
  auto cm = cm_module(d, n);
  Json subs = Json::array();
  TextTable t({"J", "|J|", "|H|"});
  for (std::size_t i = 0; i < cm.stable_subgroups.size(); ++i) {
    const auto& sub = cm.stable_subgroups[i];
    Json elems = Json::array();
    std::string s;
    for (auto [x, y] : sub) {
      elems.push_back(Json::array({x, y}));
      s += "(" + std::to_string(x) + "," + std::to_string(y) + ")";
    }
    auto h = build_genus1_group(d, n, sub);
    subs.push_back(Json{{"elements", elems}, {"order_H", h.order()}});
    t.add({s, std::to_string(sub.size()), std::to_string(h.order())});
  }
  Json mat = Json::array();
  for (const auto& r : cm.matrix) mat.push_back(Json::array({r[0], r[1]}));
  emit(c, Json{{"d", d}, {"n", n}, {"matrix", mat}, {"stable_subgroups", subs}},
       "C = [[" + std::to_string(cm.matrix[0][0]) + ", " + std::to_string(cm.matrix[0][1]) + "], [" +
           std::to_string(cm.matrix[1][0]) + ", " + std::to_string(cm.matrix[1][1]) + "]]\n\n" +
           t.str(),
       out);
  return 0;
}

int genus1_jdeg(const Common& c, int t, std::ostream& out) {
  int deg = j_invariant_degree(t);
  auto j = j_invariant(t);
  TextTable tt({"t", "phi(t)", "degree", "j"});
  tt.add({std::to_string(t), std::to_string(euler_phi(t)), std::to_string(deg), j.str()});
  emit(c,
       Json{{"t", t}, {"phi", euler_phi(t)}, {"degree", deg}, {"j", cyclotomic_to_json(j)}},
       tt.str(), out);
  return 0;
}

int corpus(const Common& c, const std::vector<int>& only, int perturb, std::ostream& out) {
  CorpusOptions opts{c.seed, perturb};
  std::vector<int> ids = only;
  if (ids.empty())
    for (int i = 1; i <= kCriterionCount; ++i) ids.push_back(i);
  auto t0 = std::chrono::steady_clock::now();
  int failed = 0;
  Json results = Json::array();
  for (int id : ids) {
    auto r = run_criterion(id, opts);
    failed += !r.pass;
    if (c.json) {
      results.push_back(Json{{"id", r.id},
                             {"name", r.name},
                             {"pass", r.pass},
                             {"expected", r.expected},
                             {"computed", r.computed},
                             {"detail", r.detail},
                             {"ms", r.ms}});
    } else {
      out << format_result(r) << std::flush;
    }
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (c.json) {
    out << dump(Json{{"results", results}, {"failed", failed}, {"seconds", secs}}) << "\n";
  } else {
    std::ostringstream os;
    os.precision(1);
    os << std::fixed << secs;
    out << ids.size() - failed << "/" << ids.size() << " criteria passed in " << os.str() << " s\n";
  }
  return failed ? 2 : 0;
}

}  // namespace belyi::cli
