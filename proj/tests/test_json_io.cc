#include <doctest.h>

#include "belyi/constructions.hpp"
#include "belyi/error.hpp"
#include "belyi/json_io.hpp"
#include "belyi/report.hpp"

using namespace belyi;

namespace {

std::string data(const std::string& name) { return std::string(BELYI_DATA_DIR) + "/" + name; }

std::string thrown_message(const std::string& text) {
  try {
    parse_json_text(text, "doc");
  } catch (const PreconditionError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("permutations and groups") {
  Permutation p = Permutation::from_cycles(4, {{1, 3, 2}});
  Json j = permutation_to_json(p);
  CHECK(j == Json::parse("[3, 1, 2, 4]"));
  CHECK(permutation_from_json(j) == p);
  CHECK_THROWS_AS(permutation_from_json(j, 5), PreconditionError);
  CHECK_THROWS_AS(permutation_from_json(Json::parse("[1, 1]")), PreconditionError);
  CHECK_THROWS_AS(permutation_from_json(Json::parse("{}")), PreconditionError);

  PermGroup a5 = alternating_group(5);
  PermGroup back = group_from_json(group_to_json(a5));
  CHECK(back.order() == 60);
  CHECK(back.elements() == a5.elements());
  CHECK(group_from_json(read_json_file(data("a5.json"))).order() == 60);
}

TEST_CASE("covers") {
  BelyiCover c = cover_from_json(read_json_file(data("a4_isogeny.json")));
  CHECK(c.degree == 6);
  BelyiCover d = cover_from_json(cover_to_json(c));
  CHECK(d.x == c.x);
  CHECK(d.y == c.y);
  CHECK_THROWS_AS(cover_from_json(Json::parse(R"({"degree": 3, "x": [2, 3, 1]})")), PreconditionError);
  CHECK_THROWS_AS(cover_from_json(Json::parse(R"({"degree": 4, "x": [2, 3, 1], "y": [1, 2, 3]})")),
                  PreconditionError);
}

TEST_CASE("cyclotomics and character tables") {
  Cyclotomic z = Cyclotomic::zeta(5) * Rational(3, 7) + Cyclotomic(5, Rational(-2));
  CHECK(cyclotomic_from_json(cyclotomic_to_json(z)) == z);
  CHECK_THROWS_AS(cyclotomic_from_json(Json::parse(R"({"conductor": 5, "numerators": [1], "denominators": [1]})")),
                  PreconditionError);
  Json t = character_table_to_json(*character_table(alternating_group(5)));
  CHECK(t["order"] == 60);
  CHECK(t["degrees"] == Json::parse("[1, 3, 3, 4, 5]"));
  CHECK(t["classes"].size() == 5);
}

TEST_CASE("modules and cocycles") {
  ParsedModule pm = module_from_json(read_json_file(data("z2_on_z4.json")));
  CHECK(pm.module.shape() == std::vector<long long>{4});
  ParsedModule again = module_from_json(module_to_json(pm.group, pm.module));
  CHECK(again.module == pm.module);
  Cocycle2 beta = cocycle_from_json(pm.module, read_json_file(data("z2_z4_cocycle.json")));
  CHECK(cocycle_from_json(pm.module, cocycle_to_json(beta)) == beta);
  CHECK_THROWS_AS(cocycle_from_json(pm.module, Json::parse(R"({"table": [[[0]]]})")), PreconditionError);
  ParsedModule v4 = module_from_json(read_json_file(data("v4_on_z2.json")));
  CHECK(v4.group.order() == 4);
}

TEST_CASE("reports") {
  BelyiCover c = cover_from_json(read_json_file(data("a5_deg5.json")));
  DescentReport r = descent_report(c, {.refine = true});
  Json j = descent_report_to_json(r);
  CHECK(j["verdict"] == to_string(r.verdict));
  CHECK(descent_report_from_json(j) == r);
  AnalysisReport a = analyze(c);
  Json aj = analysis_report_to_json(a);
  CHECK(aj["branch"].contains("inf"));
  CHECK(analysis_report_from_json(aj) == a);
  CHECK_FALSE(analysis_report_text(a).empty());
}

TEST_CASE("malformed input reports its location") {
  CHECK(thrown_message("{\n  \"degree\": ,\n}").find("doc:2:13") != std::string::npos);
  CHECK(thrown_message("[1, 2").find("malformed JSON") != std::string::npos);
  std::string msg;
  try {
    read_json_file(data("malformed.json"));
  } catch (const PreconditionError& e) {
    msg = e.what();
  }
  CHECK(msg.find("malformed.json:2:14") != std::string::npos);
  CHECK_THROWS_AS(read_json_file(data("no_such_file.json")), PreconditionError);
  CHECK_THROWS_AS(group_from_json(Json::parse(R"({"generators": []})")), PreconditionError);
}

TEST_CASE("reports are byte-identical across runs") {
  BelyiCover c = cover_from_json(read_json_file(data("a5_regular.json")));
  std::string a = dump(descent_report_to_json(descent_report(c, {.refine = true, .seed = 5})));
  std::string b = dump(descent_report_to_json(descent_report(c, {.refine = true, .seed = 5})));
  CHECK(a == b);
  CHECK(a == dump(descent_report_to_json(descent_report(c, {.refine = true}))));
}
