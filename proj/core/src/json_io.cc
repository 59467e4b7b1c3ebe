#include "belyi/json_io.hpp"

#include <fstream>
#include <sstream>

#include "belyi/cayley.hpp"
#include "belyi/error.hpp"

namespace belyi {
namespace {

const Json& field(const Json& j, const char* key, const std::string& ctx) {
  require(j.is_object(), ctx + ": expected an object");
  auto it = j.find(key);
  require(it != j.end(), ctx + ": missing field \"" + key + "\"");
  return *it;
}

template <typename T>
T as(const Json& j, const std::string& ctx) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(ctx + ": " + e.what());
  }
}

Json rationals(const std::vector<Rational>& v, bool numerators) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back(numerators ? r.num() : r.den());
  return out;
}

}  // namespace

Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, col = 1;
    std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::ostringstream os;
    os << source << ":" << line << ":" << col << ": malformed JSON (" << e.what() << ")";
    throw PreconditionError(os.str());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str(), path);
}

Json permutation_to_json(const Permutation& p) { return Json(p.one_based()); }

Permutation permutation_from_json(const Json& j, int degree) {
  require(j.is_array(), "permutation: expected an array");
  auto img = as<std::vector<int>>(j, "permutation");
  require(degree < 0 || static_cast<int>(img.size()) == degree,
          "permutation: expected " + std::to_string(degree) + " entries");
  return Permutation::from_one_based(img);
}

Json group_to_json(const PermGroup& g) {
  Json gens = Json::array();
  for (const auto& p : g.generators()) gens.push_back(permutation_to_json(p));
  return Json{{"degree", g.degree()}, {"generators", gens}};
}

PermGroup group_from_json(const Json& j) {
  int n = as<int>(field(j, "degree", "group"), "group.degree");
  require(n >= 1, "group: degree must be positive");
  std::vector<Permutation> gens;
  for (const auto& g : field(j, "generators", "group")) gens.push_back(permutation_from_json(g, n));
  if (gens.empty()) return PermGroup::trivial(n);
  return PermGroup::generate(gens);
}

Json cover_to_json(const BelyiCover& c) {
  return Json{{"degree", c.degree},
              {"x", permutation_to_json(c.x)},
              {"y", permutation_to_json(c.y)}};
}

BelyiCover cover_from_json(const Json& j) {
  int n = as<int>(field(j, "degree", "cover"), "cover.degree");
  require(n >= 1, "cover: degree must be positive");
  auto x = permutation_from_json(field(j, "x", "cover"), n);
  auto y = permutation_from_json(field(j, "y", "cover"), n);
  return BelyiCover::from_monodromy(x, y);
}

Json cyclotomic_to_json(const Cyclotomic& z) {
  return Json{{"conductor", z.conductor()},
              {"numerators", rationals(z.coords(), true)},
              {"denominators", rationals(z.coords(), false)}};
}

Cyclotomic cyclotomic_from_json(const Json& j) {
  int n = as<int>(field(j, "conductor", "cyclotomic"), "cyclotomic.conductor");
  require(n >= 1, "cyclotomic: conductor must be positive");
  auto num = as<std::vector<std::int64_t>>(field(j, "numerators", "cyclotomic"), "cyclotomic");
  auto den = as<std::vector<std::int64_t>>(field(j, "denominators", "cyclotomic"), "cyclotomic");
  require(num.size() == den.size(), "cyclotomic: coordinate arrays differ in length");
  require(static_cast<int>(num.size()) == euler_phi(n), "cyclotomic: expected phi(N) coordinates");
  std::vector<Rational> c;
  for (std::size_t i = 0; i < num.size(); ++i) {
    require(den[i] != 0, "cyclotomic: zero denominator");
    c.emplace_back(num[i], den[i]);
  }
  return Cyclotomic::from_coords(n, std::move(c));
}

Json character_table_to_json(const CharacterTable& t) {
  const auto& cls = t.classes();
  Json classes = Json::array();
  for (int c = 0; c < cls.count(); ++c) {
    Json rep;
    if (t.perm_group()) {
      rep = t.perm_group()->element(cls.reps[c]).cycles();
    } else {
      rep = cls.reps[c];
    }
    classes.push_back(Json{{"rep", rep}, {"size", cls.sizes[c]}, {"order", cls.orders[c]}});
  }
  Json values = Json::array();
  for (const auto& row : t.rows()) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(cyclotomic_to_json(v));
    values.push_back(r);
  }
  return Json{{"order", t.order()},
              {"exponent", t.exponent()},
              {"classes", classes},
              {"degrees", t.degrees()},
              {"values", values}};
}

Json module_to_json(const PermGroup& g, const FiniteHModule& m) {
  Json action = Json::array();
  for (int h = 0; h < m.group().order(); ++h) action.push_back(m.action(h));
  return Json{{"group", group_to_json(g)}, {"shape", m.shape()}, {"action", action}};
}

ParsedModule module_from_json(const Json& j) {
  auto g = group_from_json(field(j, "group", "module"));
  auto h = CayleyGroup::from_perm_group(g);
  auto shape = as<std::vector<long long>>(field(j, "shape", "module"), "module.shape");
  if (j.contains("action")) {
    auto action = as<std::vector<IntMatrix>>(j["action"], "module.action");
    return {g, FiniteHModule(h, std::move(shape), std::move(action))};
  }
  auto gen_action = as<std::vector<IntMatrix>>(field(j, "generator_action", "module"),
                                               "module.generator_action");
  require(gen_action.size() == h.generator_indices().size(),
          "module: one matrix per group generator expected");
  return {g, FiniteHModule::from_generator_action(h, std::move(shape), gen_action)};
}

Json cocycle_to_json(const Cocycle2& beta) {
  int n = beta.module().group().order();
  Json rows = Json::array();
  for (int a = 0; a < n; ++a) {
    Json row = Json::array();
    for (int b = 0; b < n; ++b) row.push_back(beta(a, b));
    rows.push_back(row);
  }
  return Json{{"table", rows}};
}

Cocycle2 cocycle_from_json(const FiniteHModule& m, const Json& j) {
  auto rows = as<std::vector<std::vector<ModElem>>>(field(j, "table", "cocycle"), "cocycle.table");
  auto n = static_cast<std::size_t>(m.group().order());
  require(rows.size() == n, "cocycle: expected one row per group element");
  std::vector<ModElem> flat;
  flat.reserve(n * n);
  for (auto& r : rows) {
    require(r.size() == n, "cocycle: expected one entry per group element");
    for (auto& v : r) {
      require(static_cast<int>(v.size()) == m.rank(), "cocycle: entry of wrong rank");
      flat.push_back(m.reduce(std::move(v)));
    }
  }
  return Cocycle2(m, std::move(flat));
}

Json descent_report_to_json(const DescentReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back(Json{{"row", row.row},
                        {"dim", row.degree},
                        {"n", row.n},
                        {"m", row.m},
                        {"passes", row.passes}});
  }
  Json certs = Json::array();
  for (const auto& c : r.certificates) {
    Json gens = Json::array();
    for (const auto& g : c.generators) gens.push_back(permutation_to_json(g));
    certs.push_back(Json{{"order", c.order}, {"generators", gens}});
  }
  return Json{{"degree", r.degree},
              {"genus", r.genus},
              {"order_H", r.order_H},
              {"order_J", r.order_J},
              {"order_W", r.order_W},
              {"order_D", r.order_D},
              {"index_HW", r.index_HW},
              {"is_galois", r.is_galois},
              {"verdict", to_string(r.verdict)},
              {"rows", rows},
              {"refined", r.refined},
              {"certificates", certs}};
}

DescentReport descent_report_from_json(const Json& j) {
  const std::string ctx = "descent report";
  DescentReport r;
  r.degree = as<int>(field(j, "degree", ctx), ctx);
  r.genus = as<int>(field(j, "genus", ctx), ctx);
  r.order_H = as<long long>(field(j, "order_H", ctx), ctx);
  r.order_J = as<long long>(field(j, "order_J", ctx), ctx);
  r.order_W = as<long long>(field(j, "order_W", ctx), ctx);
  r.order_D = as<long long>(field(j, "order_D", ctx), ctx);
  r.index_HW = as<long long>(field(j, "index_HW", ctx), ctx);
  r.is_galois = as<bool>(field(j, "is_galois", ctx), ctx);
  r.verdict = verdict_from_string(as<std::string>(field(j, "verdict", ctx), ctx));
  for (const auto& row : field(j, "rows", ctx)) {
    DescentRow d;
    d.row = as<int>(field(row, "row", ctx), ctx);
    d.degree = as<long long>(field(row, "dim", ctx), ctx);
    d.n = as<long long>(field(row, "n", ctx), ctx);
    d.m = as<long long>(field(row, "m", ctx), ctx);
    d.passes = as<bool>(field(row, "passes", ctx), ctx);
    r.rows.push_back(d);
  }
  r.refined = as<bool>(field(j, "refined", ctx), ctx);
  for (const auto& c : field(j, "certificates", ctx)) {
    Certificate cert;
    cert.order = as<long long>(field(c, "order", ctx), ctx);
    for (const auto& g : field(c, "generators", ctx)) cert.generators.push_back(permutation_from_json(g));
    r.certificates.push_back(std::move(cert));
  }
  return r;
}

std::string dump(const Json& j) { return j.dump(2); }

}  // namespace belyi
