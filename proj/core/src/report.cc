#include "belyi/report.hpp"

#include <algorithm>
#include <sstream>

#include "belyi/error.hpp"

namespace belyi {
namespace {

const char* kBranchNames[3] = {"0", "1", "inf"};

}  // namespace

AnalysisReport analyze(const ClosureData& cd) {
  AnalysisReport r;
  r.degree = cd.cover.degree;
  r.genus = genus(cd.cover);
  r.order_H = cd.H.order();
  r.order_J = cd.J.order();
  r.order_W = cd.W.order();
  r.order_D = cd.D.order();
  r.index_HW = cd.index_HW;
  r.is_galois = cd.is_galois;
  for (int b = 0; b < 3; ++b) {
    for (const auto& rec : cd.branch[b]) r.branch[b].push_back({rec.e, rec.d_order});
  }
  return r;
}

AnalysisReport analyze(const BelyiCover& cover) { return analyze(validate(cover)); }

Json analysis_report_to_json(const AnalysisReport& r) {
  Json branches = Json::object();
  for (int b = 0; b < 3; ++b) {
    Json list = Json::array();
    for (const auto& s : r.branch[b]) list.push_back(Json{{"e", s.e}, {"d_order", s.d_order}});
    branches[kBranchNames[b]] = list;
  }
  return Json{{"degree", r.degree},
              {"genus", r.genus},
              {"order_H", r.order_H},
              {"order_J", r.order_J},
              {"order_W", r.order_W},
              {"order_D", r.order_D},
              {"index_HW", r.index_HW},
              {"is_galois", r.is_galois},
              {"branch", branches}};
}

AnalysisReport analysis_report_from_json(const Json& j) {
  AnalysisReport r;
  try {
    r.degree = j.at("degree").get<int>();
    r.genus = j.at("genus").get<int>();
    r.order_H = j.at("order_H").get<long long>();
    r.order_J = j.at("order_J").get<long long>();
    r.order_W = j.at("order_W").get<long long>();
    r.order_D = j.at("order_D").get<long long>();
    r.index_HW = j.at("index_HW").get<long long>();
    r.is_galois = j.at("is_galois").get<bool>();
    for (int b = 0; b < 3; ++b) {
      for (const auto& s : j.at("branch").at(kBranchNames[b])) {
        r.branch[b].push_back({s.at("e").get<int>(), s.at("d_order").get<int>()});
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(std::string("analysis report: ") + e.what());
  }
  return r;
}

std::string TextTable::str() const {
  std::vector<std::size_t> width(header_.size(), 0);
  auto widen = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) {
      width[i] = std::max(width[i], row[i].size());
    }
  };
  widen(header_);
  for (const auto& row : rows_) widen(row);
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& row) {
    std::string s;
    for (std::size_t i = 0; i < width.size(); ++i) {
      std::string cell = i < row.size() ? row[i] : "";
      if (i > 0) s += "  ";
      s += std::string(width[i] - cell.size(), ' ') + cell;
    }
    os << s << "\n";
  };
  line(header_);
  std::vector<std::string> rule;
  for (auto w : width) rule.push_back(std::string(w, '-'));
  line(rule);
  for (const auto& row : rows_) line(row);
  return os.str();
}

namespace {

std::string summary_block(int degree, int genus, long long h, long long j, long long w,
                          long long d, long long index, bool galois) {
  TextTable t({"degree", "genus", "|H|", "|J|", "|W|", "|D|", "[H:W]", "galois"});
  t.add({std::to_string(degree), std::to_string(genus), std::to_string(h), std::to_string(j),
         std::to_string(w), std::to_string(d), std::to_string(index), galois ? "yes" : "no"});
  return t.str();
}

}  // namespace

std::string analysis_report_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << summary_block(r.degree, r.genus, r.order_H, r.order_J, r.order_W, r.order_D, r.index_HW,
                      r.is_galois);
  os << "\n";
  TextTable t({"branch", "point", "e", "ord(d)"});
  for (int b = 0; b < 3; ++b) {
    for (std::size_t i = 0; i < r.branch[b].size(); ++i) {
      t.add({kBranchNames[b], std::to_string(i + 1), std::to_string(r.branch[b][i].e),
             std::to_string(r.branch[b][i].d_order)});
    }
  }
  os << t.str();
  return os.str();
}

std::string descent_report_text(const DescentReport& r) {
  std::ostringstream os;
  os << summary_block(r.degree, r.genus, r.order_H, r.order_J, r.order_W, r.order_D, r.index_HW,
                      r.is_galois);
  os << "\n";
  TextTable t({"row", "dim", "n_V", "m_V", "ok"});
  for (const auto& row : r.rows) {
    t.add({std::to_string(row.row), std::to_string(row.degree), std::to_string(row.n),
           std::to_string(row.m), row.passes ? "yes" : "no"});
  }
  os << t.str();
  os << "\nverdict: " << to_string(r.verdict) << "\n";
  if (r.refined) {
    os << "certificates: " << r.certificates.size() << "\n";
    for (const auto& c : r.certificates) {
      os << "  order " << c.order << ":";
      for (const auto& g : c.generators) os << " " << g.str();
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace belyi
