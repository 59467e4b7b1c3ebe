#pragma once

#include <array>
#include <string>
#include <vector>

#include "belyi/cover.hpp"
#include "belyi/descent.hpp"
#include "belyi/json_io.hpp"

namespace belyi {

struct BranchSummary {
  int e = 1;
  int d_order = 1;
  friend bool operator==(const BranchSummary&, const BranchSummary&) = default;
};

struct AnalysisReport {
  int degree = 1;
  int genus = 0;
  long long order_H = 1, order_J = 1, order_W = 1, order_D = 1, index_HW = 1;
  bool is_galois = false;
  std::array<std::vector<BranchSummary>, 3> branch;  // over 0, 1, infinity
  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

AnalysisReport analyze(const ClosureData& cd);
AnalysisReport analyze(const BelyiCover& cover);

Json analysis_report_to_json(const AnalysisReport& r);
AnalysisReport analysis_report_from_json(const Json& j);

// Column-aligned plain text.
class TextTable {
 public:
  explicit TextTable(std::vector<std::string> header) : header_(std::move(header)) {}
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  std::string str() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

std::string analysis_report_text(const AnalysisReport& r);
std::string descent_report_text(const DescentReport& r);

}  // namespace belyi
