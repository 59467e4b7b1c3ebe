#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace belyi::cli {

struct Common {
  std::uint64_t seed = 0;
  bool json = false;
};

int analyze(const Common& c, const std::string& input, std::ostream& out);
int descend(const Common& c, const std::string& input, bool refine, std::ostream& out);
int chartab(const Common& c, const std::string& group, std::ostream& out);
int cohomology(const Common& c, const std::string& module, const std::string& cocycle,
               bool basis, std::ostream& out);
int relmod(const Common& c, const std::string& group, int rank, long long mod, bool verify,
           std::ostream& out);
int gaschuetz_lift(const Common& c, const std::string& g1, const std::string& g2,
                   const std::string& psi, const std::string& tuple, std::ostream& out);
int genus1_triples(const Common& c, std::ostream& out);
int genus1_kummer(const Common& c, int a, int b, int d, std::ostream& out);
int genus1_cm(const Common& c, int d, int n, std::ostream& out);
int genus1_jdeg(const Common& c, int t, std::ostream& out);
int corpus(const Common& c, const std::vector<int>& only, int perturb, std::ostream& out);

}  // namespace belyi::cli
