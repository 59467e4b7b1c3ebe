#include "belyi/gaschuetz.hpp"

#include <algorithm>
#include <random>

#include "belyi/constructions.hpp"
#include "belyi/error.hpp"

namespace belyi {

namespace {

// Closure test with reusable buffers.
class Generation {
 public:
  explicit Generation(const CayleyGroup& g) : g_(g), mark_(g.order(), 0) {}

  int closure_size(const int* gens, int d) {
    ++stamp_;
    if (stamp_ == 0) {
      std::fill(mark_.begin(), mark_.end(), 0);
      stamp_ = 1;
    }
    queue_.clear();
    queue_.push_back(0);
    mark_[0] = stamp_;
    for (std::size_t q = 0; q < queue_.size(); ++q) {
      int x = queue_[q];
      for (int i = 0; i < d; ++i) {
        int y = g_.mul(x, gens[i]);
        if (mark_[y] != stamp_) {
          mark_[y] = stamp_;
          queue_.push_back(y);
        }
      }
    }
    return static_cast<int>(queue_.size());
  }
  bool generates(const int* gens, int d) { return closure_size(gens, d) == g_.order(); }

 private:
  const CayleyGroup& g_;
  std::vector<unsigned> mark_;
  std::vector<int> queue_;
  unsigned stamp_ = 0;
};

}  // namespace

std::optional<std::vector<int>> generating_tuple(const CayleyGroup& g, int d) {
  require(d >= 0, "tuple length must be nonnegative");
  const int n = g.order();
  if (n == 1) return std::vector<int>(d, 0);
  if (d == 0) return std::nullopt;
  Generation gen(g);
  std::vector<int> t(d, 0);
  for (;;) {
    if (gen.generates(t.data(), d)) return t;
    int i = d - 1;
    for (; i >= 0; --i) {
      if (++t[i] < n) break;
      t[i] = 0;
    }
    if (i < 0) return std::nullopt;
  }
}

int min_generators(const CayleyGroup& g, std::uint64_t seed) {
  const int n = g.order();
  if (n == 1) return 0;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  Generation gen(g);
  for (int d = 1;; ++d) {
    std::vector<int> t(d);
    for (int attempt = 0; attempt < 256; ++attempt) {
      for (auto& x : t) x = pick(rng);
      if (gen.generates(t.data(), d)) return d;
    }
    if (generating_tuple(g, d)) return d;
  }
}

std::vector<std::vector<int>> generating_tuples(const CayleyGroup& g, int d) {
  const int n = g.order();
  double total = 1;
  for (int i = 0; i < d; ++i) total *= n;
  if (total > 2e7) throw ScaleError("more than 2e7 tuples to enumerate");
  std::vector<std::vector<int>> out;
  Generation gen(g);
  std::vector<int> t(d, 0);
  for (;;) {
    if (gen.generates(t.data(), d)) out.push_back(t);
    int i = d - 1;
    for (; i >= 0; --i) {
      if (++t[i] < n) break;
      t[i] = 0;
    }
    if (i < 0) break;
  }
  return out;
}

SurjectionProblem SurjectionProblem::from_generator_images(const CayleyGroup& g1, const CayleyGroup& g2,
                                                           const std::vector<int>& psi_on_generators,
                                                           std::vector<int> s2) {
  require(psi_on_generators.size() == g1.generator_indices().size(),
          "psi must give one image per generator of G1");
  auto psi = extend_homomorphism(g1, g2, psi_on_generators);
  require(psi.has_value(), "generator images do not define a homomorphism");
  return from_map(g1, g2, std::move(*psi), std::move(s2));
}

SurjectionProblem SurjectionProblem::from_map(const CayleyGroup& g1, const CayleyGroup& g2,
                                              std::vector<int> psi, std::vector<int> s2) {
  require(static_cast<int>(psi.size()) == g1.order(), "psi must be defined on all of G1");
  for (int v : psi) require(v >= 0 && v < g2.order(), "psi value out of range");
  for (int a = 0; a < g1.order(); ++a)
    for (int b : g1.generator_indices())
      require(psi[g1.mul(a, b)] == g2.mul(psi[a], psi[b]), "psi is not a homomorphism");
  std::vector<char> hit(g2.order(), 0);
  for (int v : psi) hit[v] = 1;
  require(std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; }), "psi is not surjective");
  for (int v : s2) require(v >= 0 && v < g2.order(), "S2 element out of range");
  return SurjectionProblem{g1, g2, std::move(psi), std::move(s2)};
}

namespace {

struct Fibers {
  std::vector<std::vector<int>> of;  // per coordinate, sorted
};

Fibers fibers(const SurjectionProblem& p) {
  Fibers f;
  for (int s : p.s2) {
    std::vector<int> v;
    for (int x = 0; x < p.g1.order(); ++x)
      if (p.psi[x] == s) v.push_back(x);
    f.of.push_back(std::move(v));
  }
  return f;
}

void check_problem(const SurjectionProblem& p) {
  require(p.g2.generates(p.s2) || p.g2.order() == 1, "S2 does not generate G2");
}

}  // namespace

std::vector<int> lift_generators(const SurjectionProblem& p) {
  check_problem(p);
  const int d = static_cast<int>(p.s2.size());
  require(d >= min_generators(p.g1), "tuple shorter than the minimal generator number of G1");
  Fibers f = fibers(p);
  Generation gen(p.g1);
  std::vector<int> idx(d, 0), t(d);
  for (;;) {
    for (int i = 0; i < d; ++i) t[i] = f.of[i][idx[i]];
    if (gen.generates(t.data(), d)) return t;
    int i = d - 1;
    for (; i >= 0; --i) {
      if (++idx[i] < static_cast<int>(f.of[i].size())) break;
      idx[i] = 0;
    }
    if (i < 0) break;
  }
  if (d == 0 && p.g1.order() == 1) return {};
  throw InvariantError("no generating lift found");
}

long long count_lifts(const SurjectionProblem& p) {
  check_problem(p);
  const int d = static_cast<int>(p.s2.size());
  if (d == 0) return p.g1.order() == 1 ? 1 : 0;
  Fibers f = fibers(p);
  double total = 1;
  for (auto& v : f.of) total *= static_cast<double>(v.size());
  if (total > 5e7) throw ScaleError("more than 5e7 candidate lifts");
  Generation gen(p.g1);
  std::vector<int> idx(d, 0), t(d);
  long long count = 0;
  for (;;) {
    for (int i = 0; i < d; ++i) t[i] = f.of[i][idx[i]];
    if (gen.generates(t.data(), d)) ++count;
    int i = d - 1;
    for (; i >= 0; --i) {
      if (++idx[i] < static_cast<int>(f.of[i].size())) break;
      idx[i] = 0;
    }
    if (i < 0) break;
  }
  return count;
}

}  // namespace belyi
