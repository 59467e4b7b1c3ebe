#include "belyi/cayley.hpp"

#include <algorithm>
#include <mutex>
#include <string>

#include "belyi/error.hpp"

namespace belyi {

struct CayleyGroup::Lazy {
  std::once_flag once;
  std::unique_ptr<ClassData> classes;
};

namespace {

std::vector<int> greedy_generators(const CayleyGroup& g) {
  std::vector<int> gens;
  std::vector<char> in(g.order(), 0);
  in[0] = 1;
  for (int x = 1; x < g.order(); ++x) {
    if (in[x]) continue;
    gens.push_back(x);
    for (int y : g.closure(gens)) in[y] = 1;
  }
  return gens;
}

}  // namespace

CayleyGroup CayleyGroup::from_valid_table(int n, std::vector<int> table, std::vector<int> gens) {
  if (n > kMaxOrder) throw ScaleError("group order exceeds " + std::to_string(kMaxOrder));
  CayleyGroup g;
  g.n_ = n;
  g.table_ = std::move(table);
  g.inv_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.mul(a, b) == 0) {
        g.inv_[a] = b;
        break;
      }
  g.lazy_ = std::make_shared<Lazy>();
  g.gens_ = gens.empty() && n > 1 ? greedy_generators(g) : std::move(gens);
  return g;
}

CayleyGroup CayleyGroup::from_table(const std::vector<std::vector<int>>& t,
                                    std::vector<int>* relabel) {
  const int n = static_cast<int>(t.size());
  require(n >= 1, "empty multiplication table");
  if (n > kMaxOrder) throw ScaleError("group order exceeds " + std::to_string(kMaxOrder));
  for (const auto& row : t) {
    require(static_cast<int>(row.size()) == n, "multiplication table is not square");
    std::vector<char> seen(n, 0);
    for (int v : row) {
      require(v >= 0 && v < n && !seen[v], "table row is not a permutation");
      seen[v] = 1;
    }
  }
  for (int b = 0; b < n; ++b) {
    std::vector<char> seen(n, 0);
    for (int a = 0; a < n; ++a) {
      require(!seen[t[a][b]], "table column is not a permutation");
      seen[t[a][b]] = 1;
    }
  }
  int e = -1;
  for (int a = 0; a < n && e < 0; ++a) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = t[a][x] == x && t[x][a] == x;
    if (ok) e = a;
  }
  require(e >= 0, "table has no identity");
  std::vector<int> lab(n);
  for (int i = 0; i < n; ++i) lab[i] = i;
  std::swap(lab[0], lab[e]);  // old label -> new label (an involution)
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) flat[static_cast<std::size_t>(lab[a]) * n + lab[b]] = lab[t[a][b]];
  CayleyGroup g = from_valid_table(n, std::move(flat));
  for (int g0 : g.generator_indices())
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        require(g.mul(g.mul(a, g0), b) == g.mul(a, g.mul(g0, b)), "table is not associative");
  if (relabel) *relabel = lab;
  return g;
}

CayleyGroup CayleyGroup::from_perm_group(const PermGroup& p) {
  const long long n = p.order();
  if (n > kMaxOrder) throw ScaleError("group order exceeds " + std::to_string(kMaxOrder));
  std::vector<int> flat(static_cast<std::size_t>(n * n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) flat[static_cast<std::size_t>(a) * n + b] = p.mul(a, b);
  std::vector<int> gens;
  for (int i : p.generator_indices())
    if (i != 0 && std::find(gens.begin(), gens.end(), i) == gens.end()) gens.push_back(i);
  return from_valid_table(static_cast<int>(n), std::move(flat), std::move(gens));
}

int CayleyGroup::order() const { return n_; }

int CayleyGroup::power(int a, long long k) const {
  long long o = element_order(a);
  k %= o;
  if (k < 0) k += o;
  int r = 0;
  for (long long i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

int CayleyGroup::element_order(int a) const {
  int o = 1;
  for (int p = a; p != 0; p = mul(p, a)) ++o;
  return o;
}

bool CayleyGroup::is_abelian() const {
  for (int a : gens_)
    for (int b : gens_)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

const std::vector<int>& CayleyGroup::generator_indices() const { return gens_; }

const ClassData& CayleyGroup::classes() const {
  std::call_once(lazy_->once, [this] {
    lazy_->classes = std::make_unique<ClassData>(detail::compute_classes(*this));
  });
  return *lazy_->classes;
}

std::vector<int> CayleyGroup::closure(const std::vector<int>& gens) const {
  std::vector<char> in(n_, 0);
  std::vector<int> out{0};
  in[0] = 1;
  for (std::size_t h = 0; h < out.size(); ++h)
    for (int s : gens) {
      int p = mul(out[h], s);
      if (!in[p]) {
        in[p] = 1;
        out.push_back(p);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool CayleyGroup::generates(const std::vector<int>& gens) const {
  return static_cast<int>(closure(gens).size()) == n_;
}

CayleyGroup CayleyGroup::with_generators(const std::vector<int>& gens) const {
  require(generates(gens), "elements do not generate the group");
  CayleyGroup g = *this;
  g.gens_ = gens;
  g.lazy_ = std::make_shared<Lazy>();
  return g;
}

std::vector<std::vector<int>> CayleyGroup::table() const {
  std::vector<std::vector<int>> t(n_, std::vector<int>(n_));
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) t[a][b] = mul(a, b);
  return t;
}

}  // namespace belyi
