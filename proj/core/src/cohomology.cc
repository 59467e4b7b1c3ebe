#include "belyi/cohomology.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>

#include "belyi/error.hpp"
#include "belyi/free_group.hpp"

namespace belyi {

namespace {

constexpr long long kSaturated = 1LL << 62;

long long md(long long a, long long m) {
  a %= m;
  return a < 0 ? a + m : a;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b, const std::vector<long long>& mods) {
  const std::size_t k = mods.size();
  IntMatrix c(k, std::vector<long long>(k, 0));
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[r][l] == 0) continue;
      for (std::size_t j = 0; j < k; ++j) c[r][j] += a[r][l] * b[l][j] % mods[r];
    }
  for (std::size_t r = 0; r < k; ++r)
    for (auto& x : c[r]) x = md(x, mods[r]);
  return c;
}

std::vector<long long> primes_of(long long n) {
  std::vector<long long> ps;
  for (long long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

int rank_mod_p(IntMatrix a, long long p) {
  int rank = 0;
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (a[r][c] % p != 0) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(a[piv], a[rank]);
    long long inv = 1;
    for (long long x = a[rank][c] % p, e = p - 2; e > 0; e >>= 1, x = x * x % p)
      if (e & 1) inv = inv * x % p;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] % p == 0) continue;
      long long f = a[r][c] % p * inv % p;
      for (int j = 0; j < cols; ++j) a[r][j] = md(a[r][j] - f * a[rank][j], p);
    }
    ++rank;
  }
  return rank;
}

}  // namespace

struct FiniteHModule::Data {
  CayleyGroup h;
  std::vector<long long> shape;
  long long size = 1;
  std::vector<IntMatrix> action;
  std::once_flag once;
  std::unique_ptr<AbelianMap> cob1;
};

const CayleyGroup& FiniteHModule::group() const { return d_->h; }
const std::vector<long long>& FiniteHModule::shape() const { return d_->shape; }
int FiniteHModule::rank() const { return static_cast<int>(d_->shape.size()); }
long long FiniteHModule::size() const { return d_->size; }
const IntMatrix& FiniteHModule::action(int h) const { return d_->action[h]; }

FiniteHModule::FiniteHModule(const CayleyGroup& h, std::vector<long long> shape,
                             std::vector<IntMatrix> action)
    : d_(std::make_shared<Data>()) {
  const int n = h.order();
  const std::size_t k = shape.size();
  long long size = 1;
  for (long long m : shape) {
    require(m >= 2, "module moduli must be at least 2");
    size = size > kSaturated / m ? kSaturated : size * m;
  }
  require(static_cast<int>(action.size()) == n, "action must list a matrix for every element");
  for (auto& a : action) {
    require(a.size() == k, "action matrix has wrong size");
    for (std::size_t r = 0; r < k; ++r) {
      require(a[r].size() == k, "action matrix has wrong size");
      for (std::size_t c = 0; c < k; ++c) {
        a[r][c] = md(a[r][c], shape[r]);
        require(a[r][c] * shape[c] % shape[r] == 0, "action matrix is not well defined mod the shape");
      }
    }
  }
  d_->h = h;
  d_->shape = std::move(shape);
  d_->size = size;
  d_->action = std::move(action);
  require(d_->action[0] == identity_matrix(), "identity must act trivially");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      require(mat_mul(d_->action[a], d_->action[b], d_->shape) == d_->action[h.mul(a, b)],
              "action is not a homomorphism");
}

FiniteHModule FiniteHModule::trivial(const CayleyGroup& h, std::vector<long long> shape) {
  IntMatrix id(shape.size(), std::vector<long long>(shape.size(), 0));
  for (std::size_t i = 0; i < shape.size(); ++i) id[i][i] = 1;
  return FiniteHModule(h, std::move(shape), std::vector<IntMatrix>(h.order(), id));
}

FiniteHModule FiniteHModule::from_generator_action(const CayleyGroup& h, std::vector<long long> shape,
                                                   const std::vector<IntMatrix>& gen_action) {
  const auto& gens = h.generator_indices();
  require(gen_action.size() == gens.size(), "one matrix per generator required");
  const std::size_t k = shape.size();
  for (long long m : shape) require(m >= 2, "module moduli must be at least 2");
  IntMatrix id(k, std::vector<long long>(k, 0));
  for (std::size_t i = 0; i < k; ++i) id[i][i] = 1;
  std::vector<IntMatrix> g(gen_action);
  for (auto& a : g) {
    require(a.size() == k, "action matrix has wrong size");
    for (std::size_t r = 0; r < k; ++r) {
      require(a[r].size() == k, "action matrix has wrong size");
      for (auto& x : a[r]) x = md(x, shape[r]);
    }
  }
  std::vector<IntMatrix> act(h.order());
  std::vector<char> seen(h.order(), 0);
  act[0] = id;
  seen[0] = 1;
  std::vector<int> queue{0};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    int x = queue[q];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      int y = h.mul(x, gens[i]);
      IntMatrix m = mat_mul(act[x], g[i], shape);
      if (seen[y]) {
        require(act[y] == m, "generator matrices do not define an action");
        continue;
      }
      seen[y] = 1;
      act[y] = std::move(m);
      queue.push_back(y);
    }
  }
  return FiniteHModule(h, std::move(shape), std::move(act));
}

long long FiniteHModule::exponent() const { return AbelianShape{shape()}.exponent(); }

IntMatrix FiniteHModule::identity_matrix() const {
  IntMatrix id(rank(), std::vector<long long>(rank(), 0));
  for (int i = 0; i < rank(); ++i) id[i][i] = 1;
  return id;
}

ModElem FiniteHModule::reduce(ModElem v) const {
  require(static_cast<int>(v.size()) == rank(), "module element has wrong length");
  for (int i = 0; i < rank(); ++i) v[i] = md(v[i], shape()[i]);
  return v;
}

ModElem FiniteHModule::add(const ModElem& a, const ModElem& b) const {
  ModElem c(rank());
  for (int i = 0; i < rank(); ++i) c[i] = md(a[i] + b[i], shape()[i]);
  return c;
}

ModElem FiniteHModule::sub(const ModElem& a, const ModElem& b) const {
  ModElem c(rank());
  for (int i = 0; i < rank(); ++i) c[i] = md(a[i] - b[i], shape()[i]);
  return c;
}

ModElem FiniteHModule::apply(const IntMatrix& g, const ModElem& v) const {
  const int k = rank();
  ModElem w(k, 0);
  for (int r = 0; r < k; ++r) {
    long long acc = 0;
    for (int c = 0; c < k; ++c) acc = (acc + g[r][c] % shape()[r] * v[c]) % shape()[r];
    w[r] = md(acc, shape()[r]);
  }
  return w;
}

ModElem FiniteHModule::act(int h, const ModElem& v) const { return apply(action(h), v); }

long long FiniteHModule::encode(const ModElem& v) const {
  if (size() > kMaxSize) throw ScaleError("module of order " + std::to_string(size()) + " exceeds the enumeration limit " + std::to_string(kMaxSize));
  long long code = 0;
  for (int i = rank() - 1; i >= 0; --i) code = code * shape()[i] + md(v[i], shape()[i]);
  return code;
}

ModElem FiniteHModule::decode(long long code) const {
  if (size() > kMaxSize) throw ScaleError("module of order " + std::to_string(size()) + " exceeds the enumeration limit " + std::to_string(kMaxSize));
  require(code >= 0 && code < size(), "module element code out of range");
  ModElem v(rank());
  for (int i = 0; i < rank(); ++i) {
    v[i] = code % shape()[i];
    code /= shape()[i];
  }
  return v;
}

bool FiniteHModule::is_endomorphism(const IntMatrix& g) const {
  const int k = rank();
  if (static_cast<int>(g.size()) != k) return false;
  for (int r = 0; r < k; ++r) {
    if (static_cast<int>(g[r].size()) != k) return false;
    for (int c = 0; c < k; ++c)
      if (static_cast<__int128>(g[r][c]) * shape()[c] % shape()[r] != 0) return false;
  }
  return true;
}

bool FiniteHModule::is_automorphism(const IntMatrix& g) const {
  if (!is_endomorphism(g)) return false;
  const auto& s = shape();
  for (long long p : primes_of(exponent())) {
    std::vector<int> idx;
    for (int i = 0; i < rank(); ++i)
      if (s[i] % p == 0) idx.push_back(i);
    IntMatrix b(idx.size(), std::vector<long long>(idx.size()));
    for (std::size_t r = 0; r < idx.size(); ++r)
      for (std::size_t c = 0; c < idx.size(); ++c)
        b[r][c] = md(md(g[idx[r]][idx[c]], s[idx[r]]) * s[idx[c]] / s[idx[r]], p);
    if (rank_mod_p(b, p) != static_cast<int>(idx.size())) return false;
  }
  return true;
}

bool FiniteHModule::is_equivariant(const IntMatrix& g) const {
  if (!is_endomorphism(g)) return false;
  IntMatrix gr(g);
  for (int r = 0; r < rank(); ++r)
    for (auto& x : gr[r]) x = md(x, shape()[r]);
  for (int s : group().generator_indices())
    if (mat_mul(gr, action(s), shape()) != mat_mul(action(s), gr, shape())) return false;
  return true;
}

const AbelianMap& FiniteHModule::coboundary1() const {
  std::call_once(d_->once, [this] {
    const int n = group().order();
    const int k = rank();
    const long long rows = static_cast<long long>(n - 1) * (n - 1) * k;
    const long long cols = static_cast<long long>(n - 1) * k;
    if (rows * cols > 8'000'000) throw ScaleError("coboundary system has " + std::to_string(rows * cols) + " entries, limit 8000000");
    AbelianShape a, b;
    for (int h = 1; h < n; ++h)
      for (int c = 0; c < k; ++c) a.moduli.push_back(shape()[c]);
    for (int h1 = 1; h1 < n; ++h1)
      for (int h2 = 1; h2 < n; ++h2)
        for (int r = 0; r < k; ++r) b.moduli.push_back(shape()[r]);
    IntMatrix t(rows, std::vector<long long>(cols, 0));
    for (int h1 = 1; h1 < n; ++h1)
      for (int h2 = 1; h2 < n; ++h2) {
        int h12 = group().mul(h1, h2);
        for (int r = 0; r < k; ++r) {
          auto& row = t[(static_cast<long long>(h1 - 1) * (n - 1) + (h2 - 1)) * k + r];
          for (int c = 0; c < k; ++c) row[(h2 - 1) * k + c] += action(h1)[r][c];
          if (h12 != 0) row[(h12 - 1) * k + r] -= 1;
          row[(h1 - 1) * k + r] += 1;
        }
      }
    d_->cob1 = std::make_unique<AbelianMap>(a, b, t);
  });
  return *d_->cob1;
}

bool operator==(const FiniteHModule& a, const FiniteHModule& b) {
  if (a.d_ == b.d_) return true;
  return a.shape() == b.shape() && a.d_->action == b.d_->action &&
         a.group().order() == b.group().order() && a.group().table() == b.group().table();
}

std::vector<ModElem> coboundary(const FiniteHModule& m, const std::vector<ModElem>& c) {
  const int n = m.group().order();
  require(static_cast<int>(c.size()) == n, "cochain must have one value per element");
  std::vector<ModElem> t(static_cast<std::size_t>(n) * n);
  for (int h1 = 0; h1 < n; ++h1)
    for (int h2 = 0; h2 < n; ++h2)
      t[static_cast<std::size_t>(h1) * n + h2] =
          m.add(m.sub(m.act(h1, c[h2]), c[m.group().mul(h1, h2)]), c[h1]);
  return t;
}

bool is_normalized(const FiniteHModule& m, const std::vector<ModElem>& t) {
  const int n = m.group().order();
  ModElem z = m.zero();
  for (int h = 0; h < n; ++h)
    if (t[h] != z || t[static_cast<std::size_t>(h) * n] != z) return false;
  return true;
}

bool satisfies_cocycle_identity(const FiniteHModule& m, const std::vector<ModElem>& t) {
  const int n = m.group().order();
  const auto& g = m.group();
  auto at = [&](int a, int b) -> const ModElem& { return t[static_cast<std::size_t>(a) * n + b]; };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int ab = g.mul(a, b);
      for (int c = 0; c < n; ++c) {
        ModElem lhs = m.add(m.sub(m.act(a, at(b, c)), at(ab, c)), m.sub(at(a, g.mul(b, c)), at(a, b)));
        for (long long x : lhs)
          if (x != 0) return false;
      }
    }
  return true;
}

Cocycle2::Cocycle2(const FiniteHModule& m, std::vector<ModElem> table, Unchecked)
    : m_(m), table_(std::move(table)) {}

Cocycle2::Cocycle2(const FiniteHModule& m, std::vector<ModElem> table) : m_(m) {
  const int n = m.group().order();
  require(table.size() == static_cast<std::size_t>(n) * n, "cocycle table must have |H|^2 entries");
  for (auto& v : table) v = m.reduce(std::move(v));
  require(is_normalized(m, table), "cocycle is not normalized");
  require(satisfies_cocycle_identity(m, table), "cocycle identity fails");
  table_ = std::move(table);
}

Cocycle2 Cocycle2::zero(const FiniteHModule& m) {
  const int n = m.group().order();
  return Cocycle2(m, std::vector<ModElem>(static_cast<std::size_t>(n) * n, m.zero()), Unchecked{});
}

bool Cocycle2::is_zero() const {
  for (const auto& v : table_)
    for (long long x : v)
      if (x) return false;
  return true;
}

Cocycle2 Cocycle2::operator+(const Cocycle2& o) const {
  require(m_ == o.m_, "cocycles over different modules");
  std::vector<ModElem> t(table_.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = m_.add(table_[i], o.table_[i]);
  return Cocycle2(m_, std::move(t), Unchecked{});
}

Cocycle2 Cocycle2::operator-(const Cocycle2& o) const {
  require(m_ == o.m_, "cocycles over different modules");
  std::vector<ModElem> t(table_.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = m_.sub(table_[i], o.table_[i]);
  return Cocycle2(m_, std::move(t), Unchecked{});
}

Cocycle2 Cocycle2::scaled(long long k) const {
  std::vector<ModElem> t(table_);
  for (auto& v : t) {
    for (auto& x : v) x *= k;
    v = m_.reduce(std::move(v));
  }
  return Cocycle2(m_, std::move(t), Unchecked{});
}

Cocycle2 Cocycle2::transformed(const IntMatrix& gamma) const {
  require(m_.is_equivariant(gamma), "map is not an H-equivariant endomorphism");
  std::vector<ModElem> t(table_.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = m_.apply(gamma, table_[i]);
  return Cocycle2(m_, std::move(t), Unchecked{});
}

Cocycle2 Cocycle2::plus_coboundary(const std::vector<ModElem>& c) const {
  require(!c.empty() && c[0] == m_.zero(), "1-cochain must vanish at the identity");
  std::vector<ModElem> reduced(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) reduced[i] = m_.reduce(c[i]);
  auto d = coboundary(m_, reduced);
  std::vector<ModElem> t(table_.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = m_.add(table_[i], d[i]);
  return Cocycle2(m_, std::move(t), Unchecked{});
}

namespace {

// Word evaluation in the extension defined by beta, generators sent to (img_i, u_i).
struct ExtEval {
  const FiniteHModule& m;
  const std::vector<ModElem>* beta;  // null for the split extension
  int n;

  ModElem b(int h1, int h2) const {
    return beta ? (*beta)[static_cast<std::size_t>(h1) * n + h2] : m.zero();
  }
  std::pair<int, ModElem> mul(const std::pair<int, ModElem>& x, const std::pair<int, ModElem>& y) const {
    const auto& g = m.group();
    return {g.mul(x.first, y.first), m.add(m.add(x.second, m.act(x.first, y.second)), b(x.first, y.first))};
  }
  std::pair<int, ModElem> inv(const std::pair<int, ModElem>& x) const {
    const auto& g = m.group();
    int hi = g.inv(x.first);
    ModElem t = m.add(x.second, b(x.first, hi));
    ModElem z = m.sub(m.zero(), m.act(hi, t));
    return {hi, z};
  }
  std::pair<int, ModElem> eval(const FreeWord& w, const std::vector<std::pair<int, ModElem>>& gens) const {
    std::pair<int, ModElem> acc{0, m.zero()};
    for (int a : w.letters()) {
      const auto& g = gens[std::abs(a) - 1];
      acc = mul(acc, a > 0 ? g : inv(g));
    }
    return acc;
  }
};

}  // namespace

SecondCohomology::SecondCohomology(const FiniteHModule& m) : m_(m) {
  const CayleyGroup& h = m.group();
  const int n = h.order();
  const int k = m.rank();
  if (m.size() > 4096 / n) throw ScaleError("|H|*|M| exceeds 4096");
  if (n == 1 || k == 0) {
    sq_ = std::make_shared<Subquotient>(AbelianShape{}, AbelianShape{}, IntMatrix{},
                                        std::vector<std::vector<long long>>{});
    return;
  }
  const auto& gens = h.generator_indices();
  sd_ = std::make_shared<SchreierData>(h, gens);
  const int d = static_cast<int>(gens.size());
  const int R = sd_->rank();
  const auto& mods = m.shape();
  // Unknown F in Hom(Z^R, M): entry (r, j) at index r * R + j.
  AbelianShape a, b;
  for (int r = 0; r < k; ++r)
    for (int j = 0; j < R; ++j) a.moduli.push_back(mods[r]);
  IntMatrix t;
  for (int l = 0; l < d; ++l) {
    IntMatrix as = sd_->action_matrix(gens[l]);
    const IntMatrix& bs = m.action(gens[l]);
    for (int j = 0; j < R; ++j)
      for (int r = 0; r < k; ++r) {
        std::vector<long long> row(static_cast<std::size_t>(k) * R, 0);
        for (int i = 0; i < R; ++i) row[static_cast<std::size_t>(r) * R + i] += md(as[i][j], mods[r]);
        for (int c = 0; c < k; ++c) row[static_cast<std::size_t>(c) * R + j] -= bs[r][c];
        t.push_back(std::move(row));
        b.moduli.push_back(mods[r]);
      }
  }
  ExtEval split{m, nullptr, n};
  std::vector<std::vector<long long>> image;
  for (int l = 0; l < d; ++l)
    for (int c = 0; c < k; ++c) {
      std::vector<std::pair<int, ModElem>> g;
      for (int i = 0; i < d; ++i) {
        ModElem u = m.zero();
        if (i == l) u[c] = 1;
        g.emplace_back(gens[i], m.reduce(u));
      }
      std::vector<long long> f(static_cast<std::size_t>(k) * R);
      for (int j = 0; j < R; ++j) {
        auto v = split.eval(sd_->free_generators()[j], g);
        ensure(v.first == 0, "free generator does not map to the identity");
        for (int r = 0; r < k; ++r) f[static_cast<std::size_t>(r) * R + j] = v.second[r];
      }
      image.push_back(std::move(f));
    }
  sq_ = std::make_shared<Subquotient>(a, b, t, image);
  // Cocycle of the pushout along F: beta(h1, h2) = F(rewrite(t1 t2 t12^-1)).
  std::vector<std::vector<long long>> rw(static_cast<std::size_t>(n) * n);
  for (int h1 = 0; h1 < n; ++h1)
    for (int h2 = 0; h2 < n; ++h2)
      rw[static_cast<std::size_t>(h1) * n + h2] =
          sd_->rewrite(sd_->transversal(h1) * sd_->transversal(h2) * sd_->transversal(h.mul(h1, h2)).inverse());
  for (const auto& f : sq_->generators()) {
    std::vector<ModElem> tab(static_cast<std::size_t>(n) * n, m.zero());
    for (std::size_t p = 0; p < tab.size(); ++p)
      for (int r = 0; r < k; ++r) {
        long long acc = 0;
        for (int j = 0; j < R; ++j)
          acc = md(acc + f[static_cast<std::size_t>(r) * R + j] * md(rw[p][j], mods[r]), mods[r]);
        tab[p][r] = acc;
      }
    basis_.push_back(Cocycle2(m, std::move(tab)));
  }
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    auto c = class_of(basis_[i]);
    for (std::size_t j = 0; j < c.size(); ++j)
      ensure(c[j] == (i == j ? 1 : 0), "basis cocycle does not map to its class");
  }
}

const std::vector<long long>& SecondCohomology::invariants() const { return sq_->invariants(); }

long long SecondCohomology::order() const { return sq_->order(); }

std::vector<long long> SecondCohomology::class_of(const Cocycle2& beta) const {
  require(beta.module() == m_, "cocycle is over a different module");
  if (!sd_) return {};
  const int n = m_.group().order();
  const int k = m_.rank();
  const int R = sd_->rank();
  ExtEval ev{m_, &beta.table(), n};
  std::vector<std::pair<int, ModElem>> g;
  for (int x : sd_->images()) g.emplace_back(x, m_.zero());
  std::vector<long long> f(static_cast<std::size_t>(k) * R);
  for (int j = 0; j < R; ++j) {
    auto v = ev.eval(sd_->free_generators()[j], g);
    ensure(v.first == 0, "free generator does not map to the identity");
    for (int r = 0; r < k; ++r) f[static_cast<std::size_t>(r) * R + j] = v.second[r];
  }
  return sq_->coordinates(f);
}

bool SecondCohomology::cohomologous(const Cocycle2& a, const Cocycle2& b) const {
  return class_of(a) == class_of(b);
}

Cocycle2 SecondCohomology::representative(const std::vector<long long>& coords) const {
  require(coords.size() == basis_.size(), "class coordinates have wrong length");
  Cocycle2 acc = Cocycle2::zero(m_);
  for (std::size_t i = 0; i < coords.size(); ++i) acc = acc + basis_[i].scaled(coords[i]);
  return acc;
}

SecondCohomology h2(const FiniteHModule& m) { return SecondCohomology(m); }

int ExtensionGroup::element(int h, const ModElem& m) const {
  return static_cast<int>(h * module.size() + module.encode(m));
}

std::pair<int, ModElem> ExtensionGroup::split(int e) const {
  return {static_cast<int>(e / module.size()), module.decode(e % module.size())};
}

std::vector<int> ExtensionGroup::projection() const {
  std::vector<int> p(group.order());
  for (int e = 0; e < group.order(); ++e) p[e] = static_cast<int>(e / module.size());
  return p;
}

std::vector<int> ExtensionGroup::fiber() const {
  std::vector<int> f(module.size());
  std::iota(f.begin(), f.end(), 0);
  return f;
}

std::vector<int> ExtensionGroup::section() const {
  std::vector<int> s(module.group().order());
  for (std::size_t h = 0; h < s.size(); ++h) s[h] = static_cast<int>(h * module.size());
  return s;
}

ExtensionGroup build_extension(const Cocycle2& beta) {
  const FiniteHModule& m = beta.module();
  const CayleyGroup& h = m.group();
  const int n = h.order();
  const long long sz = m.size();
  if (sz > CayleyGroup::kMaxOrder / n) throw ScaleError("extension of order |H|*|M| = " + std::to_string(n) + "*" + std::to_string(sz) + " exceeds " + std::to_string(CayleyGroup::kMaxOrder));
  const int N = static_cast<int>(n * sz);
  std::vector<ModElem> elems(sz);
  for (long long c = 0; c < sz; ++c) elems[c] = m.decode(c);
  std::vector<int> table(static_cast<std::size_t>(N) * N);
  for (int h1 = 0; h1 < n; ++h1)
    for (int h2 = 0; h2 < n; ++h2) {
      int h12 = h.mul(h1, h2);
      const ModElem& b = beta(h1, h2);
      for (long long c2 = 0; c2 < sz; ++c2) {
        ModElem t = m.add(m.act(h1, elems[c2]), b);
        for (long long c1 = 0; c1 < sz; ++c1) {
          long long code = m.encode(m.add(elems[c1], t));
          table[static_cast<std::size_t>(h1 * sz + c1) * N + h2 * sz + c2] = static_cast<int>(h12 * sz + code);
        }
      }
    }
  std::vector<int> gens;
  for (int g : h.generator_indices()) gens.push_back(static_cast<int>(g * sz));
  for (int c = 0; c < m.rank(); ++c) {
    ModElem u = m.zero();
    u[c] = 1;
    gens.push_back(static_cast<int>(m.encode(u)));
  }
  if (gens.empty()) gens.push_back(0);
  return ExtensionGroup{m, beta, CayleyGroup::from_valid_table(N, std::move(table), gens)};
}

Cocycle2 extension_class(const CayleyGroup& e, const FiniteHModule& m, const std::vector<int>& proj,
                         const std::vector<int>& fiber, const std::vector<int>& section) {
  const CayleyGroup& h = m.group();
  const int N = e.order();
  const int n = h.order();
  require(static_cast<int>(proj.size()) == N, "projection must be defined on every element");
  require(static_cast<long long>(fiber.size()) == m.size(), "fiber map must cover the module");
  require(static_cast<int>(section.size()) == n, "section must be defined on every element of H");
  require(static_cast<long long>(N) == n * m.size(), "|E| must equal |H||M|");
  for (int x : proj) require(x >= 0 && x < n, "projection value out of range");
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      require(proj[e.mul(a, b)] == h.mul(proj[a], proj[b]), "projection is not a homomorphism");
  std::vector<long long> code_of(N, -1);
  for (long long c = 0; c < m.size(); ++c) {
    int x = fiber[c];
    require(x >= 0 && x < N && proj[x] == 0, "fiber element does not lie in the kernel");
    require(code_of[x] < 0, "fiber map is not injective");
    code_of[x] = c;
  }
  for (long long a = 0; a < m.size(); ++a)
    for (long long b = 0; b < m.size(); ++b)
      require(fiber[m.encode(m.add(m.decode(a), m.decode(b)))] == e.mul(fiber[a], fiber[b]),
              "fiber map is not a homomorphism");
  for (int x = 0; x < n; ++x) {
    int s = section[x];
    require(s >= 0 && s < N && proj[s] == x, "section is not a transversal");
  }
  require(section[0] == 0, "section must send the identity to the identity");
  for (int x = 0; x < n; ++x)
    for (int c = 0; c < m.rank(); ++c) {
      ModElem u = m.zero();
      u[c] = 1;
      u = m.reduce(u);
      int s = section[x];
      int conj = e.mul(e.mul(s, fiber[m.encode(u)]), e.inv(s));
      require(conj == fiber[m.encode(m.act(x, u))], "conjugation action does not match the module");
    }
  std::vector<ModElem> t(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int v = e.mul(e.mul(section[a], section[b]), e.inv(section[h.mul(a, b)]));
      ensure(code_of[v] >= 0, "section product left the fiber");
      t[static_cast<std::size_t>(a) * n + b] = m.decode(code_of[v]);
    }
  return Cocycle2(m, std::move(t));
}

std::vector<IntMatrix> automorphisms_of_abelian(const std::vector<long long>& shape) {
  static std::mutex mu;
  static std::map<std::vector<long long>, std::vector<IntMatrix>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(shape);
    if (it != cache.end()) return it->second;
  }
  const int k = static_cast<int>(shape.size());
  for (long long m : shape) require(m >= 2, "module moduli must be at least 2");
  double total = 1;
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) total *= static_cast<double>(std::gcd(shape[r], shape[c]));
  if (total > static_cast<double>(1LL << 40)) throw ScaleError("more than 2^40 candidate endomorphisms");
  CayleyGroup triv = CayleyGroup::from_valid_table(1, {0});
  FiniteHModule probe = FiniteHModule::trivial(triv, shape);
  const auto primes = primes_of(probe.exponent());
  // Columns are chosen one at a time; entry (r, c) ranges over multiples of
  // m_r / gcd(m_r, m_c).  A prefix survives if its socle columns stay
  // independent mod every prime.
  std::vector<IntMatrix> out;
  IntMatrix g(k, std::vector<long long>(k, 0));
  auto prefix_ok = [&](int upto) {
    for (long long p : primes) {
      std::vector<int> idx;
      for (int i = 0; i < k; ++i)
        if (shape[i] % p == 0) idx.push_back(i);
      IntMatrix b;
      for (int c : idx) {
        if (c > upto) break;
        std::vector<long long> col;
        for (int r : idx) col.push_back(md(g[r][c] * shape[c] / shape[r], p));
        b.push_back(std::move(col));
      }
      if (rank_mod_p(b, p) != static_cast<int>(b.size())) return false;
    }
    return true;
  };
  std::function<void(int)> rec = [&](int c) {
    if (c == k) {
      if (probe.is_automorphism(g)) out.push_back(g);
      return;
    }
    std::vector<long long> digit(k, 0);
    for (;;) {
      for (int r = 0; r < k; ++r) g[r][c] = digit[r] * (shape[r] / std::gcd(shape[r], shape[c]));
      if (prefix_ok(c)) rec(c + 1);
      int r = 0;
      for (; r < k; ++r) {
        if (++digit[r] < std::gcd(shape[r], shape[c])) break;
        digit[r] = 0;
      }
      if (r == k) break;
    }
    for (int r = 0; r < k; ++r) g[r][c] = 0;
  };
  rec(0);
  if (out.size() > 4'000'000) throw ScaleError("more than 4000000 automorphisms to list");
  std::sort(out.begin(), out.end());
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(shape, out);
  return out;
}

std::vector<IntMatrix> aut_h(const FiniteHModule& m) {
  std::vector<IntMatrix> out;
  for (auto& g : automorphisms_of_abelian(m.shape()))
    if (m.is_equivariant(g)) out.push_back(g);
  return out;
}

std::vector<IntMatrix> stabilizer_beta(const std::vector<IntMatrix>& autos, const Cocycle2& beta,
                                       const SecondCohomology& h2data) {
  auto c0 = h2data.class_of(beta);
  std::vector<IntMatrix> out;
  for (const auto& g : autos)
    if (h2data.class_of(beta.transformed(g)) == c0) out.push_back(g);
  return out;
}

std::optional<ExtendedAutomorphism> extend_automorphism(const IntMatrix& gamma, const ExtensionGroup& e) {
  const FiniteHModule& m = e.module;
  require(m.is_automorphism(gamma) && m.is_equivariant(gamma), "map is not an H-equivariant automorphism");
  const int n = m.group().order();
  const int k = m.rank();
  const Cocycle2& beta = e.cocycle;
  std::vector<ModElem> c(n, m.zero());
  if (n > 1 && k > 0) {
    std::vector<long long> rhs;
    rhs.reserve(static_cast<std::size_t>(n - 1) * (n - 1) * k);
    for (int h1 = 1; h1 < n; ++h1)
      for (int h2 = 1; h2 < n; ++h2) {
        ModElem d = m.sub(m.apply(gamma, beta(h1, h2)), beta(h1, h2));
        rhs.insert(rhs.end(), d.begin(), d.end());
      }
    auto sol = m.coboundary1().preimage(rhs);
    if (!sol) return std::nullopt;
    for (int h = 1; h < n; ++h)
      for (int r = 0; r < k; ++r) c[h][r] = (*sol)[static_cast<std::size_t>(h - 1) * k + r];
  }
  ExtendedAutomorphism out;
  out.cochain = c;
  const int N = e.group.order();
  out.images.resize(N);
  std::vector<char> hit(N, 0);
  for (int x = 0; x < N; ++x) {
    auto [h, v] = e.split(x);
    int y = e.element(h, m.add(m.apply(gamma, v), c[h]));
    out.images[x] = y;
    ensure(!hit[y], "extended map is not bijective");
    hit[y] = 1;
  }
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      ensure(out.images[e.group.mul(a, b)] == e.group.mul(out.images[a], out.images[b]),
             "extended map is not a homomorphism");
  return out;
}

}  // namespace belyi
