#include "belyi/character_table.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "belyi/error.hpp"

namespace belyi {
namespace {

using u64 = std::uint64_t;

constexpr int kMaxClasses = 400;

u64 powmod(u64 b, u64 e, u64 p) {
  u64 r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) {
  ensure(a % p != 0, "inverse of zero modulo p");
  return powmod(a, p - 2, p);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

u64 primitive_root(u64 p) {
  std::vector<u64> fs;
  u64 m = p - 1;
  for (u64 d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      fs.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) fs.push_back(m);
  for (u64 g = 2;; ++g) {
    bool ok = true;
    for (u64 f : fs) ok = ok && powmod(g, (p - 1) / f, p) != 1;
    if (ok) return g;
  }
}

using Vec = std::vector<u64>;
using Mat = std::vector<Vec>;

// Row-reduces and drops zero rows.
Mat rref(Mat rows, u64 p, std::vector<int>* pivots) {
  const int cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  int r = 0;
  pivots->clear();
  for (int c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
    int piv = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i)
      if (rows[i][c]) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[piv], rows[r]);
    u64 inv = invmod(rows[r][c], p);
    for (auto& v : rows[r]) v = v * inv % p;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r || !rows[i][c]) continue;
      u64 f = rows[i][c];
      for (int j = 0; j < cols; ++j) rows[i][j] = (rows[i][j] + (p - f) * rows[r][j]) % p;
    }
    pivots->push_back(c);
    ++r;
  }
  rows.resize(r);
  return rows;
}

Mat nullspace(const Mat& a, u64 p) {
  const int n = static_cast<int>(a.size());
  std::vector<int> piv;
  Mat red = rref(a, p, &piv);
  std::vector<char> is_piv(n, 0);
  for (int c : piv) is_piv[c] = 1;
  Mat out;
  for (int f = 0; f < n; ++f) {
    if (is_piv[f]) continue;
    Vec v(n, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = (p - red[i][f]) % p;
    out.push_back(std::move(v));
  }
  return out;
}

// Characteristic polynomial (ascending, monic) via Hessenberg reduction.
Vec charpoly(Mat h, u64 p) {
  const int n = static_cast<int>(h.size());
  for (int j = 0; j + 2 < n; ++j) {
    int piv = -1;
    for (int i = j + 1; i < n; ++i)
      if (h[i][j]) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != j + 1) {
      std::swap(h[piv], h[j + 1]);
      for (int i = 0; i < n; ++i) std::swap(h[i][piv], h[i][j + 1]);
    }
    u64 inv = invmod(h[j + 1][j], p);
    for (int k = j + 2; k < n; ++k) {
      if (!h[k][j]) continue;
      u64 u = h[k][j] * inv % p;
      for (int c = 0; c < n; ++c) h[k][c] = (h[k][c] + (p - u) * h[j + 1][c]) % p;
      for (int r = 0; r < n; ++r) h[r][j + 1] = (h[r][j + 1] + u * h[r][k]) % p;
    }
  }
  std::vector<Vec> pol(n + 1);
  pol[0] = {1};
  for (int m = 1; m <= n; ++m) {
    Vec cur(m + 1, 0);
    const Vec& prev = pol[m - 1];
    for (int i = 0; i < m; ++i) {
      cur[i + 1] = (cur[i + 1] + prev[i]) % p;
      cur[i] = (cur[i] + (p - h[m - 1][m - 1]) * prev[i]) % p;
    }
    u64 t = 1;
    for (int i = m - 1; i >= 1; --i) {
      t = t * h[i][i - 1] % p;
      u64 coef = t * h[i - 1][m - 1] % p;
      if (!coef) continue;
      const Vec& q = pol[i - 1];
      for (std::size_t k = 0; k < q.size(); ++k) cur[k] = (cur[k] + (p - coef) * q[k]) % p;
    }
    pol[m] = std::move(cur);
  }
  return pol[n];
}

struct Dixon {
  const CayleyGroup& g;
  const ClassData& cd;
  u64 p;
  int k;

  // Matrix of sum_j r_j A_j, where (A_j)[a][l] counts x in C_j with
  // x^-1 z_l in C_a, z_l the representative of class l.
  Mat combination(const Vec& r) const {
    Mat m(k, Vec(k, 0));
    for (int l = 0; l < k; ++l) {
      int z = cd.reps[l];
      for (int x = 0; x < g.order(); ++x) {
        int a = cd.class_of[g.mul(g.inv(x), z)];
        m[a][l] = (m[a][l] + r[cd.class_of[x]]) % p;
      }
    }
    return m;
  }
};

}  // namespace

std::shared_ptr<const CharacterTable> CharacterTable::compute(const PermGroup& g, std::uint64_t seed) {
  auto t = std::const_pointer_cast<CharacterTable>(compute(CayleyGroup::from_perm_group(g), seed));
  t->perm_ = g;
  return t;
}

std::shared_ptr<const CharacterTable> CharacterTable::compute(const CayleyGroup& g, std::uint64_t seed) {
  const ClassData& cd = g.classes();
  const int k = cd.count();
  const long long n = g.order();
  if (k > kMaxClasses) throw ScaleError("character tables are limited to " + std::to_string(kMaxClasses) + " classes");
  const int N = cd.exponent;

  u64 p = N + 1;
  const double bound = 2.0 * std::sqrt(static_cast<double>(n));
  while (!(is_prime(p) && static_cast<double>(p) > bound)) p += N;

  Dixon dx{g, cd, p, k};
  std::mt19937_64 rng(seed);
  std::vector<Mat> done;
  std::vector<Mat> pending;
  {
    Mat id(k, Vec(k, 0));
    for (int i = 0; i < k; ++i) id[i][i] = 1;
    pending.push_back(std::move(id));
  }
  for (int round = 0; !pending.empty(); ++round) {
    ensure(round < 400, "class matrices failed to split");
    Vec r(k);
    for (auto& v : r) v = rng() % p;
    Mat m = dx.combination(r);
    std::vector<Mat> next;
    for (auto& space : pending) {
      std::vector<int> piv;
      space = rref(space, p, &piv);
      const int dim = static_cast<int>(space.size());
      Mat rm(dim, Vec(dim, 0));
      for (int i = 0; i < dim; ++i) {
        Vec img(k, 0);
        for (int a = 0; a < k; ++a) {
          u64 s = 0;
          for (int b = 0; b < k; ++b) s = (s + m[a][b] * space[i][b]) % p;
          img[a] = s;
        }
        for (int j = 0; j < dim; ++j) rm[j][i] = img[piv[j]];
      }
      Vec cp = charpoly(rm, p);
      int total = 0;
      std::vector<Mat> parts;
      for (u64 lam = 0; lam < p && total < dim; ++lam) {
        u64 val = 0;
        for (int i = static_cast<int>(cp.size()) - 1; i >= 0; --i) val = (val * lam + cp[i]) % p;
        if (val) continue;
        Mat shifted = rm;
        for (int i = 0; i < dim; ++i) shifted[i][i] = (shifted[i][i] + p - lam) % p;
        Mat ns = nullspace(shifted, p);
        Mat vecs;
        for (const auto& c : ns) {
          Vec v(k, 0);
          for (int i = 0; i < dim; ++i)
            for (int a = 0; a < k; ++a) v[a] = (v[a] + c[i] * space[i][a]) % p;
          vecs.push_back(std::move(v));
        }
        total += static_cast<int>(vecs.size());
        parts.push_back(std::move(vecs));
      }
      ensure(total == dim, "class matrix combination is not diagonalizable");
      for (auto& part : parts) (part.size() == 1 ? done : next).push_back(std::move(part));
    }
    pending = std::move(next);
  }
  ensure(static_cast<int>(done.size()) == k, "wrong number of irreducible characters");

  const u64 root = powmod(primitive_root(p), (p - 1) / N, p);
  auto t = std::make_shared<CharacterTable>();
  t->group_ = g;
  t->prime_ = static_cast<int>(p);
  const long long dmax = static_cast<long long>(std::sqrt(static_cast<double>(n))) + 1;
  for (const auto& sp : done) {
    Vec w = sp[0];
    ensure(w[0] != 0, "central character vanishes on the identity");
    u64 inv0 = invmod(w[0], p);
    for (auto& v : w) v = v * inv0 % p;
    u64 s = 0;
    for (int j = 0; j < k; ++j)
      s = (s + w[j] * w[cd.inverse[j]] % p * invmod(static_cast<u64>(cd.sizes[j]) % p, p)) % p;
    u64 target = static_cast<u64>(n) % p * invmod(s, p) % p;
    long long deg = -1;
    for (long long d = 1; d <= dmax && d * d <= n; ++d)
      if (static_cast<u64>(d * d) % p == target) {
        ensure(deg < 0, "ambiguous character degree");
        deg = d;
      }
    ensure(deg > 0, "no character degree matches");
    Vec chi(k);
    for (int j = 0; j < k; ++j)
      chi[j] = w[j] * static_cast<u64>(deg) % p * invmod(static_cast<u64>(cd.sizes[j]) % p, p) % p;
    ClassFunction row;
    for (int j = 0; j < k; ++j) {
      const int o = cd.orders[j];
      const u64 z = powmod(root, static_cast<u64>(N / o), p);
      const u64 zinv = invmod(z, p);
      const u64 oinv = invmod(static_cast<u64>(o), p);
      std::vector<Rational> expo(N);
      for (int e = 0; e < o; ++e) {
        u64 acc = 0;
        const u64 step = powmod(zinv, static_cast<u64>(e), p);
        u64 zz = 1;
        for (int l = 0; l < o; ++l) {
          acc = (acc + chi[cd.power[j][l]] * zz) % p;
          zz = zz * step % p;
        }
        acc = acc * oinv % p;
        ensure(static_cast<long long>(acc) <= deg, "eigenvalue multiplicity exceeds the degree");
        expo[static_cast<std::size_t>(e) * (N / o)] = static_cast<std::int64_t>(acc);
      }
      row.push_back(Cyclotomic::from_exponents(N, expo));
    }
    t->rows_.push_back(std::move(row));
    t->degrees_.push_back(deg);
  }

  std::vector<int> order(k);
  std::iota(order.begin(), order.end(), 0);
  auto key = [&](int i) {
    std::vector<std::pair<std::int64_t, std::int64_t>> v;
    for (const auto& c : t->rows_[i])
      for (const auto& r : c.coords()) v.emplace_back(-r.num(), r.den());
    return v;
  };
  auto is_trivial = [&](int i) {
    for (const auto& c : t->rows_[i])
      if (!(c == Cyclotomic(N, Rational(1)))) return false;
    return true;
  };
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    bool ta = is_trivial(a), tb = is_trivial(b);
    if (ta != tb) return ta;
    if (t->degrees_[a] != t->degrees_[b]) return t->degrees_[a] < t->degrees_[b];
    return key(a) < key(b);
  });
  std::vector<ClassFunction> rows;
  std::vector<long long> degs;
  for (int i : order) {
    rows.push_back(t->rows_[i]);
    degs.push_back(t->degrees_[i]);
  }
  t->rows_ = std::move(rows);
  t->degrees_ = std::move(degs);

  long long sq = 0;
  for (long long d : t->degrees_) sq += d * d;
  ensure(sq == n, "sum of squared degrees differs from the group order");
  ensure(is_trivial(0), "trivial character missing");
  for (const auto& row : t->rows_)
    for (const auto& v : row) ensure(v.is_integral(), "character value is not an algebraic integer");
  return t;
}

int CharacterTable::class_of(const Permutation& p) const {
  require(perm_.has_value(), "table has no permutation group");
  int i = perm_->index_of(p);
  require(i >= 0, "element not in group");
  return classes().class_of[i];
}

long long VirtualCharacter::degree() const {
  long long d = 0;
  for (std::size_t i = 0; i < mults.size(); ++i) d += mults[i] * table->degrees()[i];
  return d;
}

bool VirtualCharacter::is_genuine() const {
  return std::all_of(mults.begin(), mults.end(), [](long long m) { return m >= 0; });
}

ClassFunction VirtualCharacter::values() const {
  const int k = table->size();
  ClassFunction f(k, Cyclotomic(table->exponent()));
  for (int i = 0; i < k; ++i) {
    if (!mults[i]) continue;
    for (int c = 0; c < k; ++c) f[c] += table->row(i)[c] * Rational(mults[i]);
  }
  return f;
}

static void same_table(const VirtualCharacter& a, const VirtualCharacter& b) {
  require(a.table == b.table, "characters of different tables");
}

VirtualCharacter operator+(const VirtualCharacter& a, const VirtualCharacter& b) {
  same_table(a, b);
  VirtualCharacter r = a;
  for (std::size_t i = 0; i < r.mults.size(); ++i) r.mults[i] += b.mults[i];
  return r;
}

VirtualCharacter operator-(const VirtualCharacter& a, const VirtualCharacter& b) {
  same_table(a, b);
  VirtualCharacter r = a;
  for (std::size_t i = 0; i < r.mults.size(); ++i) r.mults[i] -= b.mults[i];
  return r;
}

VirtualCharacter operator*(long long k, const VirtualCharacter& a) {
  VirtualCharacter r = a;
  for (auto& m : r.mults) m *= k;
  return r;
}

VirtualCharacter irreducible(const TablePtr& t, int row) {
  VirtualCharacter v{t, std::vector<long long>(t->size(), 0)};
  v.mults.at(row) = 1;
  return v;
}

VirtualCharacter regular_character(const TablePtr& t) { return {t, t->degrees()}; }

namespace {

Cyclotomic at(const Cyclotomic& c, int n) { return c.conductor() == n ? c : c.lift(n); }

}  // namespace

Cyclotomic inner_product_exact(const CharacterTable& t, const ClassFunction& a, const ClassFunction& b) {
  require(static_cast<int>(a.size()) == t.size() && static_cast<int>(b.size()) == t.size(),
          "class function has wrong length");
  int n = 1;
  for (const auto& v : a) n = std::lcm(n, v.conductor());
  for (const auto& v : b) n = std::lcm(n, v.conductor());
  Cyclotomic s(n);
  for (int c = 0; c < t.size(); ++c)
    s += at(a[c], n) * at(b[c], n).conj() * Rational(t.classes().sizes[c]);
  return s * Rational(1, t.order());
}

long long inner_product(const CharacterTable& t, const ClassFunction& a, const ClassFunction& b) {
  Cyclotomic s = inner_product_exact(t, a, b);
  ensure(s.is_rational() && s.rational_value().is_integer(), "inner product is not an integer");
  return s.rational_value().num();
}

long long inner_product(const VirtualCharacter& a, const VirtualCharacter& b) {
  same_table(a, b);
  long long s = 0;
  for (std::size_t i = 0; i < a.mults.size(); ++i) s += a.mults[i] * b.mults[i];
  return s;
}

VirtualCharacter decompose(const TablePtr& t, const ClassFunction& f) {
  require(static_cast<int>(f.size()) == t->size(), "class function has wrong length");
  int n = t->exponent();
  for (const auto& v : f) n = std::lcm(n, v.conductor());
  const ClassData& cd = t->classes();
  VirtualCharacter out{t, {}};
  for (int i = 0; i < t->size(); ++i) {
    Cyclotomic s(n);
    for (int c = 0; c < t->size(); ++c)
      s += at(f[c], n) * at(t->row(i)[cd.inverse[c]], n) * Rational(cd.sizes[c]);
    s *= Rational(1, t->order());
    ensure(s.is_rational() && s.rational_value().is_integer(), "decomposition is not integral");
    out.mults.push_back(s.rational_value().num());
  }
  return out;
}

long long fixed_space_dim_at(const CharacterTable& t, int row, int element_index) {
  require(row >= 0 && row < t.size(), "row out of range");
  const ClassData& cd = t.classes();
  int c = cd.class_of.at(element_index);
  int o = cd.orders[c];
  Cyclotomic s(t.exponent());
  for (int k = 0; k < o; ++k) s += t.row(row)[cd.power[c][k]];
  ensure(s.is_rational(), "fixed-space trace sum is not rational");
  Rational d = s.rational_value() / Rational(o);
  ensure(d.is_integer() && d.num() >= 0, "fixed-space dimension is not a non-negative integer");
  return d.num();
}

long long fixed_space_dim(const CharacterTable& t, int row, const Permutation& g) {
  require(t.perm_group().has_value(), "table has no permutation group");
  int i = t.perm_group()->index_of(g);
  require(i >= 0, "element not in group");
  return fixed_space_dim_at(t, row, i);
}

ClassFunction perm_class_function(const CharacterTable& t) {
  require(t.perm_group().has_value(), "table has no permutation group");
  ClassFunction f;
  for (int r : t.classes().reps)
    f.emplace_back(t.exponent(), Rational(t.perm_group()->element(r).fixed_points()));
  return f;
}

VirtualCharacter perm_character(const TablePtr& t) { return decompose(t, perm_class_function(*t)); }

VirtualCharacter restrict(const VirtualCharacter& chi, const TablePtr& sub) {
  require(sub->perm_group().has_value() && chi.table->perm_group().has_value(),
          "restriction needs permutation groups");
  std::vector<int> emb(sub->order());
  for (int i = 0; i < sub->order(); ++i) {
    emb[i] = chi.table->perm_group()->index_of(sub->perm_group()->element(i));
    require(emb[i] >= 0, "not a subgroup");
  }
  return restrict(chi, sub, emb);
}

VirtualCharacter restrict(const VirtualCharacter& chi, const TablePtr& sub, const std::vector<int>& embedding) {
  ClassFunction vals = chi.values();
  ClassFunction f;
  for (int r : sub->classes().reps) f.push_back(vals[chi.table->class_of_element(embedding.at(r))]);
  return decompose(sub, f);
}

}  // namespace belyi
