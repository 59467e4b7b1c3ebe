#include "belyi/smith.hpp"

#include <numeric>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "belyi/error.hpp"

namespace belyi {

long long mod_normalize(long long a, long long m) {
  a %= m;
  return a < 0 ? a + m : a;
}

long long lcm_checked(long long a, long long b) {
  long long g = std::gcd(a, b);
  __int128 l = static_cast<__int128>(a / g) * b;
  if (l > (static_cast<__int128>(1) << 40)) throw ScaleError("modulus above 2^40");
  return static_cast<long long>(l);
}

long long AbelianShape::exponent() const {
  long long e = 1;
  for (long long m : moduli) e = lcm_checked(e, m);
  return e;
}

namespace {

long long mulm(long long a, long long b, long long m) {
  if (m <= (1LL << 31) && a > -m && a < m && b > -m && b < m) return a * b % m;
  return static_cast<long long>(static_cast<__int128>(a) * b % m);
}

// x, y with a x + b y = g = gcd(a, b) >= 0
long long ext_gcd(long long a, long long b, long long& x, long long& y) {
  long long x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    long long q = a / b;
    std::tie(a, b) = std::make_pair(b, a - q * b);
    std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
    std::tie(y0, y1) = std::make_pair(y1, y0 - q * y1);
  }
  if (a < 0) { a = -a; x0 = -x0; y0 = -y0; }
  x = x0;
  y = y0;
  return a;
}

long long inverse_mod(long long a, long long m) {
  long long x, y;
  long long g = ext_gcd(mod_normalize(a, m), m, x, y);
  if (g != 1) throw InvariantError("not invertible");
  return mod_normalize(x, m);
}

IntMatrix identity(int n) {
  IntMatrix m(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

struct Worker {
  IntMatrix& a;
  SmithForm& s;
  long long E;

  // row_i <- p row_i + q row_j ; row_j <- r row_i + t row_j  (det = 1)
  void row_mix(int i, int j, long long p, long long q, long long r, long long t) {
    auto mix = [&](std::vector<long long>& x, std::vector<long long>& y) {
      for (std::size_t k = 0; k < x.size(); ++k) {
        long long xi = x[k], yi = y[k];
        x[k] = mod_normalize(mulm(p, xi, E) + mulm(q, yi, E), E);
        y[k] = mod_normalize(mulm(r, xi, E) + mulm(t, yi, E), E);
      }
    };
    mix(a[i], a[j]);
    if (s.U.empty()) return;
    mix(s.U[i], s.U[j]);
    // inverse column operation on Uinv: [[t, -q], [-r, p]]
    long long P = mod_normalize(t, E), Q = mod_normalize(-q, E), R = mod_normalize(-r, E),
              T = mod_normalize(p, E);
    for (auto& row : s.Uinv) {
      long long xi = row[i], yi = row[j];
      row[i] = mod_normalize(mulm(xi, P, E) + mulm(yi, R, E), E);
      row[j] = mod_normalize(mulm(xi, Q, E) + mulm(yi, T, E), E);
    }
  }
  // row_i += c row_t
  void row_addmul(int t, int i, long long c) {
    auto axpy = [&](const std::vector<long long>& x, std::vector<long long>& y) {
      for (std::size_t k = 0; k < x.size(); ++k)
        if (x[k]) y[k] = (y[k] + mulm(c, x[k], E)) % E;
    };
    axpy(a[t], a[i]);
    if (s.U.empty()) return;
    axpy(s.U[t], s.U[i]);
    for (auto& row : s.Uinv)
      if (row[i]) row[t] = mod_normalize(row[t] - mulm(c, row[i], E), E);
  }
  // col_j += c col_t
  void col_addmul(int t, int j, long long c) {
    auto apply = [&](IntMatrix& m) {
      for (auto& row : m)
        if (row[t]) row[j] = (row[j] + mulm(c, row[t], E)) % E;
    };
    apply(a);
    apply(s.C);
  }
  void col_mix(int i, int j, long long p, long long q, long long r, long long t) {
    auto apply = [&](IntMatrix& m) {
      for (auto& row : m) {
        long long xi = row[i], yi = row[j];
        row[i] = mod_normalize(mulm(p, xi, E) + mulm(q, yi, E), E);
        row[j] = mod_normalize(mulm(r, xi, E) + mulm(t, yi, E), E);
      }
    };
    apply(a);
    apply(s.C);
  }
  void swap_rows(int i, int j) {
    if (i == j) return;
    std::swap(a[i], a[j]);
    if (s.U.empty()) return;
    std::swap(s.U[i], s.U[j]);
    for (auto& row : s.Uinv) std::swap(row[i], row[j]);
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (auto& row : a) std::swap(row[i], row[j]);
    for (auto& row : s.C) std::swap(row[i], row[j]);
  }
  void scale_row(int i, long long u) {
    long long ui = inverse_mod(u, E);
    for (auto& x : a[i]) x = mulm(x, u, E);
    if (s.U.empty()) return;
    for (auto& x : s.U[i]) x = mulm(x, u, E);
    for (auto& row : s.Uinv) row[i] = mulm(row[i], ui, E);
  }

  // Eliminate entry b at (i, t) against pivot g at (t, t) using rows.
  void kill_row_entry(int t, int i) {
    long long g = a[t][t], b = a[i][t];
    if (b % g == 0) {
      row_addmul(t, i, mod_normalize(-(b / g), E));
      return;
    }
    long long x, y;
    long long h = ext_gcd(g, b, x, y);
    row_mix(t, i, x, y, -(b / h), g / h);
  }
  void kill_col_entry(int t, int j) {
    long long g = a[t][t], b = a[t][j];
    if (b % g == 0) {
      col_addmul(t, j, mod_normalize(-(b / g), E));
      return;
    }
    long long x, y;
    long long h = ext_gcd(g, b, x, y);
    col_mix(t, j, x, y, -(b / h), g / h);
  }
};

long long unit_lift(long long a, long long E) {
  // unit u with u * a = gcd(a, E) (mod E)
  long long g = std::gcd(a, E);
  long long f = E / g;
  long long a1 = (a / g) % f;
  long long w = f == 1 ? 1 : inverse_mod(a1, f);
  while (std::gcd(w, E) != 1) w += f;
  return w % E == 0 ? 1 : w % E;
}

}  // namespace

SmithForm smith_mod(IntMatrix a, long long E, bool row_transforms) {
  require(E >= 1, "modulus must be positive");
  SmithForm s;
  s.modulus = E;
  s.rows = static_cast<int>(a.size());
  s.cols = s.rows ? static_cast<int>(a[0].size()) : 0;
  for (auto& row : a) {
    require(static_cast<int>(row.size()) == s.cols, "ragged matrix");
    for (auto& x : row) x = mod_normalize(x, E);
  }
  if (row_transforms) {
    s.U = identity(s.rows);
    s.Uinv = identity(s.rows);
  }
  s.C = identity(s.cols);
  const int n = std::min(s.rows, s.cols);
  s.diag.assign(n, 0);
  Worker w{a, s, E};
  for (int t = 0; t < n; ++t) {
    for (;;) {
      int bi = -1, bj = -1;
      long long best = E;
      for (int i = t; i < s.rows; ++i)
        for (int j = t; j < s.cols; ++j)
          if (a[i][j] != 0) {
            long long g = std::gcd(a[i][j], E);
            if (g < best) { best = g; bi = i; bj = j; }
          }
      if (bi < 0) break;
      w.swap_rows(t, bi);
      w.swap_cols(t, bj);
      long long u = unit_lift(a[t][t], E);
      if (u != 1) w.scale_row(t, u);
      bool dirty = true;
      while (dirty) {
        dirty = false;
        for (int i = t + 1; i < s.rows; ++i)
          if (a[i][t] != 0) w.kill_row_entry(t, i);
        for (int j = t + 1; j < s.cols; ++j)
          if (a[t][j] != 0) { w.kill_col_entry(t, j); }
        for (int i = t + 1; i < s.rows; ++i)
          if (a[i][t] != 0) dirty = true;
      }
      long long g = a[t][t];
      if (g == 0) continue;
      u = unit_lift(g, E);
      if (u != 1) w.scale_row(t, u);
      g = a[t][t];
      int bad = -1;
      for (int i = t + 1; i < s.rows && bad < 0; ++i)
        for (int j = t + 1; j < s.cols; ++j)
          if (a[i][j] % g != 0) { bad = i; break; }
      if (bad < 0) break;
      w.row_mix(t, bad, 1, 1, 0, 1);
    }
    s.diag[t] = a[t][t];
    if (s.diag[t] == 0) break;
  }
  return s;
}

std::optional<std::vector<long long>> solve_mod(const SmithForm& s,
                                                const std::vector<long long>& rhs) {
  const long long E = s.modulus;
  require(static_cast<int>(rhs.size()) == s.rows, "rhs length mismatch");
  require(!s.U.empty() || s.rows == 0, "Smith form computed without row transforms");
  std::vector<long long> y(s.rows, 0);
  for (int i = 0; i < s.rows; ++i) {
    long long acc = 0;
    for (int j = 0; j < s.rows; ++j)
      if (s.U[i][j]) acc = (acc + mulm(s.U[i][j], mod_normalize(rhs[j], E), E)) % E;
    y[i] = acc;
  }
  std::vector<long long> z(s.cols, 0);
  for (int i = 0; i < s.rows; ++i) {
    long long d = i < static_cast<int>(s.diag.size()) ? s.diag[i] : 0;
    if (d == 0) {
      if (y[i] != 0) return std::nullopt;
      continue;
    }
    long long g = std::gcd(d, E);
    if (y[i] % g != 0) return std::nullopt;
    long long f = E / g;
    z[i] = f == 1 ? 0 : mulm((y[i] / g) % f, inverse_mod((d / g) % f, f), f);
  }
  std::vector<long long> x(s.cols, 0);
  for (int i = 0; i < s.cols; ++i) {
    long long acc = 0;
    for (int j = 0; j < s.cols; ++j)
      if (z[j]) acc = (acc + mulm(s.C[i][j], z[j], E)) % E;
    x[i] = acc;
  }
  return x;
}

std::vector<std::vector<long long>> kernel_mod(const SmithForm& s) {
  const long long E = s.modulus;
  std::vector<std::vector<long long>> out;
  for (int i = 0; i < s.cols; ++i) {
    long long d = i < static_cast<int>(s.diag.size()) ? s.diag[i] : 0;
    long long f = E / std::gcd(d, E);
    if (f == E) continue;
    std::vector<long long> v(s.cols);
    bool nz = false;
    for (int r = 0; r < s.cols; ++r) {
      v[r] = mulm(f, s.C[r][i], E);
      nz = nz || v[r] != 0;
    }
    if (nz) out.push_back(std::move(v));
  }
  return out;
}

namespace {

IntMatrix embedded_system(const AbelianShape& a, const AbelianShape& b, const IntMatrix& t,
                          long long E) {
  const int n = static_cast<int>(a.size());
  const int m = static_cast<int>(b.size());
  require(static_cast<int>(t.size()) == m, "map has wrong number of rows");
  for (long long x : a.moduli) require(x >= 1, "moduli must be positive");
  for (long long x : b.moduli) require(x >= 1, "moduli must be positive");
  // Embed Z/a_i into Z/E by x -> (E/a_i) x; T becomes T'[r][c] = T[r][c] a_c / b_r,
  // and membership in the embedded A is the condition a_i x_i = 0.
  IntMatrix stacked;
  for (int r = 0; r < m; ++r) {
    require(static_cast<int>(t[r].size()) == n, "map has wrong number of columns");
    std::vector<long long> row(n);
    for (int c = 0; c < n; ++c) {
      __int128 v = static_cast<__int128>(t[r][c]) * a.moduli[c];
      if (v % b.moduli[r] != 0) throw PreconditionError("map is not well defined on the quotient");
      row[c] = static_cast<long long>((v / b.moduli[r]) % E);
    }
    stacked.push_back(std::move(row));
  }
  for (int c = 0; c < n; ++c) {
    std::vector<long long> row(n, 0);
    row[c] = a.moduli[c] % E;
    stacked.push_back(std::move(row));
  }
  if (stacked.empty()) stacked.push_back(std::vector<long long>(n, 0));
  return stacked;
}

}  // namespace

AbelianMap::AbelianMap(const AbelianShape& a, const AbelianShape& b, const IntMatrix& t)
    : a_(a), b_(b) {
  e_ = lcm_checked(a.exponent(), b.exponent());
  s_ = smith_mod(embedded_system(a, b, t, e_), e_);
  for (int i = 0; i < s_.rows; ++i) {
    long long d = i < static_cast<int>(s_.diag.size()) ? s_.diag[i] : 0;
    long long g = std::gcd(d, e_);
    if (g > 1) {
      orows_.push_back(i);
      omod_.push_back(g);
    }
  }
}

std::vector<long long> AbelianMap::embed_target(const std::vector<long long>& y) const {
  require(y.size() == b_.size(), "target element length mismatch");
  std::vector<long long> v(s_.rows, 0);
  for (std::size_t i = 0; i < y.size(); ++i)
    v[i] = mulm(mod_normalize(y[i], b_.moduli[i]), e_ / b_.moduli[i], e_);
  return v;
}

std::optional<std::vector<long long>> AbelianMap::preimage(const std::vector<long long>& y) const {
  auto x = solve_mod(s_, embed_target(y));
  if (!x) return std::nullopt;
  std::vector<long long> out(a_.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    long long f = e_ / a_.moduli[i];
    ensure((*x)[i] % f == 0, "solution outside the embedded source");
    out[i] = (*x)[i] / f;
  }
  return out;
}

std::vector<long long> AbelianMap::obstruction(const std::vector<long long>& y) const {
  auto v = embed_target(y);
  std::vector<long long> out(orows_.size());
  for (std::size_t k = 0; k < orows_.size(); ++k) {
    const auto& row = s_.U[orows_[k]];
    long long acc = 0;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j]) acc = (acc + mulm(row[j], v[j], e_)) % e_;
    out[k] = acc % omod_[k];
  }
  return out;
}

Subquotient::Subquotient(const AbelianShape& a, const AbelianShape& b, const IntMatrix& t,
                         const std::vector<std::vector<long long>>& image_gens)
    : a_(a), b_(b), t_(t) {
  const int n = static_cast<int>(a.size());
  e_ = lcm_checked(a.exponent(), b.exponent());
  const long long E = e_;
  IntMatrix stacked = embedded_system(a, b, t, E);
  kgen_ = kernel_mod(smith_mod(stacked, E, false));
  const int g = static_cast<int>(kgen_.size());
  IntMatrix gm(n, std::vector<long long>(std::max(g, 1), 0));
  for (int j = 0; j < g; ++j)
    for (int i = 0; i < n; ++i) gm[i][j] = kgen_[j][i];
  ksmith_ = smith_mod(gm, E);
  if (g == 0) return;
  // Relations on (Z/E)^g: kernel of the generator matrix and preimages of I.
  std::vector<std::vector<long long>> rel = kernel_mod(ksmith_);
  for (const auto& v : image_gens) {
    auto z = solve_mod(ksmith_, embed(v));
    ensure(z.has_value(), "image generator is not in the kernel");
    rel.push_back(*z);
  }
  IntMatrix rm(g, std::vector<long long>(std::max<std::size_t>(rel.size(), 1), 0));
  for (std::size_t j = 0; j < rel.size(); ++j)
    for (int i = 0; i < g; ++i) rm[i][j] = rel[j][i];
  rsmith_ = smith_mod(rm, E);
  for (int i = 0; i < g; ++i) {
    long long d = i < static_cast<int>(rsmith_.diag.size()) ? rsmith_.diag[i] : 0;
    long long f = std::gcd(d, E);
    if (f == 1) continue;
    slots_.push_back(i);
    inv_.push_back(f);
    // generator: Uinv e_i, pushed through the generator matrix
    std::vector<long long> z(g);
    for (int r = 0; r < g; ++r) z[r] = rsmith_.Uinv[r][i];
    std::vector<long long> y(n, 0);
    for (int r = 0; r < n; ++r) {
      long long acc = 0;
      for (int c = 0; c < g; ++c) acc = (acc + mulm(gm[r][c], z[c], E)) % E;
      y[r] = acc;
    }
    gens_.push_back(unembed(y));
  }
}

long long Subquotient::order() const {
  long long o = 1;
  for (long long d : inv_) o *= d;
  return o;
}

std::vector<long long> Subquotient::embed(const std::vector<long long>& x) const {
  require(x.size() == a_.size(), "element length mismatch");
  std::vector<long long> y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    y[i] = mulm(mod_normalize(x[i], a_.moduli[i]), e_ / a_.moduli[i], e_);
  return y;
}

std::vector<long long> Subquotient::unembed(const std::vector<long long>& y) const {
  std::vector<long long> x(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    long long f = e_ / a_.moduli[i];
    ensure(y[i] % f == 0, "vector outside the embedded group");
    x[i] = y[i] / f;
  }
  return x;
}

bool Subquotient::in_kernel(const std::vector<long long>& x) const {
  require(x.size() == a_.size(), "element length mismatch");
  for (std::size_t r = 0; r < b_.size(); ++r) {
    __int128 acc = 0;
    for (std::size_t c = 0; c < x.size(); ++c) acc += static_cast<__int128>(t_[r][c]) * x[c];
    acc %= b_.moduli[r];
    if (acc != 0) return false;
  }
  return true;
}

std::vector<long long> Subquotient::coordinates(const std::vector<long long>& x) const {
  if (!in_kernel(x)) throw PreconditionError("element is not in the kernel");
  if (inv_.empty()) return {};
  auto z = solve_mod(ksmith_, embed(x));
  ensure(z.has_value(), "kernel element not expressible in kernel generators");
  std::vector<long long> out;
  const long long E = e_;
  for (std::size_t k = 0; k < slots_.size(); ++k) {
    int i = slots_[k];
    long long acc = 0;
    for (std::size_t j = 0; j < z->size(); ++j) acc = (acc + mulm(rsmith_.U[i][j], (*z)[j], E)) % E;
    out.push_back(acc % inv_[k]);
  }
  return out;
}

}  // namespace belyi
