#include "belyi/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "belyi/error.hpp"

namespace belyi {

int euler_phi(int n) {
  require(n >= 1, "phi of non-positive integer");
  int r = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    r -= r / p;
  }
  if (n > 1) r -= r / n;
  return r;
}

const std::vector<long long>& cyclotomic_polynomial(int n) {
  static std::recursive_mutex mu;
  static std::map<int, std::vector<long long>> cache;
  require(n >= 1, "cyclotomic polynomial index < 1");
  std::lock_guard<std::recursive_mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<long long> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d) continue;
    const std::vector<long long>& phi_d = cyclotomic_polynomial(d);
    int dn = static_cast<int>(num.size()) - 1, dd = static_cast<int>(phi_d.size()) - 1;
    std::vector<long long> q(dn - dd + 1, 0);
    for (int i = dn; i >= dd; --i) {
      long long c = num[i];
      q[i - dd] = c;
      for (int j = 0; j <= dd; ++j) num[i - dd + j] -= c * phi_d[j];
    }
    num = q;
  }
  return cache.emplace(n, num).first->second;
}

namespace {

// Reduces poly (ascending) modulo Phi_n and truncates to phi(n) coefficients.
std::vector<Rational> reduce(int n, std::vector<Rational> poly) {
  const auto& phi = cyclotomic_polynomial(n);
  const int deg = static_cast<int>(phi.size()) - 1;
  for (int i = static_cast<int>(poly.size()) - 1; i >= deg; --i) {
    if (poly[i].is_zero()) continue;
    Rational c = poly[i];
    for (int j = 0; j <= deg; ++j)
      if (phi[j] != 0) poly[i - deg + j] -= c * Rational(phi[j]);
  }
  poly.resize(deg);
  return poly;
}

}  // namespace

Cyclotomic::Cyclotomic(int conductor) : n_(conductor), c_(euler_phi(conductor)) {}

Cyclotomic::Cyclotomic(int conductor, const Rational& r) : Cyclotomic(conductor) { c_[0] = r; }

Cyclotomic Cyclotomic::from_exponents(int conductor, const std::vector<Rational>& coeffs) {
  std::vector<Rational> poly(conductor);
  for (std::size_t k = 0; k < coeffs.size(); ++k) poly[k % conductor] += coeffs[k];
  Cyclotomic z(conductor);
  z.c_ = reduce(conductor, std::move(poly));
  return z;
}

Cyclotomic Cyclotomic::from_coords(int conductor, std::vector<Rational> coords) {
  Cyclotomic z(conductor);
  require(coords.size() == z.c_.size(), "coordinate vector has wrong length");
  z.c_ = std::move(coords);
  return z;
}

Cyclotomic Cyclotomic::zeta(int conductor, long long k) {
  k %= conductor;
  if (k < 0) k += conductor;
  std::vector<Rational> e(conductor);
  e[k] = 1;
  return from_exponents(conductor, e);
}

bool Cyclotomic::is_zero() const {
  for (const auto& r : c_)
    if (!r.is_zero()) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return false;
  return true;
}

bool Cyclotomic::is_integral() const {
  for (const auto& r : c_)
    if (!r.is_integer()) return false;
  return true;
}

Rational Cyclotomic::rational_value() const {
  require(is_rational(), "cyclotomic number is not rational");
  return c_[0];
}

void Cyclotomic::check_same(const Cyclotomic& o) const {
  require(n_ == o.n_, "cyclotomic conductors differ");
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic z = *this;
  for (auto& r : z.c_) r = -r;
  return z;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  check_same(o);
  std::vector<Rational> poly(c_.size() * 2);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      if (!o.c_[j].is_zero()) poly[i + j] += c_[i] * o.c_[j];
  }
  c_ = reduce(n_, std::move(poly));
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& r) {
  for (auto& x : c_) x *= r;
  return *this;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) { return a.n_ == b.n_ && a.c_ == b.c_; }

Cyclotomic Cyclotomic::galois(long long a) const {
  a %= n_;
  if (a < 0) a += n_;
  require(std::gcd(a, static_cast<long long>(n_)) == 1, "Galois exponent not coprime to conductor");
  std::vector<Rational> poly(n_);
  for (std::size_t i = 0; i < c_.size(); ++i) poly[(a * static_cast<long long>(i)) % n_] += c_[i];
  Cyclotomic z(n_);
  z.c_ = reduce(n_, std::move(poly));
  return z;
}

Cyclotomic Cyclotomic::lift(int m) const {
  require(m % n_ == 0, "lift target is not a multiple of the conductor");
  std::vector<Rational> poly(m);
  int s = m / n_;
  for (std::size_t i = 0; i < c_.size(); ++i) poly[i * s] += c_[i];
  return from_exponents(m, poly);
}

Cyclotomic Cyclotomic::inverse() const {
  require(!is_zero(), "inverse of zero");
  const int d = static_cast<int>(c_.size());
  // Column j of the matrix is this * z^j; solve for the preimage of 1.
  std::vector<std::vector<Rational>> a(d, std::vector<Rational>(d + 1));
  for (int j = 0; j < d; ++j) {
    Cyclotomic col = *this * zeta(n_, j);
    for (int i = 0; i < d; ++i) a[i][j] = col.c_[i];
  }
  a[0][d] = 1;
  for (int col = 0; col < d; ++col) {
    int piv = col;
    while (piv < d && a[piv][col].is_zero()) ++piv;
    ensure(piv < d, "multiplication map is singular");
    std::swap(a[piv], a[col]);
    Rational inv = Rational(1) / a[col][col];
    for (int j = col; j <= d; ++j) a[col][j] *= inv;
    for (int i = 0; i < d; ++i) {
      if (i == col || a[i][col].is_zero()) continue;
      Rational f = a[i][col];
      for (int j = col; j <= d; ++j) a[i][j] -= f * a[col][j];
    }
  }
  Cyclotomic z(n_);
  for (int i = 0; i < d; ++i) z.c_[i] = a[i][d];
  return z;
}

std::string Cyclotomic::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const Rational& r = c_[i];
    if (r.is_zero()) continue;
    Rational a = r < Rational(0) ? -r : r;
    if (first) {
      if (r < Rational(0)) os << '-';
    } else {
      os << (r < Rational(0) ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << a.str();
      continue;
    }
    if (a != Rational(1)) os << a.str() << '*';
    os << "z" << n_;
    if (i > 1) os << '^' << i;
  }
  return first ? "0" : os.str();
}

}  // namespace belyi
