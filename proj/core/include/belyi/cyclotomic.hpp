#pragma once

#include <string>
#include <vector>

#include "belyi/rational.hpp"

namespace belyi {

int euler_phi(int n);
// Coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<long long>& cyclotomic_polynomial(int n);

// Element of Q(zeta_N) in the power basis 1, z, ..., z^(phi(N)-1), reduced
// modulo the N-th cyclotomic polynomial.
class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(1) {}
  explicit Cyclotomic(int conductor);
  Cyclotomic(int conductor, const Rational& r);
  // sum_k coeffs[k] z^k with k taken modulo N.
  static Cyclotomic from_exponents(int conductor, const std::vector<Rational>& coeffs);
  static Cyclotomic from_coords(int conductor, std::vector<Rational> coords);
  static Cyclotomic zeta(int conductor, long long k = 1);

  int conductor() const { return n_; }
  const std::vector<Rational>& coords() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  bool is_integral() const;
  Rational rational_value() const;  // throws unless is_rational()

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Rational& r);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& r) { return a *= r; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  // z -> z^a for a coprime to N.
  Cyclotomic galois(long long a) const;
  Cyclotomic conj() const { return galois(-1); }
  Cyclotomic inverse() const;
  // Same number in Q(zeta_M), M a multiple of N.
  Cyclotomic lift(int m) const;

  std::string str() const;

 private:
  void check_same(const Cyclotomic& o) const;
  int n_;
  std::vector<Rational> c_;
};

}  // namespace belyi
