#pragma once

#include <optional>
#include <vector>

namespace belyi {

using IntMatrix = std::vector<std::vector<long long>>;

// Smith normal form over Z/E: U * A * C = diag(d_0 | d_1 | ...), every d_i a
// divisor of E (0 for zero pivots).  U, C invertible over Z/E.
struct SmithForm {
  long long modulus = 1;
  int rows = 0, cols = 0;
  std::vector<long long> diag;  // length min(rows, cols)
  IntMatrix U, Uinv, C;
};

// Without row transforms U and Uinv stay empty; enough for kernel_mod.
SmithForm smith_mod(IntMatrix a, long long modulus, bool row_transforms = true);

// Solutions and kernels over Z/E.
std::optional<std::vector<long long>> solve_mod(const SmithForm& s, const std::vector<long long>& rhs);
std::vector<std::vector<long long>> kernel_mod(const SmithForm& s);

// Finite abelian group given as a direct sum of Z/a_i.
struct AbelianShape {
  std::vector<long long> moduli;
  std::size_t size() const { return moduli.size(); }
  long long exponent() const;
};

// Subquotient K/I of an ambient group A = (+) Z/a_i, where K = ker(T: A -> B)
// and I <= K is generated by the given elements.  T must be well defined:
// b_r divides T[r][c] * a_c.
class Subquotient {
 public:
  Subquotient(const AbelianShape& a, const AbelianShape& b, const IntMatrix& t,
              const std::vector<std::vector<long long>>& image_gens);

  const std::vector<long long>& invariants() const { return inv_; }
  long long order() const;
  // Representatives in A of the standard generators of K/I.
  const std::vector<std::vector<long long>>& generators() const { return gens_; }
  bool in_kernel(const std::vector<long long>& x) const;
  // Coordinates of x in (+) Z/invariants; x must lie in K.
  std::vector<long long> coordinates(const std::vector<long long>& x) const;

 private:
  std::vector<long long> embed(const std::vector<long long>& x) const;
  std::vector<long long> unembed(const std::vector<long long>& y) const;

  AbelianShape a_, b_;
  IntMatrix t_;
  long long e_ = 1;
  IntMatrix kgen_;        // columns of K inside (Z/E)^n, stored as rows
  SmithForm ksmith_;      // of the n x g generator matrix
  SmithForm rsmith_;      // of the relation matrix on (Z/E)^g
  std::vector<int> slots_;  // indices of nontrivial factors in rsmith_
  std::vector<long long> inv_;
  std::vector<std::vector<long long>> gens_;
};

// Homomorphism T: A -> B between finite abelian groups, prepared for solving.
class AbelianMap {
 public:
  AbelianMap(const AbelianShape& a, const AbelianShape& b, const IntMatrix& t);

  const AbelianShape& source() const { return a_; }
  const AbelianShape& target() const { return b_; }
  std::optional<std::vector<long long>> preimage(const std::vector<long long>& y) const;
  // Linear obstruction: y is in the image iff every entry is zero modulo the
  // matching entry of obstruction_moduli().
  std::vector<long long> obstruction(const std::vector<long long>& y) const;
  const std::vector<long long>& obstruction_moduli() const { return omod_; }

 private:
  std::vector<long long> embed_target(const std::vector<long long>& y) const;

  AbelianShape a_, b_;
  long long e_ = 1;
  SmithForm s_;
  std::vector<int> orows_;
  std::vector<long long> omod_;
};

long long mod_normalize(long long a, long long m);
long long lcm_checked(long long a, long long b);

}  // namespace belyi
