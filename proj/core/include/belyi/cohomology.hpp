#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "belyi/cayley.hpp"
#include "belyi/smith.hpp"

namespace belyi {

using ModElem = std::vector<long long>;

// M = (+) Z/m_i with a left H-action given for every element of H.
class FiniteHModule {
 public:
  // Largest module whose elements may be enumerated.
  static constexpr long long kMaxSize = 1 << 20;

  FiniteHModule(const CayleyGroup& h, std::vector<long long> shape, std::vector<IntMatrix> action);
  static FiniteHModule trivial(const CayleyGroup& h, std::vector<long long> shape);
  // Action prescribed on h.generator_indices() and extended multiplicatively.
  static FiniteHModule from_generator_action(const CayleyGroup& h, std::vector<long long> shape,
                                             const std::vector<IntMatrix>& gen_action);

  const CayleyGroup& group() const;
  const std::vector<long long>& shape() const;
  int rank() const;
  long long size() const;  // saturates at 2^62
  long long exponent() const;
  const IntMatrix& action(int h) const;

  ModElem zero() const { return ModElem(rank(), 0); }
  ModElem reduce(ModElem v) const;
  ModElem add(const ModElem& a, const ModElem& b) const;
  ModElem sub(const ModElem& a, const ModElem& b) const;
  ModElem act(int h, const ModElem& v) const;
  ModElem apply(const IntMatrix& g, const ModElem& v) const;  // endomorphism
  long long encode(const ModElem& v) const;
  ModElem decode(long long code) const;

  // Endomorphism of the underlying abelian group (entries checked for well-definedness).
  bool is_endomorphism(const IntMatrix& g) const;
  bool is_automorphism(const IntMatrix& g) const;
  bool is_equivariant(const IntMatrix& g) const;
  IntMatrix identity_matrix() const;

  // Coboundary C^1 -> C^2 on normalized cochains, prepared for solving.
  const AbelianMap& coboundary1() const;

  friend bool operator==(const FiniteHModule& a, const FiniteHModule& b);

 private:
  struct Data;
  explicit FiniteHModule(std::shared_ptr<Data> d) : d_(std::move(d)) {}
  std::shared_ptr<Data> d_;
};

// Normalized 2-cocycle; validated on construction.
class Cocycle2 {
 public:
  Cocycle2(const FiniteHModule& m, std::vector<ModElem> table);
  static Cocycle2 zero(const FiniteHModule& m);

  const FiniteHModule& module() const { return m_; }
  const ModElem& operator()(int h1, int h2) const {
    return table_[static_cast<std::size_t>(h1) * m_.group().order() + h2];
  }
  const std::vector<ModElem>& table() const { return table_; }
  bool is_zero() const;

  Cocycle2 operator+(const Cocycle2& o) const;
  Cocycle2 operator-(const Cocycle2& o) const;
  Cocycle2 scaled(long long k) const;
  Cocycle2 transformed(const IntMatrix& gamma) const;  // gamma o beta; gamma equivariant
  // beta + d(c) for a normalized 1-cochain c
  Cocycle2 plus_coboundary(const std::vector<ModElem>& c) const;

  friend bool operator==(const Cocycle2& a, const Cocycle2& b) { return a.table_ == b.table_; }

 private:
  struct Unchecked {};
  Cocycle2(const FiniteHModule& m, std::vector<ModElem> table, Unchecked);
  friend class SecondCohomology;
  FiniteHModule m_;
  std::vector<ModElem> table_;
};

std::vector<ModElem> coboundary(const FiniteHModule& m, const std::vector<ModElem>& c);
// Checks of the two defining identities (used by validation and tests).
bool is_normalized(const FiniteHModule& m, const std::vector<ModElem>& table);
bool satisfies_cocycle_identity(const FiniteHModule& m, const std::vector<ModElem>& table);

class SchreierData;

// H^2(H, M), computed from a presentation of H.
class SecondCohomology {
 public:
  explicit SecondCohomology(const FiniteHModule& m);

  const FiniteHModule& module() const { return m_; }
  const std::vector<long long>& invariants() const;
  long long order() const;
  const std::vector<Cocycle2>& basis() const { return basis_; }
  std::vector<long long> class_of(const Cocycle2& beta) const;
  bool cohomologous(const Cocycle2& a, const Cocycle2& b) const;
  Cocycle2 representative(const std::vector<long long>& coords) const;

 private:
  FiniteHModule m_;
  std::shared_ptr<const SchreierData> sd_;
  std::shared_ptr<const Subquotient> sq_;
  std::vector<Cocycle2> basis_;
};

SecondCohomology h2(const FiniteHModule& m);

// Extension E of H by M with a section.
struct ExtensionGroup {
  FiniteHModule module;
  Cocycle2 cocycle;
  CayleyGroup group;  // element (h, m) has index h * |M| + encode(m)

  int element(int h, const ModElem& m) const;
  std::pair<int, ModElem> split(int e) const;
  std::vector<int> projection() const;     // E -> H
  std::vector<int> fiber() const;          // encode(m) -> E
  std::vector<int> section() const;        // h -> (h, 0)
};

ExtensionGroup build_extension(const Cocycle2& beta);

// Cocycle s(h1)s(h2)s(h1h2)^-1 of an extension given abstractly; fiber[code]
// is the image of decode(code), proj : E -> H and section : H -> E.
Cocycle2 extension_class(const CayleyGroup& e, const FiniteHModule& m, const std::vector<int>& proj,
                         const std::vector<int>& fiber, const std::vector<int>& section);

std::vector<IntMatrix> automorphisms_of_abelian(const std::vector<long long>& shape);
std::vector<IntMatrix> aut_h(const FiniteHModule& m);
std::vector<IntMatrix> stabilizer_beta(const std::vector<IntMatrix>& autos, const Cocycle2& beta,
                                       const SecondCohomology& h2data);

struct ExtendedAutomorphism {
  std::vector<ModElem> cochain;  // c(h)
  std::vector<int> images;       // permutation of E's element indices
};

std::optional<ExtendedAutomorphism> extend_automorphism(const IntMatrix& gamma,
                                                        const ExtensionGroup& e);

}  // namespace belyi
