#pragma once

// Dirichlet characters modulo composite q, built from characters on each
// prime-power component and evaluated exactly as rational angles.
//
// Generators are fixed so labels are reproducible: for odd p the smallest
// primitive root of p^2 (which generates (Z/p^k)^* for every k); for 2^k with
// k >= 3 the pair (-1, 5). A component index is
//   odd p:        a in [0, phi(p^k)),       chi(g^m) = e(a m / phi(p^k))
//   p^k = 4:      eps in {0, 1},            chi(-1) = (-1)^eps
//   p^k = 2^k>=8: eps * 2^{k-2} + a,        chi((-1)^e 5^m) = e(eps e / 2 + a m / 2^{k-2})
//   p^k = 2:      0.

#include <complex>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "charsum/arithmetic.hpp"

namespace charsum {

/// e^{2 pi i t / d} in lowest terms, or zero.
class UnitRootValue {
 public:
  static UnitRootValue zero() { return UnitRootValue(); }
  static UnitRootValue root(u64 numerator, u64 order);
  static UnitRootValue one() { return root(0, 1); }

  bool is_zero() const { return order_ == 0; }
  u64 numerator() const { return numerator_; }
  u64 order() const { return order_; }

  UnitRootValue conj() const;
  std::complex<double> to_complex() const;

  friend UnitRootValue operator*(UnitRootValue a, UnitRootValue b);
  friend bool operator==(const UnitRootValue&, const UnitRootValue&) = default;

 private:
  UnitRootValue() = default;
  u64 numerator_ = 0;
  u64 order_ = 0;  // 0 encodes the zero value
};

/// Discrete-log data for one prime power p^k.
struct ComponentGroup {
  u64 p = 0;
  int k = 0;
  u64 modulus = 1;
  u64 phi = 1;
  u64 generator = 1;     // odd p only
  u64 angle_order = 1;   // denominator of component angles
  std::vector<std::int64_t> log;  // residue -> log code, -1 off units

  /// Angle numerator (over angle_order) of component `index` at a unit residue.
  u64 angle(u64 index, u64 residue) const;
  bool is_primitive(u64 index) const;
  u64 conductor(u64 index) const;
  u64 character_count() const { return phi; }
};

/// The character group modulo q. Tables total O(q) memory and are built once.
class DirichletGroup {
 public:
  /// Throws std::domain_error for q == 0.
  static std::shared_ptr<const DirichletGroup> create(u64 q);

  u64 modulus() const { return q_; }
  u64 order() const { return phi_; }
  /// Common denominator of all character angles.
  u64 angle_order() const { return angle_order_; }
  const std::vector<ComponentGroup>& components() const { return comps_; }

 private:
  explicit DirichletGroup(u64 q);
  u64 q_;
  u64 phi_ = 1;
  u64 angle_order_ = 1;
  std::vector<ComponentGroup> comps_;
};

/// Immutable character mod q given by one index per prime-power component.
class DirichletCharacter {
 public:
  DirichletCharacter(std::shared_ptr<const DirichletGroup> group, std::vector<u64> indices);

  /// Parses "q:i1,i2,..." (one index per prime power, ascending primes).
  static DirichletCharacter from_label(std::string_view label);
  /// Trivial (principal) character mod q.
  static DirichletCharacter trivial(u64 q);

  u64 modulus() const { return group_->modulus(); }
  const DirichletGroup& group() const { return *group_; }
  const std::shared_ptr<const DirichletGroup>& group_ptr() const { return group_; }
  const std::vector<u64>& indices() const { return indices_; }

  /// Angle numerator over group().angle_order(), or -1 when gcd(n, q) > 1.
  std::int64_t angle(i64 n) const;
  UnitRootValue operator()(i64 n) const;
  /// Product of the component characters evaluated at n.
  std::vector<UnitRootValue> component_values(i64 n) const;

  bool is_primitive() const;
  bool is_trivial() const;
  u64 conductor() const;
  /// Order of the character in the character group.
  u64 order() const;
  DirichletCharacter conj() const;

  std::string label() const;
  friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b) {
    return a.modulus() == b.modulus() && a.indices_ == b.indices_;
  }

 private:
  std::shared_ptr<const DirichletGroup> group_;
  std::vector<u64> indices_;
};

/// Characters mod q in lexicographic order of their index vectors; with
/// primitive_only, exactly those of conductor q. Throws for q > 10^5.
std::vector<DirichletCharacter> enumerate_characters(u64 q, bool primitive_only);

UnitRootValue eval(const DirichletCharacter& chi, i64 n);
u64 conductor(const DirichletCharacter& chi);

/// Dense evaluation table for the summation kernels: angle per residue and the
/// matching complex values.
class CharacterTable {
 public:
  explicit CharacterTable(const DirichletCharacter& chi);

  u64 modulus() const { return static_cast<u64>(angles_.size()); }
  u64 angle_order() const { return angle_order_; }
  std::int64_t angle_at(u64 residue) const { return angles_[residue]; }
  std::complex<double> value_at(u64 residue) const { return values_[residue]; }
  std::complex<double> root(u64 t) const { return roots_[t % angle_order_]; }
  const std::vector<std::complex<double>>& values() const { return values_; }

 private:
  u64 angle_order_;
  std::vector<std::int64_t> angles_;
  std::vector<std::complex<double>> values_;
  std::vector<std::complex<double>> roots_;
};

/// Exact sum of d-th roots of unity, kept as a multiplicity vector over Z/d.
/// Zero-testing reduces modulo the d-th cyclotomic polynomial.
class ExactUnitRootSum {
 public:
  explicit ExactUnitRootSum(u64 order);

  void add(UnitRootValue v);
  /// Adds e^{2 pi i t / order}.
  void add_angle(u64 t, std::int64_t multiplicity = 1);

  bool is_zero() const;
  std::complex<double> to_complex() const;
  u64 order() const { return order_; }

 private:
  u64 order_;
  std::vector<std::int64_t> counts_;
};

/// Coefficients (ascending) of the n-th cyclotomic polynomial.
std::vector<std::int64_t> cyclotomic_polynomial(u64 n);

}  // namespace charsum
