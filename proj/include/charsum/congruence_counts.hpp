#pragma once

// Exact solution counts for the congruences behind the moment estimates:
//   K_{r,q}(lambda; box)  sum_{i<=r} 1/(lambda+v_i) = sum_{i<=r} 1/(lambda+v_{r+i})  mod q
//   N_v(q)                Wronskian of (f_{v1}, f_{v2}) vanishing at a unit-valued lambda
//   multiplicative form   prod (lambda+v_i) = prod (lambda+v_{r+i})  mod q
//   J(sigma)              the fraction identity over C at a fixed sigma
//
// The modular counters split each tuple into halves, histogram the half sums
// by residue and pair matching classes (meet-in-the-middle).

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "charsum/arithmetic.hpp"
#include "charsum/polynomials.hpp"

namespace charsum {

/// Arithmetic progression lo, lo+step, ..., <= hi. Empty when lo > hi.
struct Interval {
  i64 lo = 0;
  i64 hi = -1;
  i64 step = 1;

  u64 size() const { return lo > hi ? 0 : static_cast<u64>((hi - lo) / step) + 1; }
  i64 at(u64 k) const { return lo + static_cast<i64>(k) * step; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Product of per-coordinate intervals; coordinates 0..r-1 are the first half.
class TupleBox {
 public:
  TupleBox() = default;
  explicit TupleBox(std::vector<Interval> coords);

  /// [-V, V]^{2r}.
  static TupleBox symmetric(int r, i64 V);
  /// [lo, hi]^{2r}.
  static TupleBox cube(int r, i64 lo, i64 hi);

  std::size_t dimension() const { return coords_.size(); }
  int half() const { return static_cast<int>(coords_.size() / 2); }
  const std::vector<Interval>& coords() const { return coords_; }
  const Interval& operator[](std::size_t i) const { return coords_[i]; }
  u64 volume() const;
  bool empty() const { return volume() == 0; }
  bool unit_stride() const;

  /// Halves exchanged: coordinates r..2r-1 first.
  TupleBox swapped_halves() const;
  /// Every coordinate reflected through 0.
  TupleBox negated() const;

  /// "[lo..hi]" per coordinate joined by 'x', with ":step" when step != 1.
  std::string descriptor() const;
  friend bool operator==(const TupleBox&, const TupleBox&) = default;

 private:
  std::vector<Interval> coords_;
};

/// count + excluded + non-solutions = box volume.
struct CountResult {
  u64 count = 0;
  u64 excluded = 0;  // tuples with some lambda + v_i not a unit
  friend bool operator==(const CountResult&, const CountResult&) = default;
};

/// One row of the counter CSV.
struct CountRecord {
  std::string kind;
  int r = 0;
  u64 q = 0;
  i64 lambda = 0;
  std::string box;
  CountResult result;

  static std::string csv_header();  // "kind,r,q,lambda,box_descriptor,count,excluded"
  std::string csv_row() const;
};

/// K_{r,q}(lambda) over a 2r-dimensional box. Throws std::domain_error for
/// q == 0, a box of odd dimension, or more than 10^8 half-tuples.
CountResult count_K(int r, u64 q, i64 lambda, const TupleBox& box);
CountResult count_K(int r, u64 q, i64 lambda, i64 V);

/// Direct split of count_K over [-V, V]^{2r} into tuples with 2r pairwise
/// distinct entries (K') and the rest (K'').
struct KSplit {
  u64 distinct = 0;
  u64 repeated = 0;
  u64 excluded = 0;
};
KSplit count_K_split(int r, u64 q, i64 lambda, i64 V);
CountResult count_K_distinct(int r, u64 q, i64 lambda, i64 V);
CountResult count_K_repeated(int r, u64 q, i64 lambda, i64 V);

/// #{0 <= lambda < q : W(lambda) = 0, gcd(f_{v1}(lambda) f_{v2}(lambda), q) = 1 mod q}.
u64 count_Nv(u64 q, std::span<const i64> v);

/// prod_{i != j} (v_j - v_i), j 1-based. Throws std::domain_error for j out of range.
BigInt compute_Aj(std::span<const i64> v, int j);

/// prod (v_i + lambda) = prod (v_{r+i} + lambda) mod q over the box; nothing
/// is excluded.
CountResult count_mult_cong(int r, u64 q, i64 lambda, const TupleBox& box);
/// Same over [1, V]^{2r}.
CountResult count_mult_cong(int r, u64 q, i64 lambda, i64 V);

/// Per-box counts for boxes that tile their common bounding box. Boxes must
/// have unit stride, be pairwise disjoint and have volumes summing to the
/// bounding volume; otherwise std::domain_error. Empty boxes are allowed.
std::vector<CountResult> count_K_boxed(int r, u64 q, i64 lambda, std::span<const TupleBox> boxes);

/// Splits each coordinate of a unit-stride box into `parts` consecutive
/// near-equal pieces; parts^{dim} boxes in lexicographic order.
std::vector<TupleBox> partition_box(const TupleBox& box, int parts);

/// The point at which J counts: a rational num/den, or a root of an
/// irreducible integer polynomial.
struct Sigma {
  BigInt num = 0;
  BigInt den = 1;
  std::optional<IntPolynomial> minimal_polynomial;

  static Sigma rational(const BigInt& num, const BigInt& den = 1);
  static Sigma algebraic(IntPolynomial minpoly);
  std::string to_string() const;
};

/// #{|v_i| <= V, v_i != -sigma : sum_{i<=r} 1/(sigma+v_i) = sum_{i<=r} 1/(sigma+v_{r+i})},
/// decided by P_v(sigma) = 0. A minimal polynomial failing the irreducibility
/// screen throws std::domain_error.
u64 count_J(int r, i64 V, const Sigma& sigma);

}  // namespace charsum
