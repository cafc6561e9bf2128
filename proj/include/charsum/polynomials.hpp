#pragma once

// Exact integer polynomials and matrices: the tuple polynomials f_{v1}, f_{v2},
// their Wronskian combination, the cleared-denominator polynomials P_v, and
// Sylvester-matrix resultants. No floating point except the height-bound
// report in resultant_height_rhs.

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "charsum/arithmetic.hpp"

namespace charsum {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Integer polynomial, coefficients in ascending degree. The zero polynomial
/// has no coefficients and degree -1; otherwise the leading coefficient is
/// nonzero.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> ascending);
  IntPolynomial(std::initializer_list<long> ascending);

  static IntPolynomial constant(const BigInt& c);
  static IntPolynomial x();
  /// prod (X - r) over the given roots.
  static IntPolynomial from_roots(std::span<const i64> roots);
  /// Parses space-separated ascending coefficients, e.g. "-2 0 1" for X^2 - 2.
  static IntPolynomial parse(std::string_view text);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// Coefficient of X^i; zero beyond the degree.
  BigInt coeff(int i) const;
  const BigInt& leading() const;
  std::span<const BigInt> coefficients() const { return coeffs_; }

  IntPolynomial derivative() const;
  BigInt evaluate(const BigInt& x) const;
  /// den^deg * P(num/den), an integer that vanishes iff P(num/den) = 0.
  BigInt evaluate_homogeneous(const BigInt& num, const BigInt& den) const;
  /// P(x) mod q, canonical in [0, q).
  u64 evaluate_mod(i64 x, u64 q) const;
  /// Coefficients reduced into [0, q), ascending; length degree+1.
  std::vector<u64> reduce_mod(u64 q) const;

  BigInt content() const;
  IntPolynomial primitive_part() const;

  IntPolynomial operator-() const;
  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const BigInt& c, const IntPolynomial& p);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const;

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

/// lc(b)^(deg a - deg b + 1) * a mod b. b must be nonzero.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);
/// Greatest common divisor over Q, returned primitive with positive leading
/// coefficient. gcd(0, 0) is the zero polynomial.
IntPolynomial polynomial_gcd(const IntPolynomial& a, const IntPolynomial& b);
/// Whether d divides p in Q[X]; d nonzero.
bool divides(const IntPolynomial& d, const IntPolynomial& p);

bool has_rational_root(const IntPolynomial& p);
/// Kronecker search for integer factors of degree 1..3. Complete for degree <= 7.
bool passes_irreducibility_screen(const IntPolynomial& p);

/// Square integer matrix, row-major.
class IntMatrix {
 public:
  explicit IntMatrix(std::size_t n);
  IntMatrix(std::size_t n, std::vector<BigInt> row_major);
  static IntMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  BigInt& at(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const BigInt& at(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  /// Matrix with row i and column j deleted. Requires size() >= 2.
  IntMatrix minor(std::size_t i, std::size_t j) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const BigInt& c, const IntMatrix& a);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.n_ == b.n_ && a.data_ == b.data_;
  }

 private:
  std::size_t n_;
  std::vector<BigInt> data_;
};

/// Fraction-free (Bareiss) elimination with row pivoting.
BigInt determinant(const IntMatrix& a);
/// (i, j) entry (-1)^{i+j} det(A with row j and column i removed); adj of a
/// 1x1 matrix is [1].
IntMatrix adjugate(const IntMatrix& a);

/// (m+n)-square Sylvester matrix: m shifted rows of f's coefficients (leading
/// first) above n shifted rows of g's, with n = deg f and m = deg g.
/// Throws std::domain_error for a zero input or deg f + deg g == 0.
IntMatrix sylvester(const IntPolynomial& f, const IntPolynomial& g);
/// det(sylvester(f, g)). With this layout Res(f, X - c) = (-1)^{deg f} f(c).
BigInt resultant(const IntPolynomial& f, const IntPolynomial& g);

/// Whether q | Res(f, g), given gcd(lambda, q) = 1 and f(lambda) = g(lambda) = 0
/// mod q. Violated preconditions throw std::domain_error.
bool resultant_lift_check(const IntPolynomial& f, const IntPolynomial& g, i64 lambda, u64 q);

/// H^{(M-1+sigma)(N-1+theta) - theta*sigma}.
double resultant_height_rhs(double H, double sigma, double theta, int M, int N);
/// Product of squared Euclidean row norms of the Sylvester matrix; Hadamard's
/// inequality gives Res(f, g)^2 <= this value.
BigInt hadamard_bound_squared(const IntPolynomial& f, const IntPolynomial& g);

/// f_{v1} = prod_{j<=r} (X - v_j), f_{v2} = prod_{j<=r} (X - v_{r+j}).
/// Throws std::domain_error for odd-length v.
std::pair<IntPolynomial, IntPolynomial> build_f_pair(std::span<const i64> v);
/// f'_{v1} f_{v2} - f_{v1} f'_{v2}.
IntPolynomial wronskian_combo(std::span<const i64> v);
/// sum_{i<=k} prod_{j!=i} (X + v_j) - sum_{i>k} prod_{j!=i} (X + v_j).
IntPolynomial build_Pv_kloosterman(std::span<const i64> v);
/// prod_{i<=r} (X + v_i) - prod_{i<=r} (X + v_{r+i}).
IntPolynomial build_Pv_mult(std::span<const i64> v);

/// Explicit bounds on the coefficients of build_Pv_kloosterman for |v_i| <= V:
/// entry i bounds the coefficient of X^{2k-2-i} by 2k * C(2k-1, i+1) * V^{i+1}.
std::vector<BigInt> pv_coefficient_bounds(int k, i64 V);

}  // namespace charsum
