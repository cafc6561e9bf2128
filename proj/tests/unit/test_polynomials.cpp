#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "charsum/polynomials.hpp"

using namespace charsum;

namespace {

IntPolynomial random_poly(std::mt19937_64& rng, int degree, long height) {
  std::vector<BigInt> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) x = static_cast<long>(rng() % static_cast<u64>(2 * height + 1)) - height;
  if (c.back() == 0) c.back() = 1;
  return IntPolynomial(c);
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = static_cast<long>(rng() % 21) - 10;
  return m;
}

}  // namespace

TEST(IntPolynomial, BasicsAndParse) {
  const IntPolynomial p = IntPolynomial::parse("-2 0 1");
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p.to_string(), "-2 0 1");
  EXPECT_EQ(p.evaluate(3), BigInt(7));
  EXPECT_EQ(p.evaluate_mod(-3, 5), 2u);
  EXPECT_EQ(p.evaluate_homogeneous(3, 2), BigInt(1));  // 4 * (9/4 - 2)
  EXPECT_EQ(IntPolynomial::parse("0 0").degree(), -1);
  EXPECT_THROW(IntPolynomial::parse("1 x"), std::invalid_argument);
  EXPECT_EQ(p.derivative(), (IntPolynomial{0, 2}));
  EXPECT_EQ((IntPolynomial{6, 4, 2}).content(), BigInt(2));
  EXPECT_EQ((IntPolynomial{6, 4, 2}).primitive_part(), (IntPolynomial{3, 2, 1}));
  const std::vector<i64> roots = {1, -2};
  EXPECT_EQ(IntPolynomial::from_roots(roots), (IntPolynomial{-2, 1, 1}));
}

TEST(Resultant, WorkedValues) {
  // sympy.resultant oracle.
  EXPECT_EQ(resultant(IntPolynomial{11, 0, 1}, IntPolynomial{13, 1}), BigInt(180));
  EXPECT_EQ(resultant(IntPolynomial{-2, 1}, IntPolynomial{-5, 1}), BigInt(-3));
  EXPECT_EQ(resultant(IntPolynomial{-2, 0, 1}, IntPolynomial{-4, 0, 1}), BigInt(4));
  EXPECT_THROW(resultant(IntPolynomial{}, IntPolynomial{1, 1}), std::domain_error);
  EXPECT_THROW(sylvester(IntPolynomial{3}, IntPolynomial{5}), std::domain_error);
}

// Res(f, g) = (-1)^{mn} Res(g, f); Res = 0 iff a common factor exists.
TEST(Resultant, AntisymmetryAndGcd) {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 150; ++t) {
    const int m = 1 + static_cast<int>(rng() % 4), n = 1 + static_cast<int>(rng() % 4);
    IntPolynomial f = random_poly(rng, m, 6), g = random_poly(rng, n, 6);
    if (t % 3 == 0) {
      const IntPolynomial common = random_poly(rng, 1, 4);
      f = f * common;
      g = g * common;
    }
    const BigInt fg = resultant(f, g), gf = resultant(g, f);
    EXPECT_EQ(fg, (f.degree() * g.degree()) % 2 ? BigInt(-gf) : gf);
    EXPECT_EQ(fg == 0, polynomial_gcd(f, g).degree() > 0);
    EXPECT_LE(BigInt(fg * fg), hadamard_bound_squared(f, g));
  }
}

TEST(Resultant, LinearFactorConvention) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 40; ++t) {
    const IntPolynomial f = random_poly(rng, 1 + static_cast<int>(rng() % 5), 9);
    const long c = static_cast<long>(rng() % 11) - 5;
    const BigInt expected = f.degree() % 2 ? BigInt(-f.evaluate(c)) : f.evaluate(c);
    EXPECT_EQ(resultant(f, IntPolynomial{-c, 1}), expected);
  }
}

TEST(Resultant, LiftCheck) {
  // X^2 + 11 and X + 13 share the root 4 mod 9, 5, 36 ... Res = 180.
  const IntPolynomial f{11, 0, 1}, g{13, 1};
  for (u64 q : {2u, 3u, 4u, 5u, 6u, 9u, 10u, 12u, 15u, 18u, 20u, 30u, 36u, 45u, 60u, 90u, 180u}) {
    const i64 lambda = static_cast<i64>(reduce(-13, q));
    if (gcd_signed(lambda, q) != 1 || f.evaluate_mod(lambda, q) != 0) continue;
    EXPECT_TRUE(resultant_lift_check(f, g, lambda, q)) << q;
  }
  EXPECT_THROW(resultant_lift_check(f, g, 1, 7), std::domain_error);
}

TEST(Gcd, Basics) {
  const IntPolynomial a = IntPolynomial{-1, 1} * IntPolynomial{2, 1};
  const IntPolynomial b = IntPolynomial{-1, 1} * IntPolynomial{5, 0, 1};
  EXPECT_EQ(polynomial_gcd(a, b), (IntPolynomial{-1, 1}));
  EXPECT_EQ(polynomial_gcd(IntPolynomial{}, IntPolynomial{}), IntPolynomial{});
  EXPECT_TRUE(divides(IntPolynomial{2, 1}, a));
  EXPECT_FALSE(divides(IntPolynomial{3, 1}, a));
  EXPECT_EQ(pseudo_remainder(a, IntPolynomial{-1, 1}), IntPolynomial{});
}

TEST(Irreducibility, Screen) {
  EXPECT_TRUE(passes_irreducibility_screen(IntPolynomial{1, 0, 1}));
  EXPECT_TRUE(passes_irreducibility_screen(IntPolynomial{-2, 0, 0, 1}));
  EXPECT_FALSE(passes_irreducibility_screen(IntPolynomial{-1, 0, 1}));
  EXPECT_FALSE(passes_irreducibility_screen(IntPolynomial{1, 0, 1} * IntPolynomial{2, 0, 1}));
  EXPECT_TRUE(has_rational_root(IntPolynomial{-3, 2}));
  EXPECT_FALSE(has_rational_root(IntPolynomial{1, 0, 1}));
}

TEST(Matrix, DeterminantAndAdjugate) {
  const IntMatrix m(2, {BigInt(1), BigInt(2), BigInt(3), BigInt(4)});
  EXPECT_EQ(determinant(m), BigInt(-2));
  EXPECT_EQ(adjugate(m), IntMatrix(2, {BigInt(4), BigInt(-2), BigInt(-3), BigInt(1)}));
  EXPECT_EQ(adjugate(IntMatrix(1, {BigInt(7)})), IntMatrix::identity(1));
}

// A adj(A) = adj(A) A = det(A) I, including singular matrices.
TEST(Matrix, AdjugateIdentity) {
  std::mt19937_64 rng(37);
  for (std::size_t n = 1; n <= 6; ++n)
    for (int t = 0; t < 30; ++t) {
      IntMatrix a = random_matrix(rng, n);
      if (t % 5 == 0 && n >= 2)
        for (std::size_t j = 0; j < n; ++j) a.at(1, j) = a.at(0, j) * 2;
      const IntMatrix adj = adjugate(a);
      const IntMatrix d = determinant(a) * IntMatrix::identity(n);
      EXPECT_EQ(a * adj, d);
      EXPECT_EQ(adj * a, d);
    }
}

TEST(TuplePolynomials, Shapes) {
  const std::vector<i64> v = {0, 1, 2, 3};
  const auto [f1, f2] = build_f_pair(v);
  EXPECT_EQ(f1, (IntPolynomial{0, -1, 1}));
  EXPECT_EQ(f2, (IntPolynomial{6, -5, 1}));
  EXPECT_EQ(wronskian_combo(v), f1.derivative() * f2 - f1 * f2.derivative());
  // sum 1/(X+v_i) over the halves, cleared: 1/X + 1/(X+1) - 1/(X+2) - 1/(X+3).
  const IntPolynomial p = build_Pv_kloosterman(v);
  for (long x : {1L, 2L, 5L}) {
    const BigRational lhs = BigRational(1, x) + BigRational(1, x + 1) - BigRational(1, x + 2) - BigRational(1, x + 3);
    const BigRational rhs = BigRational(p.evaluate(x)) / BigRational(x * (x + 1) * (x + 2) * (x + 3));
    EXPECT_EQ(lhs, rhs);
  }
  EXPECT_EQ(build_Pv_mult(v), (IntPolynomial{-6, -4}));  // X(X+1) - (X+2)(X+3)
  const std::vector<i64> odd = {1, 2, 3};
  EXPECT_THROW(build_f_pair(odd), std::domain_error);
  EXPECT_THROW(build_Pv_kloosterman(odd), std::domain_error);
}

// |coeff of X^{2k-2-i}| <= 2k C(2k-1, i+1) V^{i+1} on [-V, V]^{2k}, attained
// up to the constant at box vertices.
TEST(TuplePolynomials, CoefficientBounds) {
  for (int k = 1; k <= 3; ++k)
    for (i64 V = 1; V <= (k == 3 ? 3 : 6); ++V) {
      const auto bounds = pv_coefficient_bounds(k, V);
      ASSERT_EQ(bounds.size(), static_cast<std::size_t>(2 * k - 1));
      std::vector<i64> v(static_cast<std::size_t>(2 * k), -V);
      while (true) {
        const IntPolynomial p = build_Pv_kloosterman(v);
        EXPECT_LE(p.degree(), 2 * k - 2);
        for (int i = 0; i <= 2 * k - 2; ++i) EXPECT_LE(abs(p.coeff(2 * k - 2 - i)), bounds[static_cast<std::size_t>(i)]);
        std::size_t pos = 0;
        while (pos < v.size() && v[pos] == V) v[pos++] = -V;
        if (pos == v.size()) break;
        ++v[pos];
      }
    }
  // k = 1, v = (-V, V) reaches 2V.
  EXPECT_EQ(pv_coefficient_bounds(1, 5)[0], BigInt(10));
  EXPECT_EQ(build_Pv_kloosterman(std::vector<i64>{-5, 5}), (IntPolynomial{10}));
}

TEST(HeightBound, Formula) {
  EXPECT_DOUBLE_EQ(resultant_height_rhs(10.0, 0.0, 0.0, 2, 3), 100.0);
  EXPECT_DOUBLE_EQ(resultant_height_rhs(2.0, 1.0, 1.0, 1, 1), 1.0);
  EXPECT_THROW(resultant_height_rhs(1.0, 0.0, 0.0, 2, 2), std::domain_error);
}
