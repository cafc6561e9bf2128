#include <gtest/gtest.h>

#include <complex>
#include <numeric>
#include <stdexcept>

#include "charsum/characters.hpp"

using namespace charsum;

namespace {

bool near(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < 1e-12; }

// Smallest d | q such that chi is 1 on every unit n = 1 mod d.
u64 conductor_by_restriction(const DirichletCharacter& chi) {
  const u64 q = chi.modulus();
  for (u64 d : divisors(q)) {
    bool induced = true;
    for (u64 n = 1; n < q && induced; n += d)
      if (std::gcd(n, q) == 1 && chi(static_cast<i64>(n)) != UnitRootValue::one()) induced = false;
    if (induced) return d;
  }
  return q;
}

}  // namespace

TEST(UnitRoot, Arithmetic) {
  const auto i = UnitRootValue::root(1, 4);
  EXPECT_EQ(i * i, UnitRootValue::root(1, 2));
  EXPECT_EQ(i * i.conj(), UnitRootValue::one());
  EXPECT_EQ(UnitRootValue::root(2, 6), UnitRootValue::root(1, 3));
  EXPECT_TRUE((i * UnitRootValue::zero()).is_zero());
  EXPECT_TRUE(near(i.to_complex(), {0, 1}));
}

TEST(Characters, CountsModEight) {
  EXPECT_EQ(enumerate_characters(8, false).size(), 4u);
  EXPECT_EQ(enumerate_characters(8, true).size(), 2u);
  const auto chi = DirichletCharacter::from_label("8:2");
  EXPECT_EQ(chi.conductor(), 4u);
  EXPECT_FALSE(chi.is_primitive());
}

TEST(Characters, WorkedValues) {
  // 2 generates mod 25, and chi(2) = i for the label 5:1.
  const auto chi = DirichletCharacter::from_label("5:1");
  EXPECT_TRUE(near(chi(2).to_complex(), {0, 1}));
  EXPECT_TRUE(near(chi(3).to_complex(), {0, -1}));
  EXPECT_TRUE(chi(10).is_zero());
  // Oracle: 2 generates mod 9, so 9:1 at 2 is e(1/6) and 9:3 at 2 is -1.
  EXPECT_EQ(DirichletCharacter::from_label("9:1")(2), UnitRootValue::root(1, 6));
  EXPECT_EQ(DirichletCharacter::from_label("9:3")(2), UnitRootValue::root(1, 2));
  EXPECT_EQ(DirichletCharacter::from_label("9:3").conductor(), 3u);
}

TEST(Characters, LabelsRoundTrip) {
  for (u64 q : {1u, 2u, 12u, 60u, 360u, 1001u}) {
    const auto all = enumerate_characters(q, false);
    EXPECT_EQ(all.size(), euler_phi(q));
    for (const auto& chi : all) EXPECT_EQ(DirichletCharacter::from_label(chi.label()), chi);
  }
  EXPECT_THROW(DirichletCharacter::from_label("12:9,9"), std::domain_error);
  EXPECT_THROW(DirichletCharacter::from_label("nonsense"), std::invalid_argument);
}

TEST(Characters, Multiplicative) {
  for (u64 q : {16u, 45u, 56u, 99u}) {
    for (const auto& chi : enumerate_characters(q, false))
      for (i64 a = -20; a < 40; a += 3)
        for (i64 b = 1; b < 30; b += 4) EXPECT_EQ(chi(a * b), chi(a) * chi(b));
  }
}

// sum_n chi(n) = 0 for chi nontrivial and sum_chi chi(n) = 0 for n != 1, exactly.
TEST(Characters, OrthogonalityUpTo500) {
  for (u64 q = 1; q <= 500; ++q) {
    const auto group = DirichletGroup::create(q);
    const auto chars = enumerate_characters(q, false);
    for (const auto& chi : chars) {
      ExactUnitRootSum s(group->angle_order());
      for (u64 n = 0; n < q; ++n) s.add(chi(static_cast<i64>(n)));
      ASSERT_EQ(s.is_zero(), !chi.is_trivial()) << chi.label();
    }
    if (q > 60) continue;
    for (u64 n = 2; n < q; ++n) {
      if (std::gcd(n, q) != 1) continue;
      ExactUnitRootSum s(group->angle_order());
      for (const auto& chi : chars) s.add(chi(static_cast<i64>(n)));
      EXPECT_TRUE(s.is_zero()) << q << " " << n;
    }
  }
}

TEST(Characters, ConductorMatchesRestriction) {
  for (u64 q = 1; q <= 200; ++q) {
    u64 primitive = 0;
    for (const auto& chi : enumerate_characters(q, false)) {
      ASSERT_EQ(chi.conductor(), conductor_by_restriction(chi)) << chi.label();
      primitive += chi.is_primitive();
    }
    EXPECT_EQ(enumerate_characters(q, true).size(), primitive);
  }
}

TEST(Characters, OrderAndConjugate) {
  for (const auto& chi : enumerate_characters(63, false)) {
    for (i64 n = 1; n < 63; ++n) {
      UnitRootValue p = UnitRootValue::one();
      for (u64 k = 0; k < chi.order(); ++k) p = p * chi(n);
      if (!chi(n).is_zero()) EXPECT_EQ(p, UnitRootValue::one());
      EXPECT_EQ(chi.conj()(n), chi(n).conj());
    }
  }
}

TEST(Characters, TableMatchesEvaluation) {
  const auto chi = DirichletCharacter::from_label("45:2,3");
  const CharacterTable t(chi);
  for (u64 n = 0; n < 45; ++n) EXPECT_TRUE(near(t.value_at(n), chi(static_cast<i64>(n)).to_complex()));
}

TEST(Characters, CyclotomicPolynomials) {
  EXPECT_EQ(cyclotomic_polynomial(1), (std::vector<std::int64_t>{-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6), (std::vector<std::int64_t>{1, -1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12), (std::vector<std::int64_t>{1, 0, -1, 0, 1}));
}

TEST(Characters, ExactSumZeroTest) {
  ExactUnitRootSum s(12);
  s.add_angle(0);
  s.add_angle(4);
  s.add_angle(8);  // cube roots of unity
  EXPECT_TRUE(s.is_zero());
  s.add_angle(3);
  EXPECT_FALSE(s.is_zero());
  s.add_angle(9);
  EXPECT_TRUE(s.is_zero());
}

TEST(Characters, Domain) {
  EXPECT_THROW(DirichletGroup::create(0), std::domain_error);
  EXPECT_THROW(enumerate_characters(100001, false), std::domain_error);
}
