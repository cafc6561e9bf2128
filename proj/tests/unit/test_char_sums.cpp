#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "charsum/char_sums.hpp"
#include "charsum/parallel.hpp"
#include "serial.hpp"

using namespace charsum;

namespace {

DirichletCharacter chi_of(const char* label) { return DirichletCharacter::from_label(label); }

double rel_err(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

TEST(CharSums, WorkedMoments) {
  // Direct-summation oracle values.
  EXPECT_NEAR(moment(chi_of("5:1"), 2, 1).value, 6.0, 1e-8);
  EXPECT_NEAR(moment(chi_of("7:1"), 3, 2).value, 36.0, 1e-8);
  EXPECT_NEAR(moment(chi_of("9:1"), 4, 3).value, 186.0, 1e-8);
}

TEST(CharSums, ShortSum) {
  const auto chi = chi_of("5:1");
  const auto s = short_sum(chi, 0, 2);
  EXPECT_NEAR(s.real(), 1.0, 1e-12);
  EXPECT_NEAR(s.imag(), 1.0, 1e-12);
  EXPECT_NEAR(std::abs(short_sum(chi, 3, 5)), 0.0, 1e-12);  // a full period
}

TEST(CharSums, MomentRecordCsv) {
  const MomentRecord rec = moment(chi_of("5:1"), 2, 1);
  EXPECT_EQ(MomentRecord::csv_header(), "q,char_label,V,r,value");
  EXPECT_EQ(rec.csv_row(), "5,5:1,2,1,6.0");
  const MomentRecord two = moment(chi_of("15:1,2"), 1, 1);
  EXPECT_EQ(two.csv_row(), "15,\"15:1,2\",1,1,8.0");  // phi(15) units, each |chi| = 1
}

TEST(CharSums, MomentMatchesReference) {
  for (u64 q : {5u, 12u, 27u, 40u, 77u})
    for (const auto& chi : enumerate_characters(q, false))
      for (int r = 1; r <= 3; ++r)
        for (u64 V : {1u, 3u, 7u}) {
          const double fast = moment(chi, V, r).value;
          EXPECT_LT(rel_err(fast, reference::moment(chi, V, r)), 1e-10) << chi.label() << " V=" << V << " r=" << r;
        }
}

// Pairs (chi(lambda+v)) and its conjugate have the same moments.
TEST(CharSums, ConjugationInvariance) {
  for (const auto& chi : enumerate_characters(36, false))
    for (int r = 1; r <= 3; ++r)
      EXPECT_LT(rel_err(moment(chi, 5, r).value, moment(chi.conj(), 5, r).value), 1e-10) << chi.label();
}

TEST(CharSums, TrivialCharacterSingleShift) {
  // Mod 1 every term is 1: q * V^{2r}.
  EXPECT_NEAR(moment(DirichletCharacter::trivial(1), 4, 2).value, 256.0, 1e-9);
}

TEST(CharSums, CompleteSumForms) {
  std::mt19937_64 rng(3);
  for (u64 q : {11u, 25u, 36u, 105u}) {
    for (const auto& chi : enumerate_characters(q, true)) {
      const CharacterTable table(chi);
      for (int t = 0; t < 5; ++t) {
        std::vector<i64> v(4);
        for (auto& x : v) x = static_cast<i64>(rng() % 9) - 4;
        EXPECT_LT(std::abs(complete_sum(chi, v) - complete_sum_product_form(table, v)), 1e-9);
      }
    }
  }
  const std::vector<i64> odd = {1, 2, 3};
  EXPECT_THROW(complete_sum(chi_of("5:1"), odd), std::domain_error);
}

TEST(CharSums, ExpansionBoundsMoment) {
  for (u64 q : {7u, 16u, 45u})
    for (const auto& chi : enumerate_characters(q, false))
      for (int r = 1; r <= 2; ++r)
        for (u64 V : {1u, 3u}) {
          const ExpansionGap g = moment_expansion_gap(chi, V, r);
          EXPECT_LE(g.lhs, g.rhs * (1 + 1e-12) + 1e-9) << chi.label();
          EXPECT_LT(rel_err(g.rhs, reference::expansion_rhs(chi, V, r)), 1e-9) << chi.label();
        }
}

TEST(CharSums, MaxShortSums) {
  const auto five = max_short_sums(chi_of("5:1"), 5);
  const double expected[] = {1.0, std::sqrt(2.0), std::sqrt(2.0), 1.0, 0.0};
  for (int i = 0; i < 5; ++i) EXPECT_NEAR(five[i], expected[i], 1e-12);
  for (const auto& chi : enumerate_characters(63, true)) {
    const auto fast = max_short_sums(chi, 80);
    const auto slow = reference::max_short_sums(chi, 80);
    for (std::size_t i = 0; i < fast.size(); ++i) EXPECT_NEAR(fast[i], slow[i], 1e-9);
  }
}

TEST(CharSums, PolyaVinogradovSmall) {
  for (u64 q = 3; q <= 60; ++q)
    for (const auto& chi : enumerate_characters(q, true)) EXPECT_LE(pv_ratio(chi), 1.0) << chi.label();
  EXPECT_THROW(pv_ratio(chi_of("8:2")), std::domain_error);  // conductor 4
  EXPECT_THROW(pv_ratio(chi_of("2:0")), std::domain_error);
}

TEST(CharSums, Domain) {
  EXPECT_THROW(moment(chi_of("5:1"), 0, 1), std::domain_error);
  EXPECT_THROW(moment(chi_of("5:1"), 1001, 1), std::domain_error);
  EXPECT_THROW(moment(chi_of("5:1"), 2, 6), std::domain_error);
}

TEST(CharSums, WorkerCountDoesNotChangeBits) {
  const auto chi = chi_of("1001:1,2,3");
  const CharacterTable table(chi);
  set_workers(1);
  const double one = moment_value(table, 40, 3);
  const double rhs_one = expansion_rhs(table, 3, 2);
  set_workers(8);
  const double eight = moment_value(table, 40, 3);
  const double rhs_eight = expansion_rhs(table, 3, 2);
  set_workers(0);
  EXPECT_EQ(one, eight);
  EXPECT_EQ(rhs_one, rhs_eight);
}
