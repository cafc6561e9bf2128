#pragma once

// Exact lemma suites, right-hand sides of the asymptotic bounds, and ratio
// scans over parameter grids.
//
// Asymptotic bounds are evaluated with implied constant 1 and every q^{o(1)}
// factor set to 1. Their reports are "report-only": the ratio is recorded but
// never judged. Statements with explicit constants get "exact-pass" or
// "exact-fail".

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "charsum/arithmetic.hpp"
#include "charsum/grid.hpp"

namespace charsum {

enum class Verdict { ExactPass, ExactFail, ReportOnly };
std::string to_string(Verdict v);

struct BoundReport {
  std::string statement;
  std::vector<std::pair<std::string, std::string>> params;  // ordered key=value
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;  // lhs/rhs; 0 when both vanish, inf when only rhs does
  Verdict verdict = Verdict::ReportOnly;

  static BoundReport make(std::string statement, std::vector<std::pair<std::string, std::string>> params,
                          double lhs, double rhs, Verdict verdict);
  /// "k1=v1;k2=v2"
  std::string params_text() const;

  static std::string csv_header();  // "statement,params,lhs,rhs,ratio,verdict"
  std::string csv_row() const;
  /// {"statement":..,"params":{..},"lhs":..,"rhs":..,"ratio":..,"verdict":..}
  std::string json() const;
};

/// CSV text (header plus one row per report) and a JSON array.
std::string reports_csv(const std::vector<BoundReport>& reports);
std::string reports_json(const std::vector<BoundReport>& reports);

// ---------------------------------------------------------------------------
// Right-hand sides, implied constant 1.

/// q V^r + q^{1/2} s^{1/4} c^{1/2} V^{r+1/2} + q^{1/2} c^{1/2 - 1/(16 r(r-1))} V^{2r}
/// with q = q1 s c. Throws std::domain_error for r < 2.
double rhs_main1(u64 q, u64 V, int r);
/// q V^r + q^{3/4} c^{1/4} V^{r+1/2} + q^{1/2} c^{1/2 - 1/(16 r(r-1))} V^{2r}. r >= 2.
double rhs_cor1(u64 q, u64 V, int r);
/// N^{1-1/r} q^{(r+1)/(4r^2)} c^{(r-1)/(4r^2) - 1/(32 r^3)}.
double rhs_charsumest(u64 q, u64 N, int r);
/// q V^r + q^{1/2} V^{2r}.
double rhs_weil_moment(u64 q, u64 V, int r);
/// N^{1-1/r} q^{(r+1)/(4r^2)}.
double rhs_burgess(u64 q, u64 N, int r);
/// V^{2r} / q^{1/(4(r-1))} + V^r. r >= 2.
double rhs_cor11(u64 q, u64 V, int r);

/// Full right-hand side of the divisor-sum reduction of the moment to
/// Kloosterman counts, with t_j s_j <= V and max over lambda computed by
/// brute force. Throws std::domain_error naming the combination count when
/// the divisor enumeration exceeds its budget, or for V > q.
double lemma1_rhs(u64 q, u64 V, int r);
/// lemma1_rhs against the largest moment over primitive characters mod q.
BoundReport verify_lemma1_rhs(u64 q, u64 V, int r);

// ---------------------------------------------------------------------------
// Exact suites.

enum class PrimePowerLemma {
  EvenPower,     // chi primitive mod p^{2a}:    |S| <= p^a N_v(p^a)
  TwoOddPower,   // chi primitive mod 2^{2a+1}:  |S| <= 2^{a+1} N_v(2^a)
  OddPower,      // chi primitive mod p^{2a+1}, p odd: |S| <= p^{a+1/2} N_v(p^a) + p^a N_v(p^{a+1})
};

/// One report per (primitive chi, v) with v in [v_lo, v_hi]^{2r}. The modulus
/// must have the shape the lemma names; otherwise std::domain_error.
std::vector<BoundReport> verify_prime_power_lemma(PrimePowerLemma which, u64 modulus, int r, i64 v_lo, i64 v_hi);
/// The lemmas that apply to p and alpha: EvenPower on p^{2a}, then OddPower on
/// p^{2a+1} for odd p or TwoOddPower on 2^{2a+1}.
std::vector<BoundReport> verify_prime_power_lemmas(u64 p, int alpha, int r, i64 v_lo, i64 v_hi);

/// One report per (primitive chi, v in [1, V]^{2r} with at least r+1 distinct
/// entries); passes when some j with A_j(v) != 0 meets
/// (4r)^{tau(q)} q^{1/2} gcd(A_j(v), q)^{1/2}. q must be squarefree.
std::vector<BoundReport> verify_squarefree_lemma(u64 q, int r, i64 V);

struct SuiteResult {
  std::string id;
  u64 instances = 0;
  u64 failures = 0;
  std::vector<BoundReport> reports;

  bool passed() const { return failures == 0; }
  /// "<id>: <instances> instances, <failures> failures, max ratio <x>"
  std::string summary() const;
};

/// Exact suite ids, in registry order.
const std::vector<std::string>& suite_ids();
/// Runs one exact suite on its full declared grid. Randomized suites draw
/// from a generator seeded with `seed`. Unknown ids throw std::invalid_argument.
SuiteResult run_suite(const std::string& id, std::uint64_t seed = 0);

// ---------------------------------------------------------------------------
// Ratio scans.

struct ScanResult {
  std::string id;
  std::vector<BoundReport> reports;
  u64 sanity_checks = 0;
  u64 sanity_failures = 0;

  /// Largest ratio and the parameters attaining it (first in grid order).
  double max_ratio() const;
  std::string argmax() const;
  /// One line per statement in the scan: "<statement> points=<n> max_ratio=<x> argmax=<params>",
  /// then "sanity checks=<n> failures=<m>".
  std::string summary() const;
};

/// Scan ids, in registry order.
const std::vector<std::string>& scan_ids();
/// Evaluates the statement at every grid point in grid order. Missing grid
/// keys yield an empty report. Moment scans also check moment <= the
/// tuple-expansion bound; Kloosterman scans check count_K >= U^r.
ScanResult scan_theorem(const std::string& id, const Grid& grid);

}  // namespace charsum
