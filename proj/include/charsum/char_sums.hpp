#pragma once

// Short character sums, their 2r-th moments over shifts, and complete sums
// of chi(f_{v1}) * conj(chi(f_{v2})). Values are exact unit roots; sums are
// accumulated in double precision in a fixed order.

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "charsum/characters.hpp"

namespace charsum {

/// sum_{lambda=1}^{q} |sum_{1<=v<=V} chi(lambda+v)|^{2r} for one character.
struct MomentRecord {
  u64 q = 0;
  std::string char_label;
  u64 V = 0;
  int r = 0;
  double value = 0.0;

  static std::string csv_header();  // "q,char_label,V,r,value"
  std::string csv_row() const;
};

/// sum_{M < n <= M+N} chi(n).
std::complex<double> short_sum(const DirichletCharacter& chi, i64 M, u64 N);
std::complex<double> short_sum(const CharacterTable& table, i64 M, u64 N);

/// Requires 1 <= V <= 1000, 1 <= r <= 5, q <= 10^5.
MomentRecord moment(const DirichletCharacter& chi, u64 V, int r);
/// Blocked sliding-window kernel; each block of shifts restarts its window
/// from scratch so the result does not depend on the worker count.
double moment_value(const CharacterTable& table, u64 V, int r);

/// sum_{lambda=1}^{q} chi(f_{v1}(lambda)) conj(chi(f_{v2}(lambda))), with f_{v1},
/// f_{v2} from build_f_pair. Throws for odd-length v.
std::complex<double> complete_sum(const DirichletCharacter& chi, std::span<const i64> v);
ExactUnitRootSum complete_sum_exact(const DirichletCharacter& chi, std::span<const i64> v);
/// Same sum via multiplicativity, chi evaluated on each linear factor.
std::complex<double> complete_sum_product_form(const CharacterTable& table, std::span<const i64> v);

struct ExpansionGap {
  double lhs = 0.0;  // the moment
  double rhs = 0.0;  // sum over 2r-tuples in [1, V] of |complete_sum|
};
/// Expands the moment over tuples; lhs <= rhs always. The right side is
/// enumerated over pairs of multisets with multinomial weights.
ExpansionGap moment_expansion_gap(const DirichletCharacter& chi, u64 V, int r);
double expansion_rhs(const CharacterTable& table, u64 V, int r);

/// max over 0 <= M < q, 1 <= N <= q of |short_sum| / (sqrt(q) log q).
/// Throws std::domain_error unless chi is primitive with q >= 3.
double pv_ratio(const DirichletCharacter& chi);

/// Entry N-1 holds max over 0 <= M < q of |short_sum(chi, M, N)|, N = 1..max_length.
std::vector<double> max_short_sums(const DirichletCharacter& chi, u64 max_length);

}  // namespace charsum
