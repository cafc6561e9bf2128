#pragma once

// Straightforward serial versions of the parallel kernels. They share no
// code with the kernels beyond character evaluation and exist as oracles for
// tests and as baselines for the benchmarks.

#include <complex>
#include <vector>

#include "charsum/char_sums.hpp"
#include "charsum/congruence_counts.hpp"

namespace charsum::reference {

/// Each shift summed from scratch.
double moment(const DirichletCharacter& chi, u64 V, int r);
/// All V^{2r} tuples, each complete sum via the tuple polynomials.
double expansion_rhs(const DirichletCharacter& chi, u64 V, int r);
/// Every (M, N) summed from scratch.
std::vector<double> max_short_sums(const DirichletCharacter& chi, u64 max_length);
/// Every tuple of the box checked on its own.
CountResult count_K(int r, u64 q, i64 lambda, const TupleBox& box);
CountResult count_mult_cong(int r, u64 q, i64 lambda, const TupleBox& box);

}  // namespace charsum::reference
