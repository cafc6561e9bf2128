#pragma once

// Worker-count control for the OpenMP kernels. Every kernel splits its index
// range into fixed-size blocks that do not depend on the worker count and
// combines block results in block order, so results are bit-identical for
// any number of workers.

#include <cstddef>

namespace charsum {

/// Sets the number of OpenMP threads used by subsequent kernel calls; n <= 0
/// restores the runtime default.
void set_workers(int n);
int workers();

/// Number of fixed-size blocks covering [0, n).
constexpr std::size_t block_count(std::size_t n, std::size_t block) { return (n + block - 1) / block; }

}  // namespace charsum
