// Serial references against the OpenMP kernels on representative sizes.

#include <benchmark/benchmark.h>

#include "charsum/char_sums.hpp"
#include "charsum/congruence_counts.hpp"
#include "serial.hpp"

using namespace charsum;

namespace {

const DirichletCharacter& bench_character() {
  static const DirichletCharacter chi = enumerate_characters(1009, true).at(5);
  return chi;
}

void BM_MomentReference(benchmark::State& state) {
  const auto V = static_cast<u64>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(reference::moment(bench_character(), V, 3));
}

void BM_MomentKernel(benchmark::State& state) {
  const auto V = static_cast<u64>(state.range(0));
  const CharacterTable table(bench_character());
  for (auto _ : state) benchmark::DoNotOptimize(moment_value(table, V, 3));
}

void BM_ExpansionReference(benchmark::State& state) {
  const auto V = static_cast<u64>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(reference::expansion_rhs(bench_character(), V, 2));
}

void BM_ExpansionKernel(benchmark::State& state) {
  const auto V = static_cast<u64>(state.range(0));
  const CharacterTable table(bench_character());
  for (auto _ : state) benchmark::DoNotOptimize(expansion_rhs(table, V, 2));
}

void BM_CountKReference(benchmark::State& state) {
  const TupleBox box = TupleBox::symmetric(2, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(reference::count_K(2, 1009, 3, box));
}

void BM_CountKMeetInMiddle(benchmark::State& state) {
  const TupleBox box = TupleBox::symmetric(2, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_K(2, 1009, 3, box));
}

}  // namespace

BENCHMARK(BM_MomentReference)->Arg(16)->Arg(64);
BENCHMARK(BM_MomentKernel)->Arg(16)->Arg(64);
BENCHMARK(BM_ExpansionReference)->Arg(3)->Arg(5);
BENCHMARK(BM_ExpansionKernel)->Arg(3)->Arg(5);
BENCHMARK(BM_CountKReference)->Arg(4)->Arg(8);
BENCHMARK(BM_CountKMeetInMiddle)->Arg(4)->Arg(8)->Arg(32);

BENCHMARK_MAIN();
