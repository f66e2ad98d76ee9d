#include <benchmark/benchmark.h>

#include "pblring/algebra.hpp"
#include "pblring/constructors.hpp"
#include "pblring/ideal_lattice.hpp"

using namespace pblring;

namespace {

void BM_AllIdealsZmod(benchmark::State& state) {
  const auto r = share(zmod(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(IdealLattice::compute(r).size());
}
BENCHMARK(BM_AllIdealsZmod)->Arg(64)->Arg(360)->Arg(1024);

void BM_AllIdealsMatrix(benchmark::State& state) {
  const auto r = share(matrix_ring(zmod(static_cast<std::size_t>(state.range(0))), 2));
  for (auto _ : state) benchmark::DoNotOptimize(IdealLattice::compute(r).size());
}
BENCHMARK(BM_AllIdealsMatrix)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_PseudoBlCheck(benchmark::State& state) {
  const auto L = IdealLattice::compute(share(zmod(static_cast<std::size_t>(state.range(0)))));
  const auto a = ideal_algebra(L);
  for (auto _ : state) benchmark::DoNotOptimize(all_hold(check_pseudo_bl(a)));
}
BENCHMARK(BM_PseudoBlCheck)->Arg(360)->Arg(720);

}  // namespace
