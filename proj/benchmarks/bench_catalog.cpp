#include <benchmark/benchmark.h>

#include "pblring/catalog.hpp"

using namespace pblring;

namespace {

void BM_CatalogSmallCorpus(benchmark::State& state) {
  const auto corpus = named_corpus("small");
  CatalogOptions o;
  o.workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_catalog(corpus, o).theorem_failures());
}
BENCHMARK(BM_CatalogSmallCorpus)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_CorpusExpansion(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(named_corpus("default").size());
}
BENCHMARK(BM_CorpusExpansion)->Unit(benchmark::kMillisecond);

}  // namespace
