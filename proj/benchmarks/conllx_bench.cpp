#include <benchmark/benchmark.h>

#include "bench_data.hpp"

namespace {

using namespace i3rab;

void BM_ReadConll(benchmark::State& state) {
  const auto text = conllx::emit_treebank(bench::repeated(bench::i3rab(), static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(conllx::parse_treebank(text));
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_ReadConll)->Arg(1)->Arg(64);

void BM_EmitTreebank(benchmark::State& state) {
  const auto tb = bench::repeated(bench::i3rab(), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(conllx::emit_treebank(tb));
}
BENCHMARK(BM_EmitTreebank)->Arg(1)->Arg(64);

void BM_IsProjective(benchmark::State& state) {
  const auto& tb = bench::i3rab();
  for (auto _ : state)
    for (const auto& s : tb.sentences) benchmark::DoNotOptimize(conllx::is_projective(s));
}
BENCHMARK(BM_IsProjective);

}  // namespace
