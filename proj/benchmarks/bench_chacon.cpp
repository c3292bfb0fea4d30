#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include "chacon/hierarchy.hpp"
#include "chacon/metrics.hpp"
#include "chacon/shift.hpp"
#include "chacon/word.hpp"

namespace {

const chacon::Hierarchy& shared() {
  static const chacon::Hierarchy h(chacon::kDefaultCap);
  return h;
}

void BM_LetterAt(benchmark::State& state) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<uint64_t> pick(
      0, chacon::level_length(static_cast<int>(state.range(0))) - 1);
  std::vector<uint64_t> positions(1024);
  for (auto& p : positions) p = pick(rng);
  size_t at = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(chacon::letter_at(positions[at]));
    at = (at + 1) & 1023;
  }
}
BENCHMARK(BM_LetterAt)->Arg(12)->Arg(24)->Arg(38);

void BM_BuildHierarchy(benchmark::State& state) {
  for (auto _ : state) {
    chacon::Hierarchy h(static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(h.level(h.cap()).size());
  }
}
BENCHMARK(BM_BuildHierarchy)->Arg(10)->Arg(13)->Arg(15);

void BM_Segment(benchmark::State& state) {
  const auto& h = shared();
  const uint64_t start = chacon::level_length(20) + 777;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        h.segment(start, static_cast<uint64_t>(state.range(0))));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Segment)->Range(1024, 1 << 20);

void BM_Occurrences(benchmark::State& state) {
  const auto& h = shared();
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(chacon::occurrences(h.level(n), h.level(12)));
  }
}
BENCHMARK(BM_Occurrences)->Arg(2)->Arg(5)->Arg(8);

void BM_ZeroHamming(benchmark::State& state) {
  const auto& h = shared();
  const int n = static_cast<int>(state.range(0));
  const chacon::Word alpha = h.segment(7, chacon::level_length(n));
  for (auto _ : state) {
    benchmark::DoNotOptimize(chacon::zero_hamming(h.level(n), alpha));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<int64_t>(chacon::level_length(n)));
}
BENCHMARK(BM_ZeroHamming)->Arg(10)->Arg(13)->Arg(15);

void BM_SubwordScan(benchmark::State& state) {
  const auto& h = shared();
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        chacon::min_zero_hamming_over_subwords(h, n, n + 3));
  }
}
BENCHMARK(BM_SubwordScan)->Arg(3)->Arg(5)->Arg(7);

void BM_LimitDistance(benchmark::State& state) {
  const auto& h = shared();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        chacon::limit_distance(h, static_cast<uint64_t>(state.range(0))));
  }
}
BENCHMARK(BM_LimitDistance)->Arg(9)->Arg(99991)->Arg(999983);

}  // namespace

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
