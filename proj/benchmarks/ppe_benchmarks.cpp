#include <benchmark/benchmark.h>

#include <vector>

#include "ppe/bench.hpp"
#include "ppe/codec.hpp"
#include "ppe/complexity.hpp"
#include "ppe/histogram.hpp"
#include "ppe/image.hpp"
#include "ppe/predictor.hpp"

namespace {

const ppe::GrayImage& Cover() {
  static const ppe::GrayImage img = ppe::ReadPgmFile(PPE_BENCH_IMAGE);
  return img;
}

void BM_PpeRecords(benchmark::State& state) {
  const auto& img = Cover();
  for (auto _ : state) {
    benchmark::DoNotOptimize(ppe::PpeRecords(img, ppe::Parity::kCross));
  }
  state.SetItemsProcessed(state.iterations() * img.size() / 2);
}
BENCHMARK(BM_PpeRecords)->Unit(benchmark::kMillisecond);

void BM_OrderedSequence(benchmark::State& state) {
  const auto& img = Cover();
  for (auto _ : state) {
    benchmark::DoNotOptimize(ppe::OrderedPpeSequence(img, ppe::Parity::kCross));
  }
}
BENCHMARK(BM_OrderedSequence)->Unit(benchmark::kMillisecond);

void BM_SelectParameters(benchmark::State& state) {
  std::vector<int> ppes;
  for (const auto& r : ppe::OrderedPpeSequence(Cover(), ppe::Parity::kCross)) {
    ppes.push_back(r.ppe);
  }
  const auto rho = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ppe::SelectParameters(ppes, {rho, rho}));
  }
}
BENCHMARK(BM_SelectParameters)->Arg(1000)->Arg(10000)
    ->Unit(benchmark::kMicrosecond);

void BM_SelectPeaks(benchmark::State& state) {
  ppe::PpeHistogram h;
  for (const auto& r : ppe::OrderedPpeSequence(Cover(), ppe::Parity::kCross)) {
    h.Add(r.ppe);
  }
  const ppe::ZeroBins zeros = ppe::FindZeroBins(h);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ppe::SelectPeaks(h, zeros, 5000));
  }
}
BENCHMARK(BM_SelectPeaks)->Unit(benchmark::kMicrosecond);

void BM_Embed(benchmark::State& state) {
  const auto secret =
      ppe::RandomBits(1, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ppe::Embed(Cover(), secret));
  }
}
BENCHMARK(BM_Embed)->Arg(0)->Arg(10000)->Arg(20000)
    ->Unit(benchmark::kMillisecond);

void BM_Extract(benchmark::State& state) {
  const auto secret =
      ppe::RandomBits(1, static_cast<std::size_t>(state.range(0)));
  const ppe::GrayImage marked = ppe::Embed(Cover(), secret).marked;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ppe::Extract(marked));
  }
}
BENCHMARK(BM_Extract)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
