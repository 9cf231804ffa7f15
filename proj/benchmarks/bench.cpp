#include "rlcode/channel.hpp"
#include "rlcode/codes.hpp"
#include "rlcode/fuzzy.hpp"
#include "rlcode/fuzzy_lattice.hpp"
#include "rlcode/ideals.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace rlcode;

void BM_EnumerateIdeals(benchmark::State& state) {
  const auto w = product_wajsberg(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_ideals(w.lattice()));
}
BENCHMARK(BM_EnumerateIdeals)->DenseRange(2, 6);

void BM_FuzzyClosure(benchmark::State& state) {
  const auto w = product_wajsberg(static_cast<std::size_t>(state.range(0)));
  const auto& l = w.lattice();
  std::mt19937_64 rng(1);
  std::vector<Grade> grades(l.size());
  for (auto& g : grades) g = Grade(static_cast<std::int64_t>(rng() % 5), 4);
  const FuzzySubset mu(l.id(), grades);
  for (auto _ : state) benchmark::DoNotOptimize(fuzzy_closure(l, mu));
}
BENCHMARK(BM_FuzzyClosure)->DenseRange(2, 5);

void BM_GridFuzzyIdeals(benchmark::State& state) {
  const auto w = product_wajsberg(2);
  const ValueGrid grid({Grade(0), Grade(1, 3), Grade(1, 2), Grade(2, 3), Grade(1)});
  for (auto _ : state) benchmark::DoNotOptimize(grid_fuzzy_ideals(w.lattice(), grid));
}
BENCHMARK(BM_GridFuzzyIdeals);

void BM_CodeParams(benchmark::State& state) {
  const auto m = boolean_form_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(code_params(m));
}
BENCHMARK(BM_CodeParams)->DenseRange(3, 12, 3);

void BM_Decode(benchmark::State& state) {
  const BinaryCode code(boolean_form_matrix(static_cast<std::size_t>(state.range(0))));
  const MinDistanceDecoder decoder(code);
  auto word = encode(BitVector::from_integer(code.k(), 5), code);
  word.flip(0);
  for (auto _ : state) benchmark::DoNotOptimize(decoder.decode(word));
}
BENCHMARK(BM_Decode)->DenseRange(4, 10, 2);

void BM_Channel(benchmark::State& state) {
  const BinaryCode code(boolean_form_matrix(4));
  for (auto _ : state) benchmark::DoNotOptimize(run_channel(code, {Grade(1, 10), 1000, 7}));
}
BENCHMARK(BM_Channel);

}  // namespace

BENCHMARK_MAIN();
