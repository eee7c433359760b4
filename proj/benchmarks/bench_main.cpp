#include <benchmark/benchmark.h>

#include <random>

#include "mscodes/channel.hpp"
#include "mscodes/codebook.hpp"
#include "mscodes/constructions.hpp"
#include "mscodes/isomorphisms.hpp"

namespace {

using namespace mscodes;

Multiset random_multiset(std::mt19937_64& rng, std::uint32_t q, std::size_t card) {
  std::vector<Symbol> elements(card);
  for (auto& s : elements) s = 1 + static_cast<Symbol>(rng() % q);
  return Multiset::from_elements(elements, Alphabet(q));
}

void BM_Distance(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto q = static_cast<std::uint32_t>(state.range(0));
  const auto a = random_multiset(rng, q, 4 * q);
  const auto b = random_multiset(rng, q, 4 * q);
  for (auto _ : state) benchmark::DoNotOptimize(distance(a, b));
}
BENCHMARK(BM_Distance)->RangeMultiplier(8)->Range(8, 4096);

void BM_DecodeMinDistance(benchmark::State& state) {
  const auto code = subset_construct(hamming_7_4());
  const auto spec = ChannelSpec::exact(1, 1, 0);
  Engine engine(2);
  std::vector<Multiset> received;
  for (int i = 0; i < 256; ++i) received.push_back(transmit_multiset(code[i % 16], spec, engine).received);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(decode_min_distance(code, received[i++ % 256]));
}
BENCHMARK(BM_DecodeMinDistance);

void BM_Levenshtein(benchmark::State& state) {
  std::mt19937_64 rng(3);
  InnerWord p(state.range(0)), r(state.range(0));
  for (auto& s : p) s = static_cast<InnerSymbol>(rng() % 4);
  for (auto& s : r) s = static_cast<InnerSymbol>(rng() % 4);
  for (auto _ : state) benchmark::DoNotOptimize(levenshtein_distance(p, r));
}
BENCHMARK(BM_Levenshtein)->RangeMultiplier(4)->Range(8, 512);

void BM_SphereEnumeration(benchmark::State& state) {
  const auto q = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) {
    SphereEnumerator e(q, 6);
    std::uint64_t n = 0;
    while (e.next()) ++n;
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_SphereEnumeration)->DenseRange(2, 8, 2);

void BM_VerifyHammingSubset(benchmark::State& state) {
  const auto code = subset_construct(hamming_7_4());
  VerifyOptions options;
  options.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(verify_theorem1(code, ErrorPattern{2, 2, 2}, options));
}
BENCHMARK(BM_VerifyHammingSubset)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
