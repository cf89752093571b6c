#include <benchmark/benchmark.h>

#include <random>

#include "beltca/afo.hpp"
#include "beltca/belt.hpp"
#include "beltca/enumerate.hpp"
#include "beltca/khat.hpp"
#include "beltca/relations.hpp"
#include "beltca/wreath.hpp"

using namespace beltca;

namespace {

PeriodicConfig random_tape(const AlphabetRef& a, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return PeriodicConfig(a, random_word(a->size(), n, rng));
}

void BM_AfoApply(benchmark::State& state) {
  auto a = Alphabet::plain(3);
  const AfoSpec f(SafeWordSet(a, {{1}, {2}}, 1), {1, 0}, {1, -1}, "f");
  std::vector<Symbol> x(state.range(0), 0), y(x.size());
  x[x.size() / 2] = 1;
  for (auto _ : state) {
    f.apply(x, y);
    benchmark::DoNotOptimize(y.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_AfoApply)->Range(8, 4096);

void BM_SafetyCheck(benchmark::State& state) {
  auto a = Alphabet::plain(2);
  std::vector<Word> words{{1, 0, 1}, {1, 1, 0, 1}, {1, 0, 0, 1, 1}};
  for (auto _ : state) benchmark::DoNotOptimize(minimal_safe_threshold(*a, words));
}
BENCHMARK(BM_SafetyCheck);

void BM_BeltGlobal(benchmark::State& state) {
  const auto e = embed_automorphism(Automorphism::shift(Alphabet::plain(3)));
  const auto x = random_tape(e.alphabet(), state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(e.apply(x));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BeltGlobal)->Range(16, 4096);

void BM_BeltWindowed(benchmark::State& state) {
  const auto e = embed_automorphism(Automorphism::shift(Alphabet::plain(3)));
  const auto x = random_tape(e.alphabet(), state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(e.apply_windowed(x));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BeltWindowed)->Range(16, 4096);

void BM_KhatGenerator(benchmark::State& state) {
  const auto g = khat_generator(3, 3);
  const auto x = random_tape(g.alphabet(), state.range(0), 2);
  for (auto _ : state) benchmark::DoNotOptimize(g.apply(x));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_KhatGenerator)->Range(16, 4096);

void BM_ZZ2ZWord(benchmark::State& state) {
  const auto ex = assemble_example_zz2z();
  const auto w = GroupWord::parse("(FL)^3 ULUFRD^4LFR", ex.table);
  const auto x = random_tape(ex.table.alphabet(), state.range(0), 3);
  for (auto _ : state) benchmark::DoNotOptimize(apply_word(ex.table, w, x));
}
BENCHMARK(BM_ZZ2ZWord)->Range(16, 1024);

void BM_TransitionTables(benchmark::State& state) {
  const auto t = khat_table(2);
  for (auto _ : state) benchmark::DoNotOptimize(TransitionTables(t, state.range(0)).tapes());
}
BENCHMARK(BM_TransitionTables)->DenseRange(3, 5);

}  // namespace
BENCHMARK_MAIN();
