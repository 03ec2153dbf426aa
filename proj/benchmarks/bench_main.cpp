#include <random>

#include <benchmark/benchmark.h>

#include "simon/arch.hpp"
#include "simon/class_automaton.hpp"
#include "simon/congruence.hpp"
#include "simon/matching.hpp"
#include "simon/reductions.hpp"
#include "simon/signature.hpp"
#include "simon/special.hpp"

using namespace simon;

namespace {

Word random_word(int sigma, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> letter(1, sigma);
  Word w(sigma);
  for (std::size_t i = 0; i < n; ++i) w.push_back(static_cast<Letter>(letter(rng)));
  return w;
}

void BM_UniversalityIndex(benchmark::State& state) {
  const Word w = random_word(4, static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(universality_index(w));
}
BENCHMARK(BM_UniversalityIndex)->RangeMultiplier(4)->Range(64, 65536);

// k = |u| rules out the universality shortcut, so this times the
// O(|u| |v| sigma) distinguisher itself.
void BM_SimonCongruent(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Word u = random_word(3, n, 2);
  const Word v = random_word(3, n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(simon_congruent(u, v, n));
}
BENCHMARK(BM_SimonCongruent)->RangeMultiplier(2)->Range(16, 1024);

void BM_SignatureOf(benchmark::State& state) {
  const Word w = random_word(4, static_cast<std::size_t>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(signature_of(w));
}
BENCHMARK(BM_SignatureOf)->RangeMultiplier(4)->Range(64, 16384);

void BM_SignaturePower(benchmark::State& state) {
  const UniversalitySignature s = signature_of(random_word(3, 20, 5));
  const Count n = Count(1) << state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(signature_power(s, n));
}
BENCHMARK(BM_SignaturePower)->Arg(16)->Arg(64)->Arg(256);

void BM_ClassAutomaton(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ClassAutomaton::build(2, k).size());
}
BENCHMARK(BM_ClassAutomaton)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_OneOccurrenceHugeK(benchmark::State& state) {
  const Alphabet ab(2);
  const Pattern p = Pattern::parse("aXbYbY", ab);
  const Count k = Count(10) << state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(match_univ_one_occurrence(p, 0, k).verdict);
}
BENCHMARK(BM_OneOccurrenceHugeK)->Arg(20)->Arg(200);

void BM_ConstVars(benchmark::State& state) {
  const Alphabet ab(2);
  const Pattern p = Pattern::parse("XaYXbY", ab);
  for (auto _ : state) benchmark::DoNotOptimize(match_univ_const_vars(p, state.range(0)).verdict);
}
BENCHMARK(BM_ConstVars)->Arg(3)->Arg(1000000);

void BM_RegularAutomaton(benchmark::State& state) {
  const Alphabet ab(2);
  const Pattern p = Pattern::parse("XaYbZ", ab);
  const Word w = ab.parse("abbaab");
  SearchCache cache;
  const SearchOptions opts{.cache = &cache};
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(match_simon_regular(p, w, k, true, opts).verdict);
}
BENCHMARK(BM_RegularAutomaton)->DenseRange(1, 3);

void BM_ReductionSolve(benchmark::State& state) {
  const CnfFormula phi{2, {Clause{Literal{1, true}, Literal{2, false}, Literal{2, false}},
                           Clause{Literal{1, false}, Literal{2, true}, Literal{1, false}}}};
  const GadgetInstance inst = build_match_univ_instance(phi, 5 * 2 + 2 + 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(match_univ(inst.alpha, inst.k, SearchOptions{.image_cap = 2}).verdict);
  }
}
BENCHMARK(BM_ReductionSolve)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
