#include <benchmark/benchmark.h>

#include "nsmm/frobenius.hpp"
#include "nsmm/null_ode.hpp"
#include "nsmm/zhu.hpp"

using namespace nsmm;

namespace {

const Rational kC = frac(-11, 14);

void BM_NormalOrder(benchmark::State& state) {
  const int twice = static_cast<int>(state.range(0));
  Word w;
  for (int t = twice; t >= -twice; t -= 3) w.push_back(t % 2 ? GeneratorMode::G_twice(t) : GeneratorMode::L(t / 2));
  for (auto _ : state) {
    NormalOrderer no(kC);  // fresh cache each time
    benchmark::DoNotOptimize(no.normal_order(w));
  }
  state.SetLabel(std::to_string(w.size()) + " modes");
}
BENCHMARK(BM_NormalOrder)->Arg(6)->Arg(9)->Arg(12);

void BM_SingularVectors(benchmark::State& state) {
  const Rational level(state.range(0), 2);
  const Rational h = state.range(0) % 2 ? frac(2, 7) : Rational(0);
  for (auto _ : state) {
    Module m(kC, h);
    benchmark::DoNotOptimize(m.singular_vectors(level));
  }
}
BENCHMARK(BM_SingularVectors)->Arg(4)->Arg(5)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_BimoduleIdeals(benchmark::State& state) {
  const ModuleLabel label = label_for_weight(7, 3, frac(2, 7));
  const auto gens = maximal_submodule_generators(7, 3, label);
  for (auto _ : state) benchmark::DoNotOptimize(bimodule_ideals(kC, frac(2, 7), gens));
}
BENCHMARK(BM_BimoduleIdeals)->Unit(benchmark::kMillisecond);

void BM_FusionTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(fusion_table(7, 3));
}
BENCHMARK(BM_FusionTable)->Unit(benchmark::kMillisecond);

void BM_DeriveSystem(benchmark::State& state) {
  const CorrelatorSpec spec = CorrelatorSpec::reference_case();
  Module m(kC, frac(2, 7));
  const VermaVector null = m.singular_vectors(2).front();
  for (auto _ : state) {
    auto sys = derive_system(null, 3, spec, {parse_component("Q00"), parse_component("Q11")});
    benchmark::DoNotOptimize(companion_form(reduce_to_one_variable(sys, spec)));
  }
}
BENCHMARK(BM_DeriveSystem)->Unit(benchmark::kMillisecond);

void BM_SeriesSolution(benchmark::State& state) {
  const CorrelatorSpec spec = CorrelatorSpec::reference_case();
  Module m(kC, frac(2, 7));
  const auto sys = derive_system(m.singular_vectors(2).front(), 3, spec, {parse_component("Q00"), parse_component("Q11")});
  const auto rs = companion_form(reduce_to_one_variable(sys, spec));
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(series_solution(rs, frac(-5, 7), n));
}
BENCHMARK(BM_SeriesSolution)->Arg(20)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
