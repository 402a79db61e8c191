#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "acq/category.hpp"
#include "acq/eval_global.hpp"
#include "acq/eval_state.hpp"
#include "acq/hom.hpp"
#include "acq/presentation.hpp"

namespace {

const std::vector<std::string> kPresentations = {
    "<x | x^2>",
    "<x, y | x y x^-1 y>",
    "<x, y | x^2 y^-2 x^-1 y>",
    "<x, y | x^2 y^2, x y x^-1 y^-1>",
    "<x1, x2, x3, x4 | x1 x2 x1^-1 x2^-1 x3 x4 x3^-1 x4^-1>",
};

// A fresh category per run so hom-space caches start cold.
void BM_StateEvaluator(benchmark::State& state) {
  const acq::Presentation p = acq::parse_presentation(kPresentations[state.range(0)]);
  for (auto _ : state) {
    const acq::Category c = acq::load_category("rep-s3-q");
    benchmark::DoNotOptimize(acq::q_invariant_state(p, c));
  }
  state.SetLabel(kPresentations[state.range(0)]);
}
BENCHMARK(BM_StateEvaluator)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_GlobalEvaluator(benchmark::State& state) {
  const acq::Presentation p = acq::parse_presentation(kPresentations[state.range(0)]);
  for (auto _ : state) {
    const acq::Category c = acq::load_category("rep-s3-q");
    benchmark::DoNotOptimize(acq::q_invariant_global(p, c));
  }
  state.SetLabel(kPresentations[state.range(0)]);
}
BENCHMARK(BM_GlobalEvaluator)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_StateZn(benchmark::State& state) {
  const acq::Presentation p = acq::parse_presentation("<x, y | x^2 y^-2 x^-1 y>");
  const std::string name = "zn:" + std::to_string(state.range(0));
  for (auto _ : state) {
    const acq::Category c = acq::load_category(name);
    benchmark::DoNotOptimize(acq::q_invariant_state(p, c));
  }
}
BENCHMARK(BM_StateZn)->RangeMultiplier(2)->Range(2, 16)->Unit(benchmark::kMillisecond);

void BM_HomBasis(benchmark::State& state) {
  const auto method = static_cast<acq::HomMethod>(state.range(1));
  for (auto _ : state) {
    const acq::Category c = acq::load_category("rep-s3-q");
    const acq::SimpleLabel s = c.label("std");
    benchmark::DoNotOptimize(
        acq::hom_basis(c, s, acq::ObjectWord::repeat(s, static_cast<std::size_t>(state.range(0))),
                       method));
  }
}
BENCHMARK(BM_HomBasis)
    ->ArgsProduct({{2, 3, 4, 5}, {static_cast<long>(acq::HomMethod::direct),
                                  static_cast<long>(acq::HomMethod::fusion_tree)}})
    ->Unit(benchmark::kMillisecond);

void BM_Circulator(benchmark::State& state) {
  const acq::Category c = acq::load_category("rep-s3-q");
  const acq::SimpleLabel s = c.label("std");
  for (auto _ : state) benchmark::DoNotOptimize(acq::circulator_power(c, s, s, state.range(0)));
}
BENCHMARK(BM_Circulator)->Arg(1)->Arg(8)->Arg(-8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
