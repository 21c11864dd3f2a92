#include <benchmark/benchmark.h>

#include "liftcat/fincat/kernels.hpp"
#include "liftcat/models/sets.hpp"

using namespace liftcat;

namespace {

const FunctionModel& finset() {
  static FunctionModel m = build_finset({0, 1, 2, 3, 4});
  return m;
}

const FunctionModel& pfn() {
  static FunctionModel m = build_pfn({0, 1, 2, 3});
  return m;
}

Exec exec_of(const benchmark::State& s) { return s.range(0) ? Exec::parallel : Exec::serial; }

void BM_Assoc(benchmark::State& s, const FunctionModel& (*model)()) {
  const FinCategory& c = *model().cat;
  for (auto _ : s) benchmark::DoNotOptimize(find_assoc_violations(c, exec_of(s)));
  s.SetLabel(s.range(0) ? "parallel" : "serial");
}

void BM_Pullback(benchmark::State& s) {
  const FunctionModel& m = finset();
  const FinCategory& c = *m.cat;
  ObjId one = m.object_of_size(1), two = m.object_of_size(2);
  ArrId bang = c.hom(two, one).front();
  Square sq{bang, bang, c.id(one), c.id(one)};
  ObjId z = m.object_of_size(4);
  for (auto _ : s) benchmark::DoNotOptimize(tally_pullback_cones(c, sq, z, exec_of(s)));
  s.SetLabel(s.range(0) ? "parallel" : "serial");
}

void BM_Mediators(benchmark::State& s, const FunctionModel& (*model)()) {
  const FunctionModel& m = model();
  const FinCategory& c = *m.cat;
  const Coproduct* w = c.coproduct(m.object_of_size(1), m.object_of_size(2));
  ObjId z = m.object_of_size(3);
  for (auto _ : s) benchmark::DoNotOptimize(tally_mediators(c, *w, z, exec_of(s)));
  s.SetLabel(s.range(0) ? "parallel" : "serial");
}

}  // namespace

BENCHMARK_CAPTURE(BM_Assoc, finset, finset)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Assoc, pfn, pfn)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Pullback)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_Mediators, finset, finset)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_Mediators, pfn, pfn)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
