// Timings for the hot paths behind the acceptance limits.

#include "artifact/caseperiods.hpp"
#include "artifact/ggpcheck.hpp"
#include "artifact/lgamma.hpp"
#include "artifact/rootsys.hpp"
#include "artifact/rotation.hpp"
#include "artifact/torsion.hpp"

#include <benchmark/benchmark.h>

using namespace artifact;

static void BM_Table1Row(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    for (CaseKind k : kAllCases) benchmark::DoNotOptimize(lgamma::table1_row(k, n));
}
BENCHMARK(BM_Table1Row)->DenseRange(1, 8);

static void BM_Condensate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    for (CaseKind k : kAllCases) {
      period::CaseModel model(k, n);
      benchmark::DoNotOptimize(period::condensate(model));
    }
}
BENCHMARK(BM_Condensate)->Arg(1)->Arg(4)->Arg(8)->Arg(12);

static void BM_ChamberEnumeration(benchmark::State& state) {
  auto g = rootsys::parse_group("SL(5)/R");
  for (auto _ : state) benchmark::DoNotOptimize(rootsys::chamber_enumeration(g));
}
BENCHMARK(BM_ChamberEnumeration);

static void BM_DeriveAll(benchmark::State& state) {
  auto ledger = torsion::VolumeLedger::standard();
  for (auto _ : state) benchmark::DoNotOptimize(ledger.derive_all());
}
BENCHMARK(BM_DeriveAll);

static void BM_RotationCheck(benchmark::State& state) {
  auto inst = rotation::make_instance(7);
  for (auto _ : state) benchmark::DoNotOptimize(rotation::rotation_check(inst.v1, inst.v2, inst.sigma));
}
BENCHMARK(BM_RotationCheck);

static void BM_VerifyAll(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ggp::verify_all(8, {}));
}
BENCHMARK(BM_VerifyAll)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
