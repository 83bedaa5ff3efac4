#include <benchmark/benchmark.h>

#include "sto/bounds.hpp"
#include "sto/schedules.hpp"
#include "sto/statevec.hpp"
#include "sto/subspace.hpp"

namespace {

void BM_ScheduleSimulation(benchmark::State& state) {
  sto::Index n = state.range(0);
  sto::ProblemInstance instance(n, 16, sto::Rational(10), sto::Rational(1), 0.1);
  sto::HybridPlan plan = sto::optimize_hybrid(instance);
  sto::OracleAssignment assignment = sto::random_assignment(n, 16, true, 1);
  for (auto _ : state) {
    auto result = sto::run_schedule(instance, assignment, plan.plan.schedule);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_ScheduleSimulation)->Arg(1024)->Arg(4096)->Arg(16384);

void BM_HybridOptimizer(benchmark::State& state) {
  sto::ProblemInstance instance(1 << state.range(0), 256, sto::Rational(20), sto::Rational(1),
                                0.1);
  for (auto _ : state) {
    auto shape = sto::optimize_hybrid_shape(instance);
    benchmark::DoNotOptimize(shape);
  }
}
BENCHMARK(BM_HybridOptimizer)->Arg(16)->Arg(20)->Arg(24);

void BM_AdversaryNorms(benchmark::State& state) {
  for (auto _ : state) {
    auto report = sto::adversary_matrices(state.range(0), state.range(0) / 2,
                                          sto::AdversaryConstruction::PairedRemoval);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_AdversaryNorms)->Arg(4)->Arg(6)->Arg(8);

void BM_PolarAudit(benchmark::State& state) {
  sto::ProblemInstance instance(1000000, 1000, sto::Rational(20), sto::Rational(1), 0.1);
  sto::HybridPlan plan = sto::optimize_hybrid(instance);
  sto::OracleAssignment assignment = sto::random_assignment(1000000, 1000, true, 1);
  for (auto _ : state) {
    auto trace = sto::audit_schedule(instance, assignment, plan.plan.schedule);
    benchmark::DoNotOptimize(trace);
  }
}
BENCHMARK(BM_PolarAudit);

}  // namespace

BENCHMARK_MAIN();
