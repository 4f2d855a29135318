#include <benchmark/benchmark.h>

#include "ryd/nonzero.hpp"
#include "ryd/oracle.hpp"
#include "ryd/table.hpp"

using namespace ryd;

namespace {

void BM_LagrangianProduct(benchmark::State& state) {
  const Family f = Family::make(FamilyKind::LG, 4);
  const Shape a = parse_shape(f, "3,1|off"), b = parse_shape(f, "3,2|off");
  for (auto _ : state) benchmark::DoNotOptimize(multiply(a, b));
}
BENCHMARK(BM_LagrangianProduct);

void BM_StarWorkedExample(benchmark::State& state) {
  const Family f = Family::make(FamilyKind::OGeven, 6);
  const Shape a = parse_shape(f, "4,1|off|up"), b = parse_shape(f, "4,2|off|down");
  for (auto _ : state) benchmark::DoNotOptimize(multiply(a, b));
}
BENCHMARK(BM_StarWorkedExample);

void BM_RuleTable(benchmark::State& state, FamilyKind k) {
  const Family f = Family::make(k, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(StructTable::from_rules(f));
  state.counters["shapes"] = f.count();
}
BENCHMARK_CAPTURE(BM_RuleTable, OGeven, FamilyKind::OGeven)->DenseRange(4, 8)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_RuleTable, OGodd, FamilyKind::OGodd)->DenseRange(3, 8)->Unit(benchmark::kMillisecond);

void BM_OracleTable(benchmark::State& state, FamilyKind k) {
  const Family f = Family::make(k, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(StructTable::from_oracle(f));
}
BENCHMARK_CAPTURE(BM_OracleTable, OGeven, FamilyKind::OGeven)->DenseRange(4, 5)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_OracleTable, Flag, FamilyKind::Flag)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_Associativity(benchmark::State& state) {
  const StructTable t = StructTable::from_rules(Family::make(FamilyKind::OGeven, static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(verify_associativity(t));
}
BENCHMARK(BM_Associativity)->DenseRange(4, 5)->Unit(benchmark::kMillisecond);

void BM_Polytope(benchmark::State& state) {
  const StructTable t = StructTable::from_rules(Family::make(FamilyKind::OGodd, static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(verify_polytope_description(t));
}
BENCHMARK(BM_Polytope)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
