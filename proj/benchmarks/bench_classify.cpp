#include <benchmark/benchmark.h>

#include "trifold/pipeline.hpp"

using namespace trifold;

namespace {

const Catalog& catalog() {
  static Catalog cat = Catalog::with_builtins();
  return cat;
}

NmaxTable nmax() { return NmaxTable::load(std::string(TRIFOLD_DATA_DIR) + "/nmax.tsv"); }

void BM_GeneratingVectors(benchmark::State& state) {
  const auto& cat = catalog();
  const GroupTable* d4 = nullptr;
  for (const auto& e : cat.all())
    if (e.name == "D4") d4 = &e.group;
  auto type = BranchType::parse("[0;2^5]");
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_generating_vectors(*d4, type));
  }
}
BENCHMARK(BM_GeneratingVectors);

void BM_CharacterTable(benchmark::State& state) {
  const auto& cat = catalog();
  const GroupTable* g = nullptr;
  for (const auto& e : cat.all())
    if (e.name == "2O") g = &e.group;
  for (auto _ : state) {
    auto t = character_table(*g);
    benchmark::DoNotOptimize(t.degrees.size());
  }
}
BENCHMARK(BM_CharacterTable);

void BM_AdmissibleData(benchmark::State& state) {
  auto table = nmax();
  for (auto _ : state) {
    auto d = admissible_numerical_data(-1, MixedCase::index2, table);
    benchmark::DoNotOptimize(d.size());
  }
}
BENCHMARK(BM_AdmissibleData);

void BM_ClassifyOrder16(benchmark::State& state) {
  const auto& cat = catalog();
  auto table = nmax();
  for (auto _ : state) {
    auto r = classify(-1, MixedCase::index2, 16, 16, cat, table,
                      static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(r.rows.size());
  }
}
BENCHMARK(BM_ClassifyOrder16)->Arg(1)->Arg(2);

void BM_ClassifyIndex3(benchmark::State& state) {
  const auto& cat = catalog();
  auto table = nmax();
  for (auto _ : state) {
    auto r = classify(-1, MixedCase::index3, 1, 100, cat, table, 1);
    benchmark::DoNotOptimize(r.rows.size());
  }
}
BENCHMARK(BM_ClassifyIndex3);

}  // namespace

BENCHMARK_MAIN();
