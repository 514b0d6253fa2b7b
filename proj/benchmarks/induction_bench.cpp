#include <benchmark/benchmark.h>

#include "fuzzid3/crisp_id3.hpp"
#include "fuzzid3/dataset.hpp"
#include "fuzzid3/evaluation.hpp"
#include "fuzzid3/fuzzifier.hpp"
#include "fuzzid3/fuzzy_id3.hpp"

namespace {

const fuzzid3::Dataset& iris() {
  static const fuzzid3::Dataset d = fuzzid3::load_iris(FUZZID3_IRIS_CSV);
  return d;
}

const fuzzid3::FoldSplit& versicolor_virginica_fold() {
  static const auto splits = fuzzid3::five_fold_splits(fuzzid3::pairwise_subset(iris(), 1, 2));
  return splits.front();
}

static void BM_Fuzzify(benchmark::State& state) {
  const auto ps = fuzzid3::fit_partitions(iris(), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto vs = fuzzid3::fuzzify(iris(), ps);
    benchmark::DoNotOptimize(vs);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(iris().size()));
}
BENCHMARK(BM_Fuzzify)->Arg(2)->Arg(3)->Arg(6);

static void BM_BuildId3(benchmark::State& state) {
  const auto& fold = versicolor_virginica_fold();
  const auto ps = fuzzid3::fit_partitions(fold.train, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto tree = fuzzid3::build_id3(fold.train, ps);
    benchmark::DoNotOptimize(tree);
  }
}
BENCHMARK(BM_BuildId3)->Arg(2)->Arg(3)->Arg(6);

static void BM_BuildFuzzyTree(benchmark::State& state) {
  const auto& fold = versicolor_virginica_fold();
  const auto ps = fuzzid3::fit_partitions(fold.train, static_cast<std::size_t>(state.range(0)));
  fuzzid3::FuzzyTreeOptions options;
  options.prototype_scope =
      state.range(1) == 0 ? fuzzid3::PrototypeScope::per_node : fuzzid3::PrototypeScope::global;
  for (auto _ : state) {
    auto tree = fuzzid3::build_fuzzy_tree(fold.train, ps, options);
    benchmark::DoNotOptimize(tree);
  }
}
BENCHMARK(BM_BuildFuzzyTree)->ArgsProduct({{2, 3, 6}, {0, 1}});

static void BM_CompareMethodsAllPairs(benchmark::State& state) {
  for (auto _ : state) {
    for (const auto pair : fuzzid3::all_class_pairs(iris())) {
      auto cmp = fuzzid3::compare_methods(iris(), pair);
      benchmark::DoNotOptimize(cmp);
    }
  }
}
BENCHMARK(BM_CompareMethodsAllPairs)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
