#include "fuzzid3/evaluation.hpp"

#include "fuzzid3/crisp_id3.hpp"
#include "fuzzid3/error.hpp"

namespace fuzzid3 {

std::string_view to_string(Method method) {
  switch (method) {
    case Method::id3:
      return "id3";
    case Method::fuzzy:
      return "fuzzy";
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  if (name == "id3") return Method::id3;
  if (name == "fuzzy") return Method::fuzzy;
  throw InvalidArgument("unknown method '" + std::string(name) + "'");
}

ConfusionRecord confusion_pairwise(std::span<const std::size_t> predicted,
                                   std::span<const std::size_t> truth, ClassPair pair,
                                   std::size_t fold_index) {
  if (predicted.size() != truth.size()) {
    throw InvalidArgument("predicted and true label lists differ in length");
  }
  ConfusionRecord r;
  r.fold_index = fold_index;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    const auto p = predicted[i];
    const auto t = truth[i];
    const bool known = (p == pair.first || p == pair.second) && (t == pair.first || t == pair.second);
    if (!known) throw InvalidArgument("label outside the class pair");
    if (p == pair.first) {
      ++(t == pair.first ? r.a : r.b);
    } else {
      ++(t == pair.first ? r.c : r.d);
    }
  }
  return r;
}

double accuracy(const ConfusionRecord& r) {
  if (r.total() == 0) throw InvalidArgument("accuracy of an empty confusion record");
  return static_cast<double>(r.a + r.d) / static_cast<double>(r.total());
}

double error_rate(const ConfusionRecord& r) {
  if (r.total() == 0) throw InvalidArgument("error rate of an empty confusion record");
  return static_cast<double>(r.b + r.c) / static_cast<double>(r.total());
}

double mean_accuracy(std::span<const ConfusionRecord> records) {
  if (records.empty()) throw InvalidArgument("mean accuracy of no records");
  double sum = 0.0;
  for (const auto& r : records) sum += accuracy(r);
  return sum / static_cast<double>(records.size());
}

ExperimentResult run_experiment(const Dataset& data, Method method, ClassPair pair,
                                const ExperimentConfig& config) {
  const auto subset = pairwise_subset(data, pair.first, pair.second);
  const auto splits = five_fold_splits(subset, config.fold_size);

  ExperimentResult result;
  result.method = method;
  result.class_pair = {subset.class_names()[0], subset.class_names()[1]};
  result.groups = {pair.first + 1, pair.second + 1};

  for (const auto& split : splits) {
    FoldOutcome fold;
    fold.partitions = fit_partitions(split.train, config.k);
    auto* diagnostics = config.collect_diagnostics ? &fold.diagnostics : nullptr;
    fold.tree = method == Method::id3
                    ? build_id3(split.train, fold.partitions, diagnostics)
                    : build_fuzzy_tree(split.train, fold.partitions, config.fuzzy, diagnostics);
    fold.predictions.reserve(split.test.size());
    for (const auto& inst : split.test.instances()) {
      fold.predictions.push_back(predict(fold.tree, inst, fold.partitions));
    }
    const auto truth = split.test.labels();
    fold.record = confusion_pairwise(fold.predictions, truth, ClassPair{0, 1}, split.fold_index);
    fold.test_rows = split.test_rows;
    result.records.push_back(fold.record);
    result.folds.push_back(std::move(fold));
  }
  result.mean_accuracy = mean_accuracy(result.records);
  return result;
}

MethodComparison compare_methods(const Dataset& data, ClassPair pair,
                                 const ExperimentConfig& config) {
  MethodComparison out;
  out.id3 = run_experiment(data, Method::id3, pair, config);
  out.fuzzy = run_experiment(data, Method::fuzzy, pair, config);
  out.identical_folds = out.id3.folds.size() == out.fuzzy.folds.size();
  for (std::size_t f = 0; f < out.id3.folds.size() && out.identical_folds; ++f) {
    out.identical_folds = out.id3.folds[f].test_rows == out.fuzzy.folds[f].test_rows;
  }
  for (std::size_t f = 0; f < out.id3.records.size(); ++f) {
    out.deltas.push_back(accuracy(out.fuzzy.records[f]) - accuracy(out.id3.records[f]));
  }
  return out;
}

std::vector<ClassPair> all_class_pairs(const Dataset& data) {
  std::vector<ClassPair> pairs;
  for (std::size_t i = 0; i < data.class_count(); ++i) {
    for (std::size_t j = i + 1; j < data.class_count(); ++j) pairs.push_back({i, j});
  }
  return pairs;
}

}  // namespace fuzzid3
