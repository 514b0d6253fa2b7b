#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzid3/dataset.hpp"
#include "fuzzid3/decision_tree.hpp"
#include "fuzzid3/fuzzifier.hpp"
#include "fuzzid3/fuzzy_id3.hpp"

namespace fuzzid3 {

enum class Method { id3, fuzzy };

std::string_view to_string(Method method);
// Accepts "id3" and "fuzzy"; throws InvalidArgument otherwise.
Method parse_method(std::string_view name);

// Labels of a two-class comparison. `first` plays the role of group 1.
struct ClassPair {
  std::size_t first = 0;
  std::size_t second = 1;
};

// Pairwise confusion counts:
//   a: predicted first,  truly first
//   b: predicted first,  truly second
//   c: predicted second, truly first
//   d: predicted second, truly second
struct ConfusionRecord {
  std::size_t fold_index = 0;
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t c = 0;
  std::size_t d = 0;

  std::size_t total() const noexcept { return a + b + c + d; }
  friend bool operator==(const ConfusionRecord&, const ConfusionRecord&) = default;
};

// Throws InvalidArgument on a length mismatch or a label outside the pair.
ConfusionRecord confusion_pairwise(std::span<const std::size_t> predicted,
                                   std::span<const std::size_t> truth, ClassPair pair,
                                   std::size_t fold_index = 0);

// (a + d) / total. Throws InvalidArgument for an empty record.
double accuracy(const ConfusionRecord& r);
// (b + c) / total.
double error_rate(const ConfusionRecord& r);
// Mean of per-record accuracies, summed in record order.
double mean_accuracy(std::span<const ConfusionRecord> records);

struct ExperimentConfig {
  std::size_t k = 2;
  std::size_t fold_size = kDefaultFoldSize;
  FuzzyTreeOptions fuzzy;
  bool collect_diagnostics = false;
};

struct FoldOutcome {
  ConfusionRecord record;
  PartitionSet partitions;
  // Positions of the test instances within the pairwise dataset.
  std::vector<std::size_t> test_rows;
  std::vector<std::size_t> predictions;
  DecisionTree tree;
  std::vector<NodeDiagnostic> diagnostics;
};

struct ExperimentResult {
  Method method = Method::id3;
  // Class names of the pair, group 1 first.
  std::array<std::string, 2> class_pair;
  // 1-based group numbers of the pair within the source dataset.
  std::array<std::size_t, 2> groups{};
  std::vector<ConfusionRecord> records;
  double mean_accuracy = 0.0;
  std::vector<FoldOutcome> folds;
};

// Pairwise five-fold cross-validation of one learner. For every fold the
// partitions are fitted on the training part only. `pair` holds label indices
// of `data`.
ExperimentResult run_experiment(const Dataset& data, Method method, ClassPair pair,
                                const ExperimentConfig& config = {});

struct MethodComparison {
  ExperimentResult id3;
  ExperimentResult fuzzy;
  // fuzzy accuracy - id3 accuracy, per fold.
  std::vector<double> deltas;
  bool identical_folds = false;
};

MethodComparison compare_methods(const Dataset& data, ClassPair pair,
                                 const ExperimentConfig& config = {});

// All unordered pairs (i, j), i < j, over the dataset's classes.
std::vector<ClassPair> all_class_pairs(const Dataset& data);

}  // namespace fuzzid3
