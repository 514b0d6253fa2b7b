#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fuzzid3/dataset.hpp"
#include "fuzzid3/decision_tree.hpp"
#include "fuzzid3/fuzzifier.hpp"

namespace fuzzid3 {

// Mean fuzzy vector of one class's instances.
struct ClassPrototype {
  std::size_t label = 0;
  FuzzyVector average;
};

// A value in (0, 1]; 1 means the instance sits exactly on its prototype.
class CertaintyScore {
 public:
  // Throws InvalidArgument outside (0, 1].
  explicit CertaintyScore(double value);
  double value() const noexcept { return value_; }

 private:
  double value_;
};

// Euclidean distance. Throws InvalidArgument on a dimension mismatch.
double distance(const FuzzyVector& f, const FuzzyVector& average);

// exp(-z). Values too small to represent are held at the smallest positive
// double. Throws InvalidArgument for negative or non-finite z.
CertaintyScore certainty(double z);
// 1 / (1 + z), kept for ablation runs.
CertaintyScore certainty_reciprocal(double z);

using CertaintyFunction = CertaintyScore (*)(double);

enum class PrototypeScope {
  // Prototypes are recomputed from each candidate branch's own instances.
  per_node,
  // Prototypes are the class averages of the whole training set.
  global,
};

struct FuzzyTreeOptions {
  PrototypeScope prototype_scope = PrototypeScope::per_node;
  CertaintyFunction certainty = &fuzzid3::certainty;
};

// One prototype per class present in `labels`, ordered by label.
std::vector<ClassPrototype> class_prototypes(std::span<const FuzzyVector> vectors,
                                             std::span<const std::size_t> labels);

// 1 - mean certainty(distance(f_i, prototype of class_i)). Zero for an empty
// subset. Throws InvalidArgument when a present class has no prototype.
double subset_uncertainty(std::span<const FuzzyVector> vectors,
                          std::span<const std::size_t> labels,
                          std::span<const ClassPrototype> prototypes,
                          CertaintyFunction certainty_fn = &certainty);

// Scores each candidate by the size-weighted uncertainty of the branches it
// induces (argmax-membership routing) and returns the minimiser, ties to the
// lowest index. With `fixed_prototypes` empty, each branch computes its own
// prototypes; otherwise the given prototypes are used everywhere.
SplitChoice select_attribute_fuzzy(std::span<const FuzzyVector> vectors,
                                   std::span<const std::size_t> labels,
                                   std::span<const std::size_t> candidates,
                                   const FuzzyTreeOptions& options = {},
                                   std::span<const ClassPrototype> fixed_prototypes = {});

DecisionTree build_fuzzy_tree(const Dataset& train, const PartitionSet& partitions,
                              const FuzzyTreeOptions& options = {},
                              std::vector<NodeDiagnostic>* diagnostics = nullptr);

// Same routing as the crisp learner.
inline std::size_t predict_fuzzy(const DecisionTree& tree, const Instance& inst,
                                 const PartitionSet& partitions) {
  return predict(tree, inst, partitions);
}

}  // namespace fuzzid3
