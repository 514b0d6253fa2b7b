#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fuzzid3/dataset.hpp"
#include "fuzzid3/decision_tree.hpp"
#include "fuzzid3/fuzzifier.hpp"

namespace fuzzid3 {

struct ClassDistribution {
  std::vector<std::size_t> counts;

  std::size_t total() const noexcept;
  // Lowest class index among the most frequent classes.
  std::size_t majority() const noexcept;
  bool pure() const noexcept;
};

ClassDistribution class_distribution(std::span<const std::size_t> labels,
                                     std::size_t class_count);

// Shannon entropy in bits. Throws InvalidArgument for an empty distribution.
double shannon_entropy(const ClassDistribution& dist);

// H(parent) minus the size-weighted entropy of the children; empty children
// contribute nothing. Throws InvalidArgument when the children do not add up
// to the parent.
double information_gain(const ClassDistribution& parent,
                        std::span<const ClassDistribution> children);

// Picks the candidate feature of maximum information gain when the node's
// instances are split by their crisp term. Ties resolve to the lowest
// feature index.
SplitChoice select_attribute_id3(std::span<const CrispTerms> terms,
                                 std::span<const std::size_t> labels, std::size_t class_count,
                                 std::size_t term_count, std::span<const std::size_t> candidates);

DecisionTree build_id3(const Dataset& train, const PartitionSet& partitions,
                       std::vector<NodeDiagnostic>* diagnostics = nullptr);

}  // namespace fuzzid3
