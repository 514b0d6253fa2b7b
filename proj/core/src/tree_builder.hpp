#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "fuzzid3/decision_tree.hpp"

namespace fuzzid3::detail {

// Shared ID3 recursion. The split criterion is the only thing that differs
// between the two learners.
struct GrowContext {
  std::span<const std::size_t> labels;
  std::span<const CrispTerms> terms;
  std::size_t class_count = 0;
  std::size_t term_count = 0;
  // Chooses a feature for the node holding `rows` among `candidates`.
  std::function<SplitChoice(std::span<const std::size_t> rows,
                            std::span<const std::size_t> candidates)>
      select;
  // Optional; fills learner-specific fields of a node's diagnostic.
  std::function<void(std::span<const std::size_t> rows, NodeDiagnostic&)> annotate;
  std::vector<NodeDiagnostic>* diagnostics = nullptr;
};

// Grows a tree over all rows. Stops at pure nodes and when no features remain;
// empty branches become leaves of the parent's majority class.
DecisionTree grow_tree(const GrowContext& ctx);

// Index of the lowest-indexed candidate whose score is within tolerance of
// the best. `maximise` selects the direction.
std::size_t pick_best(std::span<const CandidateScore> scores, bool maximise);

inline constexpr double kScoreTieTolerance = 1e-12;

}  // namespace fuzzid3::detail
