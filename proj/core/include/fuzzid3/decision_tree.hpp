#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "fuzzid3/dataset.hpp"
#include "fuzzid3/fuzzifier.hpp"

namespace fuzzid3 {

// Linguistic term of maximum membership in each feature block; ties go to
// the lower term index. Both tree learners route instances this way.
using CrispTerms = std::array<std::size_t, kFeatureCount>;
CrispTerms crispify(const FuzzyVector& v);
CrispTerms crispify(const Instance& inst, const PartitionSet& partitions);

class DecisionTree;

struct TreeLeaf {
  std::size_t label = 0;
  std::size_t support = 0;
};

struct TreeNode {
  std::size_t feature = 0;
  std::size_t majority = 0;
  std::size_t support = 0;
  std::vector<DecisionTree> children;
};

// A tree over linguistic terms. Internal nodes split on one feature and have
// one child per term; leaves carry a class label.
class DecisionTree {
 public:
  using Leaf = TreeLeaf;
  using Node = TreeNode;

  DecisionTree() = default;
  static DecisionTree leaf(std::size_t label, std::size_t support);
  static DecisionTree node(std::size_t feature, std::size_t majority, std::size_t support,
                           std::vector<DecisionTree> children);

  bool is_leaf() const noexcept { return std::holds_alternative<Leaf>(value_); }
  const Leaf& as_leaf() const { return std::get<Leaf>(value_); }
  const Node& as_node() const { return std::get<Node>(value_); }

  // Number of internal nodes on the longest root-to-leaf path.
  std::size_t depth() const;
  std::size_t leaf_count() const;
  std::size_t support() const;

  // True when no feature repeats along any root-to-leaf path and every node
  // has exactly `terms` children.
  bool well_formed(std::size_t terms) const;

  friend bool operator==(const DecisionTree&, const DecisionTree&);

 private:
  std::variant<Leaf, Node> value_;
};

std::size_t predict(const DecisionTree& tree, const CrispTerms& terms);
std::size_t predict(const DecisionTree& tree, const Instance& inst, const PartitionSet& partitions);

// Per-candidate score of one split decision. For ID3 the score is the
// information gain (maximised); for the fuzzy learner it is the weighted
// branch uncertainty (minimised).
struct CandidateScore {
  std::size_t feature = 0;
  double score = 0.0;
};

struct SplitChoice {
  std::size_t feature = 0;
  std::vector<CandidateScore> scores;
};

// Record of one internal node, captured when diagnostics are requested.
struct NodeDiagnostic {
  // (feature, term) pairs from the root down to this node.
  std::vector<std::pair<std::size_t, std::size_t>> path;
  std::vector<std::size_t> class_counts;
  SplitChoice choice;
  // Class-average fuzzy vectors at this node (fuzzy learner only).
  std::vector<std::pair<std::size_t, FuzzyVector>> prototypes;
};

// Nested {"feature", "children": {"<term>": ...}} objects; leaves are
// {"class", "support"}.
nlohmann::json to_json(const DecisionTree& tree, std::span<const std::string> class_names);
nlohmann::json to_json(const NodeDiagnostic& diag, std::span<const std::string> class_names);

}  // namespace fuzzid3
