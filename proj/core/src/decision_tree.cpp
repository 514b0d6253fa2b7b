#include "fuzzid3/decision_tree.hpp"

#include <algorithm>
#include <string>

#include "fuzzid3/error.hpp"

namespace fuzzid3 {

CrispTerms crispify(const FuzzyVector& v) {
  if (v.blocks() != kFeatureCount) {
    throw InvalidArgument("fuzzy vector must hold one block per feature");
  }
  CrispTerms terms{};
  for (std::size_t f = 0; f < kFeatureCount; ++f) {
    const auto block = v.block(f);
    // max_element returns the first maximum, i.e. the lower term on ties.
    terms[f] = static_cast<std::size_t>(std::max_element(block.begin(), block.end()) - block.begin());
  }
  return terms;
}

CrispTerms crispify(const Instance& inst, const PartitionSet& partitions) {
  return crispify(fuzzify(inst, partitions));
}

DecisionTree DecisionTree::leaf(std::size_t label, std::size_t support) {
  DecisionTree t;
  t.value_ = Leaf{label, support};
  return t;
}

DecisionTree DecisionTree::node(std::size_t feature, std::size_t majority, std::size_t support,
                                std::vector<DecisionTree> children) {
  DecisionTree t;
  t.value_ = Node{feature, majority, support, std::move(children)};
  return t;
}

std::size_t DecisionTree::depth() const {
  if (is_leaf()) return 0;
  std::size_t deepest = 0;
  for (const auto& child : as_node().children) deepest = std::max(deepest, child.depth());
  return deepest + 1;
}

std::size_t DecisionTree::leaf_count() const {
  if (is_leaf()) return 1;
  std::size_t n = 0;
  for (const auto& child : as_node().children) n += child.leaf_count();
  return n;
}

std::size_t DecisionTree::support() const {
  return is_leaf() ? as_leaf().support : as_node().support;
}

namespace {

bool well_formed_from(const DecisionTree& t, std::size_t terms, std::vector<bool>& used) {
  if (t.is_leaf()) return true;
  const auto& n = t.as_node();
  if (n.feature >= used.size() || used[n.feature] || n.children.size() != terms) return false;
  used[n.feature] = true;
  bool ok = true;
  for (const auto& child : n.children) ok = ok && well_formed_from(child, terms, used);
  used[n.feature] = false;
  return ok;
}

}  // namespace

bool DecisionTree::well_formed(std::size_t terms) const {
  std::vector<bool> used(kFeatureCount, false);
  return well_formed_from(*this, terms, used);
}

bool operator==(const DecisionTree& lhs, const DecisionTree& rhs) {
  if (lhs.is_leaf() != rhs.is_leaf()) return false;
  if (lhs.is_leaf()) {
    return lhs.as_leaf().label == rhs.as_leaf().label &&
           lhs.as_leaf().support == rhs.as_leaf().support;
  }
  const auto& a = lhs.as_node();
  const auto& b = rhs.as_node();
  return a.feature == b.feature && a.majority == b.majority && a.support == b.support &&
         a.children == b.children;
}

std::size_t predict(const DecisionTree& tree, const CrispTerms& terms) {
  const DecisionTree* at = &tree;
  while (!at->is_leaf()) {
    const auto& n = at->as_node();
    const auto term = terms[n.feature];
    if (term >= n.children.size()) return n.majority;
    at = &n.children[term];
  }
  return at->as_leaf().label;
}

std::size_t predict(const DecisionTree& tree, const Instance& inst, const PartitionSet& partitions) {
  return predict(tree, crispify(inst, partitions));
}

namespace {

std::string class_name(std::span<const std::string> names, std::size_t label) {
  return label < names.size() ? names[label] : std::to_string(label);
}

}  // namespace

nlohmann::json to_json(const DecisionTree& tree, std::span<const std::string> class_names) {
  if (tree.is_leaf()) {
    const auto& leaf = tree.as_leaf();
    return {{"class", class_name(class_names, leaf.label)}, {"support", leaf.support}};
  }
  const auto& n = tree.as_node();
  nlohmann::json children = nlohmann::json::object();
  for (std::size_t term = 0; term < n.children.size(); ++term) {
    children[std::to_string(term)] = to_json(n.children[term], class_names);
  }
  return {{"feature", n.feature},
          {"feature_name", std::string(kFeatureNames[n.feature])},
          {"support", n.support},
          {"majority", class_name(class_names, n.majority)},
          {"children", std::move(children)}};
}

nlohmann::json to_json(const NodeDiagnostic& diag, std::span<const std::string> class_names) {
  nlohmann::json path = nlohmann::json::array();
  for (const auto& [feature, term] : diag.path) path.push_back({{"feature", feature}, {"term", term}});
  nlohmann::json scores = nlohmann::json::array();
  for (const auto& s : diag.choice.scores) scores.push_back({{"feature", s.feature}, {"score", s.score}});
  nlohmann::json counts = nlohmann::json::object();
  for (std::size_t c = 0; c < diag.class_counts.size(); ++c) {
    counts[class_name(class_names, c)] = diag.class_counts[c];
  }
  nlohmann::json out{{"path", std::move(path)},
                     {"class_counts", std::move(counts)},
                     {"chosen_feature", diag.choice.feature},
                     {"candidate_scores", std::move(scores)}};
  if (!diag.prototypes.empty()) {
    nlohmann::json protos = nlohmann::json::array();
    for (const auto& [label, avg] : diag.prototypes) {
      protos.push_back({{"class", class_name(class_names, label)},
                        {"average", std::vector<double>(avg.degrees().begin(), avg.degrees().end())}});
    }
    out["prototypes"] = std::move(protos);
  }
  return out;
}

}  // namespace fuzzid3
