#include "fuzzid3/crisp_id3.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fuzzid3/error.hpp"
#include "tree_builder.hpp"

namespace fuzzid3 {

std::size_t ClassDistribution::total() const noexcept {
  return std::accumulate(counts.begin(), counts.end(), std::size_t{0});
}

std::size_t ClassDistribution::majority() const noexcept {
  if (counts.empty()) return 0;
  return static_cast<std::size_t>(std::max_element(counts.begin(), counts.end()) - counts.begin());
}

bool ClassDistribution::pure() const noexcept {
  return std::count_if(counts.begin(), counts.end(), [](auto n) { return n > 0; }) == 1;
}

ClassDistribution class_distribution(std::span<const std::size_t> labels,
                                     std::size_t class_count) {
  ClassDistribution dist{std::vector<std::size_t>(class_count, 0)};
  for (auto label : labels) {
    if (label >= class_count) throw InvalidArgument("label outside the class range");
    ++dist.counts[label];
  }
  return dist;
}

double shannon_entropy(const ClassDistribution& dist) {
  const auto total = dist.total();
  if (total == 0) throw InvalidArgument("entropy of an empty distribution");
  double h = 0.0;
  for (auto n : dist.counts) {
    if (n == 0) continue;
    const double p = static_cast<double>(n) / static_cast<double>(total);
    h -= p * std::log2(p);
  }
  return std::max(h, 0.0);
}

double information_gain(const ClassDistribution& parent,
                        std::span<const ClassDistribution> children) {
  const auto total = parent.total();
  std::vector<std::size_t> summed(parent.counts.size(), 0);
  for (const auto& child : children) {
    if (child.counts.size() != parent.counts.size()) {
      throw InvalidArgument("child distribution has a different class count");
    }
    for (std::size_t c = 0; c < summed.size(); ++c) summed[c] += child.counts[c];
  }
  if (summed != parent.counts) {
    throw InvalidArgument("child distributions do not add up to the parent");
  }
  double residual = 0.0;
  for (const auto& child : children) {
    const auto n = child.total();
    if (n == 0) continue;
    residual += static_cast<double>(n) / static_cast<double>(total) * shannon_entropy(child);
  }
  return shannon_entropy(parent) - residual;
}

SplitChoice select_attribute_id3(std::span<const CrispTerms> terms,
                                 std::span<const std::size_t> labels, std::size_t class_count,
                                 std::size_t term_count, std::span<const std::size_t> candidates) {
  if (candidates.empty()) throw InvalidArgument("no candidate features");
  if (terms.size() != labels.size() || labels.empty()) {
    throw InvalidArgument("split selection needs one term row per label");
  }
  std::vector<std::size_t> ordered(candidates.begin(), candidates.end());
  std::sort(ordered.begin(), ordered.end());

  const auto parent = class_distribution(labels, class_count);
  SplitChoice choice;
  for (auto feature : ordered) {
    std::vector<ClassDistribution> children(
        term_count, ClassDistribution{std::vector<std::size_t>(class_count, 0)});
    for (std::size_t i = 0; i < labels.size(); ++i) {
      const auto term = terms[i][feature];
      if (term >= term_count) throw InvalidArgument("term index outside the partition");
      ++children[term].counts[labels[i]];
    }
    choice.scores.push_back({feature, information_gain(parent, children)});
  }
  choice.feature = detail::pick_best(choice.scores, /*maximise=*/true);
  return choice;
}

DecisionTree build_id3(const Dataset& train, const PartitionSet& partitions,
                       std::vector<NodeDiagnostic>* diagnostics) {
  if (train.empty()) throw InvalidArgument("cannot build a tree from an empty training set");
  const auto labels = train.labels();
  std::vector<CrispTerms> terms;
  terms.reserve(train.size());
  for (const auto& inst : train.instances()) terms.push_back(crispify(inst, partitions));
  const auto term_count = partitions.front().terms();

  detail::GrowContext ctx;
  ctx.labels = labels;
  ctx.terms = terms;
  ctx.class_count = train.class_count();
  ctx.term_count = term_count;
  ctx.diagnostics = diagnostics;
  ctx.select = [&](std::span<const std::size_t> rows, std::span<const std::size_t> candidates) {
    std::vector<CrispTerms> node_terms;
    std::vector<std::size_t> node_labels;
    node_terms.reserve(rows.size());
    node_labels.reserve(rows.size());
    for (auto r : rows) {
      node_terms.push_back(terms[r]);
      node_labels.push_back(labels[r]);
    }
    return select_attribute_id3(node_terms, node_labels, train.class_count(), term_count,
                                candidates);
  };
  return detail::grow_tree(ctx);
}

}  // namespace fuzzid3
