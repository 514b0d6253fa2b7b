#include "fuzzid3/fuzzy_id3.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fuzzid3/error.hpp"
#include "tree_builder.hpp"

namespace fuzzid3 {

CertaintyScore::CertaintyScore(double value) : value_(value) {
  if (!(value > 0.0 && value <= 1.0)) throw InvalidArgument("certainty must lie in (0, 1]");
}

double distance(const FuzzyVector& f, const FuzzyVector& average) {
  if (f.dimension() != average.dimension()) {
    throw InvalidArgument("distance between fuzzy vectors of different dimensions");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < f.dimension(); ++i) {
    const double diff = f[i] - average[i];
    sum += diff * diff;
  }
  return std::sqrt(sum);
}

namespace {

void check_distance(double z) {
  if (!std::isfinite(z) || z < 0.0) {
    throw InvalidArgument("certainty needs a finite, non-negative distance");
  }
}

}  // namespace

CertaintyScore certainty(double z) {
  check_distance(z);
  return CertaintyScore(std::max(std::exp(-z), std::numeric_limits<double>::denorm_min()));
}

CertaintyScore certainty_reciprocal(double z) {
  check_distance(z);
  return CertaintyScore(std::max(1.0 / (1.0 + z), std::numeric_limits<double>::denorm_min()));
}

std::vector<ClassPrototype> class_prototypes(std::span<const FuzzyVector> vectors,
                                             std::span<const std::size_t> labels) {
  if (vectors.size() != labels.size()) {
    throw InvalidArgument("prototypes need one label per vector");
  }
  std::vector<std::size_t> present(labels.begin(), labels.end());
  std::sort(present.begin(), present.end());
  present.erase(std::unique(present.begin(), present.end()), present.end());

  std::vector<ClassPrototype> out;
  out.reserve(present.size());
  std::vector<FuzzyVector> members;
  for (auto label : present) {
    members.clear();
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == label) members.push_back(vectors[i]);
    }
    out.push_back({label, average_vector(members)});
  }
  return out;
}

double subset_uncertainty(std::span<const FuzzyVector> vectors,
                          std::span<const std::size_t> labels,
                          std::span<const ClassPrototype> prototypes,
                          CertaintyFunction certainty_fn) {
  if (vectors.size() != labels.size()) {
    throw InvalidArgument("uncertainty needs one label per vector");
  }
  if (vectors.empty()) return 0.0;
  double certainty_sum = 0.0;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    const auto it = std::find_if(prototypes.begin(), prototypes.end(),
                                 [&](const ClassPrototype& p) { return p.label == labels[i]; });
    if (it == prototypes.end()) {
      throw InvalidArgument("no prototype for class " + std::to_string(labels[i]));
    }
    certainty_sum += certainty_fn(distance(vectors[i], it->average)).value();
  }
  const double u = 1.0 - certainty_sum / static_cast<double>(vectors.size());
  return std::max(u, 0.0);
}

SplitChoice select_attribute_fuzzy(std::span<const FuzzyVector> vectors,
                                   std::span<const std::size_t> labels,
                                   std::span<const std::size_t> candidates,
                                   const FuzzyTreeOptions& options,
                                   std::span<const ClassPrototype> fixed_prototypes) {
  if (candidates.empty()) throw InvalidArgument("no candidate features");
  if (vectors.size() != labels.size() || vectors.empty()) {
    throw InvalidArgument("split selection needs one fuzzy vector per label");
  }
  std::vector<std::size_t> ordered(candidates.begin(), candidates.end());
  std::sort(ordered.begin(), ordered.end());

  const auto term_count = vectors.front().terms();
  std::vector<CrispTerms> terms;
  terms.reserve(vectors.size());
  for (const auto& v : vectors) terms.push_back(crispify(v));

  const double total = static_cast<double>(vectors.size());
  SplitChoice choice;
  std::vector<FuzzyVector> branch_vectors;
  std::vector<std::size_t> branch_labels;
  for (auto feature : ordered) {
    double score = 0.0;
    for (std::size_t term = 0; term < term_count; ++term) {
      branch_vectors.clear();
      branch_labels.clear();
      for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (terms[i][feature] == term) {
          branch_vectors.push_back(vectors[i]);
          branch_labels.push_back(labels[i]);
        }
      }
      if (branch_vectors.empty()) continue;
      const double u =
          fixed_prototypes.empty()
              ? subset_uncertainty(branch_vectors, branch_labels,
                                   class_prototypes(branch_vectors, branch_labels),
                                   options.certainty)
              : subset_uncertainty(branch_vectors, branch_labels, fixed_prototypes,
                                   options.certainty);
      score += static_cast<double>(branch_vectors.size()) / total * u;
    }
    choice.scores.push_back({feature, score});
  }
  choice.feature = detail::pick_best(choice.scores, /*maximise=*/false);
  return choice;
}

DecisionTree build_fuzzy_tree(const Dataset& train, const PartitionSet& partitions,
                              const FuzzyTreeOptions& options,
                              std::vector<NodeDiagnostic>* diagnostics) {
  if (train.empty()) throw InvalidArgument("cannot build a tree from an empty training set");
  const auto labels = train.labels();
  const auto vectors = fuzzify(train, partitions);
  std::vector<CrispTerms> terms;
  terms.reserve(vectors.size());
  for (const auto& v : vectors) terms.push_back(crispify(v));

  std::vector<ClassPrototype> global;
  if (options.prototype_scope == PrototypeScope::global) global = class_prototypes(vectors, labels);

  const auto gather = [&](std::span<const std::size_t> rows) {
    std::pair<std::vector<FuzzyVector>, std::vector<std::size_t>> out;
    out.first.reserve(rows.size());
    out.second.reserve(rows.size());
    for (auto r : rows) {
      out.first.push_back(vectors[r]);
      out.second.push_back(labels[r]);
    }
    return out;
  };

  detail::GrowContext ctx;
  ctx.labels = labels;
  ctx.terms = terms;
  ctx.class_count = train.class_count();
  ctx.term_count = partitions.front().terms();
  ctx.diagnostics = diagnostics;
  ctx.select = [&](std::span<const std::size_t> rows, std::span<const std::size_t> candidates) {
    const auto [node_vectors, node_labels] = gather(rows);
    return select_attribute_fuzzy(node_vectors, node_labels, candidates, options, global);
  };
  ctx.annotate = [&](std::span<const std::size_t> rows, NodeDiagnostic& diag) {
    const auto [node_vectors, node_labels] = gather(rows);
    const auto protos = global.empty() ? class_prototypes(node_vectors, node_labels) : global;
    for (const auto& p : protos) diag.prototypes.emplace_back(p.label, p.average);
  };
  return detail::grow_tree(ctx);
}

}  // namespace fuzzid3
