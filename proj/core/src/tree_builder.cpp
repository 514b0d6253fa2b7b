#include "tree_builder.hpp"

#include <algorithm>

#include "fuzzid3/crisp_id3.hpp"
#include "fuzzid3/error.hpp"

namespace fuzzid3::detail {
namespace {

struct Grower {
  const GrowContext& ctx;
  std::vector<std::pair<std::size_t, std::size_t>> path;

  DecisionTree grow(const std::vector<std::size_t>& rows, std::vector<std::size_t> candidates,
                    std::size_t parent_majority) {
    if (rows.empty()) return DecisionTree::leaf(parent_majority, 0);

    ClassDistribution dist{std::vector<std::size_t>(ctx.class_count, 0)};
    for (auto r : rows) ++dist.counts[ctx.labels[r]];
    const auto majority = dist.majority();
    if (dist.pure() || candidates.empty()) return DecisionTree::leaf(majority, rows.size());

    const auto choice = ctx.select(rows, candidates);
    const auto feature = choice.feature;
    if (ctx.diagnostics != nullptr) {
      NodeDiagnostic diag{path, dist.counts, choice, {}};
      if (ctx.annotate) ctx.annotate(rows, diag);
      ctx.diagnostics->push_back(std::move(diag));
    }

    std::vector<std::vector<std::size_t>> branches(ctx.term_count);
    for (auto r : rows) branches[ctx.terms[r][feature]].push_back(r);
    std::erase(candidates, feature);

    std::vector<DecisionTree> children;
    children.reserve(ctx.term_count);
    for (std::size_t term = 0; term < ctx.term_count; ++term) {
      path.emplace_back(feature, term);
      children.push_back(grow(branches[term], candidates, majority));
      path.pop_back();
    }
    return DecisionTree::node(feature, majority, rows.size(), std::move(children));
  }
};

}  // namespace

DecisionTree grow_tree(const GrowContext& ctx) {
  if (ctx.labels.empty()) throw InvalidArgument("cannot grow a tree from an empty training set");
  std::vector<std::size_t> rows(ctx.labels.size());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  std::vector<std::size_t> candidates(kFeatureCount);
  for (std::size_t f = 0; f < kFeatureCount; ++f) candidates[f] = f;
  Grower grower{ctx, {}};
  return grower.grow(rows, std::move(candidates), 0);
}

std::size_t pick_best(std::span<const CandidateScore> scores, bool maximise) {
  double best = scores.front().score;
  for (const auto& s : scores) best = maximise ? std::max(best, s.score) : std::min(best, s.score);
  for (const auto& s : scores) {
    const bool close = maximise ? s.score >= best - kScoreTieTolerance
                                : s.score <= best + kScoreTieTolerance;
    if (close) return s.feature;
  }
  return scores.front().feature;
}

}  // namespace fuzzid3::detail
