#include "fuzzid3/fuzzy_id3.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "fuzzid3/error.hpp"
#include "gtest/gtest.h"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace fuzzid3 {
namespace {

FuzzyVector vec2(std::vector<double> d) { return FuzzyVector(std::move(d), 2); }

TEST(Distance, Values) {
  const auto a = vec2({0.9, 0.1});
  EXPECT_EQ(distance(a, a), 0.0);
  EXPECT_NEAR(distance(vec2({1, 0}), vec2({0, 1})), 1.4142135623731, 1e-12);
  EXPECT_NEAR(distance(a, vec2({0.5, 0.5})), 0.565685424949238, 1e-12);
}

TEST(Distance, DimensionMismatch) {
  EXPECT_THROW(distance(vec2({1, 0}), vec2({1, 0, 0, 1})), InvalidArgument);
}

TEST(Distance, MetricAxioms) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    const auto x = testing::random_fuzzy_vector(rng, 2);
    const auto y = testing::random_fuzzy_vector(rng, 2);
    const auto z = testing::random_fuzzy_vector(rng, 2);
    EXPECT_NEAR(distance(x, y), distance(y, x), 1e-12);
    EXPECT_EQ(distance(x, x), 0.0);
    EXPECT_GT(distance(x, y), 0.0);
    EXPECT_LE(distance(x, z), distance(x, y) + distance(y, z) + 1e-9);
  }
}

TEST(Certainty, Values) {
  EXPECT_EQ(certainty(0.0).value(), 1.0);
  EXPECT_NEAR(certainty(1.0).value(), 0.367879441171442, 1e-12);
  const double far = certainty(50.0).value();
  EXPECT_LT(far, 1e-20);
  EXPECT_GT(far, 0.0);
  EXPECT_GT(certainty(1e6).value(), 0.0);
  EXPECT_DOUBLE_EQ(certainty_reciprocal(1.0).value(), 0.5);
}

TEST(Certainty, StrictlyDecreasing) {
  double previous = certainty(0.0).value();
  for (double z = 0.01; z < 40.0; z += 0.01) {
    const double c = certainty(z).value();
    EXPECT_LT(c, previous);
    previous = c;
  }
}

TEST(Certainty, RejectsBadDistances) {
  EXPECT_THROW(certainty(-0.1), InvalidArgument);
  EXPECT_THROW(certainty(std::nan("")), InvalidArgument);
  EXPECT_THROW(certainty(INFINITY), InvalidArgument);
  EXPECT_THROW(CertaintyScore(0.0), InvalidArgument);
  EXPECT_THROW(CertaintyScore(1.5), InvalidArgument);
}

TEST(SubsetUncertainty, AllAtPrototypeIsZero) {
  const std::vector<FuzzyVector> vs{vec2({1, 0}), vec2({1, 0}), vec2({0, 1})};
  const std::vector<std::size_t> labels{0, 0, 1};
  EXPECT_EQ(subset_uncertainty(vs, labels, class_prototypes(vs, labels)), 0.0);
}

TEST(SubsetUncertainty, EmptySubsetIsZero) {
  EXPECT_EQ(subset_uncertainty({}, {}, {}), 0.0);
}

TEST(SubsetUncertainty, TwoInstanceFormula) {
  // Class 0 sits on its prototype (Z = 0); class 1 sits at distance 1.
  const std::vector<FuzzyVector> vs{vec2({1, 0}), vec2({1, 0})};
  const std::vector<std::size_t> labels{0, 1};
  const std::vector<ClassPrototype> protos{{0, vec2({1, 0})}, {1, vec2({1, 1})}};
  EXPECT_NEAR(subset_uncertainty(vs, labels, protos), 0.316060279414279, 1e-12);
}

TEST(SubsetUncertainty, MissingPrototype) {
  const std::vector<FuzzyVector> vs{vec2({1, 0})};
  const std::vector<std::size_t> labels{1};
  const std::vector<ClassPrototype> protos{{0, vec2({1, 0})}};
  EXPECT_THROW(subset_uncertainty(vs, labels, protos), InvalidArgument);
}

TEST(SubsetUncertainty, RangeAndZeroIffOnPrototype) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<FuzzyVector> vs;
    std::vector<std::size_t> labels;
    for (int i = 0; i < 6; ++i) {
      vs.push_back(testing::random_fuzzy_vector(rng, 2));
      labels.push_back(static_cast<std::size_t>(i % 2));
    }
    const double u = subset_uncertainty(vs, labels, class_prototypes(vs, labels));
    EXPECT_GT(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

// Per-class identical vectors; feature 0 sends each class to its own branch.
struct SeparatedNode {
  std::vector<FuzzyVector> vectors;
  std::vector<std::size_t> labels;
};

SeparatedNode separated_node() {
  SeparatedNode n;
  for (int i = 0; i < 3; ++i) {
    n.vectors.push_back(FuzzyVector({0.9, 0.1, 0.6, 0.4, 0.3, 0.7, 1, 0}, 2));
    n.labels.push_back(0);
    n.vectors.push_back(FuzzyVector({0.2, 0.8, 0.6, 0.4, 0.4, 0.6, 1, 0}, 2));
    n.labels.push_back(1);
  }
  return n;
}

const std::vector<std::size_t> kAllFeatures{0, 1, 2, 3};

TEST(SelectAttributeFuzzy, PerfectSeparationScoresZero) {
  const auto n = separated_node();
  const auto choice = select_attribute_fuzzy(n.vectors, n.labels, kAllFeatures);
  EXPECT_EQ(choice.feature, 0u);
  EXPECT_NEAR(choice.scores[0].score, 0.0, 1e-12);
}

TEST(SelectAttributeFuzzy, NullSplitScoresParentUncertainty) {
  std::mt19937_64 rng(8);
  std::vector<FuzzyVector> vs;
  std::vector<std::size_t> labels;
  for (int i = 0; i < 8; ++i) {
    auto r = testing::random_fuzzy_vector(rng, 2);
    std::vector<double> d(r.degrees().begin(), r.degrees().end());
    d[6] = 1.0;  // every instance takes term 0 on feature 3
    d[7] = 0.0;
    vs.emplace_back(d, 2);
    labels.push_back(static_cast<std::size_t>(i % 2));
  }
  const auto choice = select_attribute_fuzzy(vs, labels, std::vector<std::size_t>{3});
  EXPECT_NEAR(choice.scores[0].score, subset_uncertainty(vs, labels, class_prototypes(vs, labels)),
              1e-12);
}

TEST(SelectAttributeFuzzy, InvariantUnderReorderingAndDuplication) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const auto d = testing::random_small_dataset(rng);
    const auto ps = fit_partitions(d, 3);
    auto vs = fuzzify(d, ps);
    auto labels = d.labels();
    const auto base = select_attribute_fuzzy(vs, labels, kAllFeatures);

    std::vector<std::size_t> order(vs.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<FuzzyVector> shuffled;
    std::vector<std::size_t> shuffled_labels;
    for (auto i : order) {
      shuffled.push_back(vs[i]);
      shuffled_labels.push_back(labels[i]);
    }
    const auto reordered = select_attribute_fuzzy(shuffled, shuffled_labels, kAllFeatures);

    auto doubled = vs;
    doubled.insert(doubled.end(), vs.begin(), vs.end());
    auto doubled_labels = labels;
    doubled_labels.insert(doubled_labels.end(), labels.begin(), labels.end());
    const auto duplicated = select_attribute_fuzzy(doubled, doubled_labels, kAllFeatures);

    EXPECT_EQ(base.feature, reordered.feature);
    EXPECT_EQ(base.feature, duplicated.feature);
    for (std::size_t f = 0; f < 4; ++f) {
      EXPECT_NEAR(base.scores[f].score, reordered.scores[f].score, 1e-12);
      EXPECT_NEAR(base.scores[f].score, duplicated.scores[f].score, 1e-12);
    }
  }
}

TEST(SelectAttributeFuzzy, MatchesExhaustiveOracle) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    const auto d = testing::random_small_dataset(rng);
    const auto ps = fit_partitions(d, trial % 2 == 0 ? 2 : 3);
    const auto scores = oracle::fuzzy_scores(testing::to_rows(d), testing::to_centers(ps), 2);
    const auto choice = select_attribute_fuzzy(fuzzify(d, ps), d.labels(), kAllFeatures);
    for (std::size_t f = 0; f < 4; ++f) EXPECT_NEAR(choice.scores[f].score, scores[f], 1e-12);
    EXPECT_EQ(choice.feature, oracle::lowest_argmin(scores)) << "trial " << trial;
    EXPECT_EQ(build_fuzzy_tree(d, ps).as_node().feature, oracle::lowest_argmin(scores));
  }
}

TEST(SelectAttributeFuzzy, FixedPrototypesAreUsed) {
  const auto n = separated_node();
  const auto global = class_prototypes(n.vectors, n.labels);
  const auto with_fixed = select_attribute_fuzzy(n.vectors, n.labels, kAllFeatures, {}, global);
  for (const auto& s : with_fixed.scores) EXPECT_NEAR(s.score, 0.0, 1e-12);
}

TEST(BuildFuzzyTree, PureSetIsLeaf) {
  const Dataset d({{{1, 2, 3, 4}, 0}, {{2, 3, 4, 5}, 0}}, {"a", "b"});
  const auto tree = build_fuzzy_tree(d, fit_partitions(d, 2));
  ASSERT_TRUE(tree.is_leaf());
  EXPECT_EQ(tree.as_leaf().label, 0u);
}

TEST(BuildFuzzyTree, EmptyTrainingSet) {
  PartitionSet ps;
  for (std::size_t f = 0; f < kFeatureCount; ++f) ps[f] = FuzzyPartition{f, {0, 1}};
  EXPECT_THROW(build_fuzzy_tree(Dataset({}, {"a"}), ps), InvalidArgument);
}

TEST(BuildFuzzyTree, IrisPairTreesAreWellFormed) {
  const auto iris = load_iris(FUZZID3_IRIS_CSV);
  for (const auto& [a, b] : std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {0, 2}, {1, 2}}) {
    const auto pair = pairwise_subset(iris, a, b);
    for (const auto& split : five_fold_splits(pair)) {
      const auto ps = fit_partitions(split.train, 2);
      EXPECT_EQ(fuzzify(split.train[0], ps).dimension(), 8u);
      std::vector<NodeDiagnostic> diags;
      const auto tree = build_fuzzy_tree(split.train, ps, {}, &diags);
      EXPECT_TRUE(tree.well_formed(2));
      EXPECT_LE(tree.depth(), 4u);
      for (const auto& diag : diags) {
        for (const auto& [label, avg] : diag.prototypes) EXPECT_EQ(avg.dimension(), 8u);
      }
    }
  }
}

TEST(BuildFuzzyTree, GlobalScopeBuildsValidTree) {
  const auto pair = pairwise_subset(load_iris(FUZZID3_IRIS_CSV), 1, 2);
  const auto ps = fit_partitions(pair, 2);
  FuzzyTreeOptions options;
  options.prototype_scope = PrototypeScope::global;
  const auto tree = build_fuzzy_tree(pair, ps, options);
  EXPECT_TRUE(tree.well_formed(2));
  EXPECT_EQ(tree, build_fuzzy_tree(pair, ps, options));
}

TEST(PredictFuzzy, LeafPrototypeAndShoulders) {
  const auto leaf = DecisionTree::leaf(1, 4);
  PartitionSet ps;
  for (std::size_t f = 0; f < kFeatureCount; ++f) ps[f] = FuzzyPartition{f, {0, 1}};
  EXPECT_EQ(predict_fuzzy(leaf, Instance{{0, 0, 0, 0}, 0}, ps), 1u);

  // Two tight classes separated on sepal length.
  const Dataset d({{{0, 1, 1, 1}, 0}, {{0, 1, 1, 1}, 0}, {{1, 1, 1, 1}, 1}, {{1, 1, 1, 1}, 1}},
                  {"a", "b"});
  const auto fps = fit_partitions(d, 2);
  const auto tree = build_fuzzy_tree(d, fps);
  EXPECT_EQ(predict_fuzzy(tree, d[0], fps), 0u);
  EXPECT_EQ(predict_fuzzy(tree, d[2], fps), 1u);
  EXPECT_EQ(predict_fuzzy(tree, Instance{{9, 9, 9, 9}, 0}, fps), 1u);
  EXPECT_EQ(predict_fuzzy(tree, Instance{{0, 0, 0, 0}, 0}, fps), 0u);
}

}  // namespace
}  // namespace fuzzid3
