#include "fuzzid3/fuzzifier.hpp"

#include <numeric>
#include <random>

#include "fuzzid3/error.hpp"
#include "gtest/gtest.h"
#include "support/generators.hpp"

namespace fuzzid3 {
namespace {

constexpr double kEps = 1e-9;

FuzzyPartition partition(std::vector<double> centers, std::size_t feature = 0) {
  return FuzzyPartition{feature, std::move(centers)};
}

TEST(BuildPartition, EvenlySpaced) {
  const std::vector<double> values{2.0, 0.0, 4.0, 1.0};
  EXPECT_EQ(build_partition(values, 0, 3).centers, (std::vector<double>{0.0, 2.0, 4.0}));
  const std::vector<double> other{1.0, 5.0, 3.0};
  EXPECT_EQ(build_partition(other, 2, 2).centers, (std::vector<double>{1.0, 5.0}));
  EXPECT_EQ(build_partition(other, 2, 2).feature_index, 2u);
}

TEST(BuildPartition, ConstantFeatureIsWidened) {
  const std::vector<double> values{3.0, 3.0, 3.0};
  const auto p = build_partition(values, 1, 2);
  ASSERT_EQ(p.terms(), 2u);
  EXPECT_DOUBLE_EQ(p.centers[0], 3.0);
  EXPECT_DOUBLE_EQ(p.centers[1], 3.0 + 1e-6);
}

TEST(BuildPartition, CentersStrictlyIncreasing) {
  const std::vector<double> values{1e300, 1e300};
  const auto p = build_partition(values, 0, 3);
  EXPECT_LT(p.centers[0], p.centers[1]);
  EXPECT_LT(p.centers[1], p.centers[2]);
}

TEST(BuildPartition, Errors) {
  EXPECT_THROW(build_partition({}, 0, 2), InvalidArgument);
  const std::vector<double> values{1.0, 2.0};
  EXPECT_THROW(build_partition(values, 0, 1), InvalidArgument);
}

TEST(Membership, PeaksAtCenters) {
  const auto p = partition({0, 10, 20});
  EXPECT_EQ(membership(p, 10.0), (std::vector<double>{0, 1, 0}));
  EXPECT_EQ(membership(p, 0.0), (std::vector<double>{1, 0, 0}));
  EXPECT_EQ(membership(p, 20.0), (std::vector<double>{0, 0, 1}));
}

TEST(Membership, TenPercentBetweenCenters) {
  const auto m = membership(partition({0, 10, 20}), 1.0);
  EXPECT_NEAR(m[0], 0.9, kEps);
  EXPECT_NEAR(m[1], 0.1, kEps);
  EXPECT_EQ(m[2], 0.0);
}

TEST(Membership, Shoulders) {
  EXPECT_EQ(membership(partition({0, 10}), -5.0), (std::vector<double>{1, 0}));
  EXPECT_EQ(membership(partition({0, 10}), 50.0), (std::vector<double>{0, 1}));
}

TEST(Membership, PropertiesOnRandomPoints) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> x_dist(-5.0, 15.0);
  const auto p = partition({0.0, 2.5, 3.0, 10.0});
  const double min_gap = 0.5;
  for (int i = 0; i < 2000; ++i) {
    const double x = x_dist(rng);
    const auto m = membership(p, x);
    EXPECT_NEAR(std::accumulate(m.begin(), m.end(), 0.0), 1.0, kEps);
    for (double v : m) {
      EXPECT_GE(v, 0.0);
      EXPECT_LE(v, 1.0);
    }
    const double delta = 1e-3;
    const auto next = membership(p, x + delta);
    for (std::size_t j = 0; j < m.size(); ++j) {
      EXPECT_LE(std::abs(next[j] - m[j]), delta / min_gap + kEps);
    }
  }
}

TEST(Fuzzify, Dimensions) {
  const Instance inst{{5.1, 3.5, 1.4, 0.2}, 0};
  for (std::size_t k : {2u, 3u, 5u}) {
    PartitionSet ps;
    for (std::size_t f = 0; f < kFeatureCount; ++f) {
      std::vector<double> c;
      for (std::size_t j = 0; j < k; ++j) c.push_back(static_cast<double>(j));
      ps[f] = partition(c, f);
    }
    EXPECT_EQ(fuzzify(inst, ps).dimension(), 4 * k);
  }
}

TEST(Fuzzify, OneHotAtCenters) {
  PartitionSet ps;
  for (std::size_t f = 0; f < kFeatureCount; ++f) ps[f] = partition({0, 1, 2}, f);
  const auto v = fuzzify(Instance{{0, 1, 2, 1}, 0}, ps);
  EXPECT_EQ(std::count(v.degrees().begin(), v.degrees().end(), 1.0), 4);
  EXPECT_EQ(std::count(v.degrees().begin(), v.degrees().end(), 0.0), 8);
  EXPECT_EQ(v[1 * 3 + 1], 1.0);
}

TEST(Fuzzify, RejectsMisorderedPartitions) {
  PartitionSet ps;
  for (std::size_t f = 0; f < kFeatureCount; ++f) ps[f] = partition({0, 1}, 3 - f);
  EXPECT_THROW(fuzzify(Instance{{0, 1, 2, 1}, 0}, ps), InvalidArgument);
}

TEST(FitPartitions, UsesTrainingRangePerFeature) {
  const Dataset d({{{1, 2, 3, 4}, 0}, {{3, 2, 5, 8}, 0}}, {"x"});
  const auto ps = fit_partitions(d, 2);
  EXPECT_EQ(ps[0].centers, (std::vector<double>{1, 3}));
  EXPECT_EQ(ps[3].centers, (std::vector<double>{4, 8}));
  EXPECT_DOUBLE_EQ(ps[1].centers[1], 2 + 1e-6);
}

TEST(AverageVector, Basics) {
  const FuzzyVector a({1, 0, 1, 0, 1, 0, 1, 0}, 2);
  const FuzzyVector b({0, 1, 0, 1, 0, 1, 0, 1}, 2);
  const std::vector<FuzzyVector> one{a};
  EXPECT_EQ(average_vector(one), a);
  const std::vector<FuzzyVector> two{a, b};
  const auto avg = average_vector(two);
  for (double v : avg.degrees()) EXPECT_DOUBLE_EQ(v, 0.5);
  const std::vector<FuzzyVector> same(7, b);
  EXPECT_EQ(average_vector(same), b);
}

TEST(AverageVector, BlockSumsStayOne) {
  std::mt19937_64 rng(11);
  std::vector<FuzzyVector> vs;
  for (int i = 0; i < 25; ++i) vs.push_back(testing::random_fuzzy_vector(rng, 3));
  const auto avg = average_vector(vs);
  for (std::size_t f = 0; f < kFeatureCount; ++f) {
    const auto block = avg.block(f);
    EXPECT_NEAR(std::accumulate(block.begin(), block.end(), 0.0), 1.0, kEps);
  }
}

TEST(AverageVector, Errors) {
  EXPECT_THROW(average_vector({}), InvalidArgument);
  const std::vector<FuzzyVector> mixed{FuzzyVector({1, 0, 1, 0, 1, 0, 1, 0}, 2),
                                       FuzzyVector({1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0}, 3)};
  EXPECT_THROW(average_vector(mixed), InvalidArgument);
}

}  // namespace
}  // namespace fuzzid3
