#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "fuzzid3/dataset.hpp"

namespace fuzzid3 {

// Spread applied to the centers of a constant feature.
inline constexpr double kDegenerateSpread = 1e-6;

// Triangular membership functions over one feature. Term j peaks at
// centers[j] and falls linearly to zero at its neighbours; the first and
// last terms are shouldered, so degrees always sum to one.
struct FuzzyPartition {
  std::size_t feature_index = 0;
  std::vector<double> centers;

  std::size_t terms() const noexcept { return centers.size(); }

  friend bool operator==(const FuzzyPartition&, const FuzzyPartition&) = default;
};

using PartitionSet = std::array<FuzzyPartition, kFeatureCount>;

// k evenly spaced centers from min(values) to max(values). A constant feature
// gets centers min + j * kDegenerateSpread. Throws InvalidArgument when
// `values` is empty or k < 2.
FuzzyPartition build_partition(std::span<const double> values, std::size_t feature_index,
                               std::size_t k);

// Fits one partition per feature on `train`.
PartitionSet fit_partitions(const Dataset& train, std::size_t k);

// Membership degrees of x in each term of p; sums to one.
std::vector<double> membership(const FuzzyPartition& p, double x);

// Concatenated membership degrees of the four features: kFeatureCount blocks
// of `terms()` entries, in feature order.
class FuzzyVector {
 public:
  FuzzyVector() = default;
  // Throws InvalidArgument if terms == 0 or degrees.size() is not a multiple
  // of terms.
  FuzzyVector(std::vector<double> degrees, std::size_t terms);

  std::size_t dimension() const noexcept { return degrees_.size(); }
  std::size_t terms() const noexcept { return terms_; }
  std::size_t blocks() const noexcept { return terms_ == 0 ? 0 : degrees_.size() / terms_; }

  std::span<const double> degrees() const noexcept { return degrees_; }
  std::span<const double> block(std::size_t feature) const {
    return std::span<const double>(degrees_).subspan(feature * terms_, terms_);
  }
  double operator[](std::size_t i) const { return degrees_[i]; }

  friend bool operator==(const FuzzyVector&, const FuzzyVector&) = default;

 private:
  std::vector<double> degrees_;
  std::size_t terms_ = 0;
};

// Throws InvalidArgument if the partitions are not indexed 0..3 in order or
// disagree on the term count.
FuzzyVector fuzzify(const Instance& inst, const PartitionSet& partitions);
std::vector<FuzzyVector> fuzzify(const Dataset& data, const PartitionSet& partitions);

// Componentwise mean. Throws InvalidArgument on an empty list or mixed shapes.
FuzzyVector average_vector(std::span<const FuzzyVector> vectors);

}  // namespace fuzzid3
