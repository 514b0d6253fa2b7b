#include "fuzzid3/fuzzifier.hpp"

#include <algorithm>
#include <cmath>

#include "fuzzid3/error.hpp"

namespace fuzzid3 {

FuzzyPartition build_partition(std::span<const double> values, std::size_t feature_index,
                               std::size_t k) {
  if (values.empty()) throw InvalidArgument("cannot build a partition from no values");
  if (k < 2) throw InvalidArgument("k must be >= 2");
  const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  const double lo = *lo_it;
  const double hi = *hi_it;

  FuzzyPartition p;
  p.feature_index = feature_index;
  p.centers.resize(k);
  if (hi > lo) {
    const double step = (hi - lo) / static_cast<double>(k - 1);
    for (std::size_t j = 0; j < k; ++j) p.centers[j] = lo + step * static_cast<double>(j);
    p.centers.back() = hi;
  } else {
    for (std::size_t j = 0; j < k; ++j) {
      p.centers[j] = lo + kDegenerateSpread * static_cast<double>(j);
    }
  }
  // Huge magnitudes can swallow the spacing; keep the centers strictly increasing.
  for (std::size_t j = 1; j < k; ++j) {
    if (!(p.centers[j] > p.centers[j - 1])) {
      p.centers[j] = std::nextafter(p.centers[j - 1], HUGE_VAL);
    }
  }
  return p;
}

PartitionSet fit_partitions(const Dataset& train, std::size_t k) {
  if (train.empty()) throw InvalidArgument("cannot fit partitions on an empty dataset");
  PartitionSet out;
  std::vector<double> column(train.size());
  for (std::size_t f = 0; f < kFeatureCount; ++f) {
    for (std::size_t i = 0; i < train.size(); ++i) column[i] = train[i].features[f];
    out[f] = build_partition(column, f, k);
  }
  return out;
}

std::vector<double> membership(const FuzzyPartition& p, double x) {
  const auto& c = p.centers;
  std::vector<double> degrees(c.size(), 0.0);
  if (c.empty()) return degrees;
  if (x <= c.front()) {
    degrees.front() = 1.0;
    return degrees;
  }
  if (x >= c.back()) {
    degrees.back() = 1.0;
    return degrees;
  }
  // First center strictly above x; x lies in [c[j-1], c[j]).
  const auto j = static_cast<std::size_t>(std::upper_bound(c.begin(), c.end(), x) - c.begin());
  const double t = (x - c[j - 1]) / (c[j] - c[j - 1]);
  degrees[j - 1] = 1.0 - t;
  degrees[j] = t;
  return degrees;
}

FuzzyVector::FuzzyVector(std::vector<double> degrees, std::size_t terms)
    : degrees_(std::move(degrees)), terms_(terms) {
  if (terms_ == 0) throw InvalidArgument("a fuzzy vector needs at least one term per block");
  if (degrees_.size() % terms_ != 0) {
    throw InvalidArgument("fuzzy vector dimension is not a multiple of the term count");
  }
}

FuzzyVector fuzzify(const Instance& inst, const PartitionSet& partitions) {
  const std::size_t k = partitions.front().terms();
  std::vector<double> degrees;
  degrees.reserve(kFeatureCount * k);
  for (std::size_t f = 0; f < kFeatureCount; ++f) {
    const auto& p = partitions[f];
    if (p.feature_index != f) throw InvalidArgument("partitions must cover features 0..3 in order");
    if (p.terms() != k) throw InvalidArgument("partitions disagree on the number of terms");
    const auto block = membership(p, inst.features[f]);
    degrees.insert(degrees.end(), block.begin(), block.end());
  }
  return FuzzyVector(std::move(degrees), k);
}

std::vector<FuzzyVector> fuzzify(const Dataset& data, const PartitionSet& partitions) {
  std::vector<FuzzyVector> out;
  out.reserve(data.size());
  for (const auto& inst : data.instances()) out.push_back(fuzzify(inst, partitions));
  return out;
}

FuzzyVector average_vector(std::span<const FuzzyVector> vectors) {
  if (vectors.empty()) throw InvalidArgument("cannot average an empty list of vectors");
  const auto dim = vectors.front().dimension();
  const auto terms = vectors.front().terms();
  std::vector<double> sum(dim, 0.0);
  for (const auto& v : vectors) {
    if (v.dimension() != dim || v.terms() != terms) {
      throw InvalidArgument("cannot average fuzzy vectors of different shapes");
    }
    for (std::size_t i = 0; i < dim; ++i) sum[i] += v[i];
  }
  const double n = static_cast<double>(vectors.size());
  for (auto& s : sum) s /= n;
  return FuzzyVector(std::move(sum), terms);
}

}  // namespace fuzzid3
