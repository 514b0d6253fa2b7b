#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace fuzzid3 {

inline constexpr std::size_t kFeatureCount = 4;
inline constexpr std::size_t kDefaultFoldSize = 10;
inline constexpr std::size_t kFoldCount = 5;

inline constexpr std::array<std::string_view, kFeatureCount> kFeatureNames = {
    "sepal_length", "sepal_width", "petal_length", "petal_width"};

using FeatureRow = std::array<double, kFeatureCount>;

// One labeled flower. `label` indexes into the owning Dataset's class_names.
struct Instance {
  FeatureRow features{};
  std::size_t label = 0;

  friend bool operator==(const Instance&, const Instance&) = default;
};

// Ordered collection of instances. Instance order is significant: fold
// assignment is positional within each class.
class Dataset {
 public:
  Dataset() = default;
  // Validates that every label indexes class_names and that every feature is
  // finite and non-negative. Throws InvalidArgument otherwise.
  Dataset(std::vector<Instance> instances, std::vector<std::string> class_names);

  const std::vector<Instance>& instances() const noexcept { return instances_; }
  const std::vector<std::string>& class_names() const noexcept { return class_names_; }

  std::size_t size() const noexcept { return instances_.size(); }
  bool empty() const noexcept { return instances_.empty(); }
  std::size_t class_count() const noexcept { return class_names_.size(); }
  const Instance& operator[](std::size_t i) const { return instances_[i]; }

  // Throws InvalidArgument for an unknown name.
  std::size_t class_index(std::string_view name) const;
  std::vector<std::size_t> class_sizes() const;
  std::vector<std::size_t> labels() const;

  friend bool operator==(const Dataset&, const Dataset&) = default;

 private:
  std::vector<Instance> instances_;
  std::vector<std::string> class_names_;
};

// Parses Iris-style CSV: four decimal features followed by a label. A header
// row is recognised by a non-numeric first field on the first non-blank line.
// Blank lines are skipped; CRLF endings and padding whitespace are accepted.
// Class names are ordered by first appearance. Errors carry the line number.
Dataset parse_iris(std::istream& in);
Dataset load_iris(const std::filesystem::path& path);

// Restricts `data` to two classes. The result's class_names are
// {class_a, class_b} and labels are remapped to 0 and 1.
Dataset pairwise_subset(const Dataset& data, std::string_view class_a, std::string_view class_b);
Dataset pairwise_subset(const Dataset& data, std::size_t class_a, std::size_t class_b);

struct FoldSplit {
  std::size_t fold_index = 0;
  Dataset train;
  Dataset test;
  // Positions of the train/test instances within the input dataset.
  std::vector<std::size_t> train_rows;
  std::vector<std::size_t> test_rows;
};

// Deterministic five-fold split of a two-class dataset. Fold j tests on the
// instances at within-class positions [j*fold_size, (j+1)*fold_size) of each
// class and trains on the rest. Each class must hold exactly 5*fold_size
// instances.
std::vector<FoldSplit> five_fold_splits(const Dataset& data,
                                        std::size_t fold_size = kDefaultFoldSize);

}  // namespace fuzzid3
