#include "fuzzid3/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <span>
#include <sstream>

#include "fuzzid3/error.hpp"

namespace fuzzid3 {
namespace {

std::string_view trim(std::string_view s) {
  constexpr std::string_view kSpace = " \t\r\n\v\f";
  const auto first = s.find_first_not_of(kSpace);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(kSpace);
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

std::optional<double> parse_number(std::string_view field) {
  if (field.empty()) return std::nullopt;
  if (field.front() == '+') field.remove_prefix(1);
  double value = 0.0;
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return value;
}

Dataset select_rows(const Dataset& data, std::span<const std::size_t> rows) {
  std::vector<Instance> picked;
  picked.reserve(rows.size());
  for (auto r : rows) picked.push_back(data[r]);
  return Dataset(std::move(picked), data.class_names());
}

}  // namespace

Dataset::Dataset(std::vector<Instance> instances, std::vector<std::string> class_names)
    : instances_(std::move(instances)), class_names_(std::move(class_names)) {
  for (std::size_t i = 0; i < class_names_.size(); ++i) {
    for (std::size_t j = i + 1; j < class_names_.size(); ++j) {
      if (class_names_[i] == class_names_[j]) {
        throw InvalidArgument("duplicate class name '" + class_names_[i] + "'");
      }
    }
  }
  for (const auto& inst : instances_) {
    if (inst.label >= class_names_.size()) {
      throw InvalidArgument("instance label " + std::to_string(inst.label) +
                            " outside the class list");
    }
    for (double v : inst.features) {
      if (!std::isfinite(v) || v < 0.0) {
        throw InvalidArgument("features must be finite and non-negative");
      }
    }
  }
}

std::size_t Dataset::class_index(std::string_view name) const {
  const auto it = std::find(class_names_.begin(), class_names_.end(), name);
  if (it == class_names_.end()) {
    throw InvalidArgument("unknown class '" + std::string(name) + "'");
  }
  return static_cast<std::size_t>(it - class_names_.begin());
}

std::vector<std::size_t> Dataset::class_sizes() const {
  std::vector<std::size_t> sizes(class_names_.size(), 0);
  for (const auto& inst : instances_) ++sizes[inst.label];
  return sizes;
}

std::vector<std::size_t> Dataset::labels() const {
  std::vector<std::size_t> out;
  out.reserve(instances_.size());
  for (const auto& inst : instances_) out.push_back(inst.label);
  return out;
}

Dataset parse_iris(std::istream& in) {
  std::vector<Instance> instances;
  std::vector<std::string> class_names;
  std::string line;
  std::size_t line_no = 0;
  bool seen_first = false;

  while (std::getline(in, line)) {
    ++line_no;
    const auto content = trim(line);
    if (content.empty()) continue;
    const auto fields = split_fields(content);

    const bool first_row = !seen_first;
    seen_first = true;
    if (first_row && !parse_number(fields.front())) continue;  // header

    if (fields.size() != kFeatureCount + 1) {
      throw DataError("expected 5 fields, found " + std::to_string(fields.size()), line_no);
    }
    Instance inst;
    for (std::size_t f = 0; f < kFeatureCount; ++f) {
      const auto value = parse_number(fields[f]);
      if (!value) {
        throw DataError("non-numeric feature '" + std::string(fields[f]) + "'", line_no);
      }
      if (!std::isfinite(*value) || *value < 0.0) {
        throw DataError("feature '" + std::string(fields[f]) + "' must be finite and non-negative",
                        line_no);
      }
      inst.features[f] = *value;
    }
    const auto label = fields[kFeatureCount];
    if (label.empty()) throw DataError("empty class label", line_no);
    auto it = std::find(class_names.begin(), class_names.end(), label);
    if (it == class_names.end()) {
      class_names.emplace_back(label);
      it = class_names.end() - 1;
    }
    inst.label = static_cast<std::size_t>(it - class_names.begin());
    instances.push_back(inst);
  }
  if (instances.empty()) throw DataError("no rows");
  return Dataset(std::move(instances), std::move(class_names));
}

Dataset load_iris(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path.string() + "'");
  return parse_iris(in);
}

Dataset pairwise_subset(const Dataset& data, std::size_t class_a, std::size_t class_b) {
  if (class_a >= data.class_count() || class_b >= data.class_count()) {
    throw InvalidArgument("unknown class");
  }
  if (class_a == class_b) throw InvalidArgument("a class pair needs two distinct classes");
  std::vector<Instance> picked;
  for (const auto& inst : data.instances()) {
    if (inst.label == class_a || inst.label == class_b) {
      Instance copy = inst;
      copy.label = inst.label == class_a ? 0 : 1;
      picked.push_back(copy);
    }
  }
  return Dataset(std::move(picked),
                 {data.class_names()[class_a], data.class_names()[class_b]});
}

Dataset pairwise_subset(const Dataset& data, std::string_view class_a, std::string_view class_b) {
  return pairwise_subset(data, data.class_index(class_a), data.class_index(class_b));
}

std::vector<FoldSplit> five_fold_splits(const Dataset& data, std::size_t fold_size) {
  if (fold_size == 0) throw InvalidArgument("fold size must be positive");
  if (data.class_count() != 2) throw InvalidArgument("five-fold splits need exactly 2 classes");
  const auto sizes = data.class_sizes();
  for (std::size_t c = 0; c < sizes.size(); ++c) {
    if (sizes[c] != kFoldCount * fold_size) {
      std::ostringstream msg;
      msg << "class '" << data.class_names()[c] << "' has " << sizes[c]
          << " instances, expected " << kFoldCount * fold_size;
      throw InvalidArgument(msg.str());
    }
  }

  // Within-class position of every instance.
  std::vector<std::size_t> position(data.size());
  std::vector<std::size_t> seen(data.class_count(), 0);
  for (std::size_t i = 0; i < data.size(); ++i) position[i] = seen[data[i].label]++;

  std::vector<FoldSplit> splits;
  splits.reserve(kFoldCount);
  for (std::size_t fold = 0; fold < kFoldCount; ++fold) {
    FoldSplit split;
    split.fold_index = fold;
    for (std::size_t i = 0; i < data.size(); ++i) {
      const bool in_test = position[i] / fold_size == fold;
      (in_test ? split.test_rows : split.train_rows).push_back(i);
    }
    split.train = select_rows(data, split.train_rows);
    split.test = select_rows(data, split.test_rows);
    splits.push_back(std::move(split));
  }
  return splits;
}

}  // namespace fuzzid3
