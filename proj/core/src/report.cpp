#include "fuzzid3/report.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>

namespace fuzzid3 {

nlohmann::json to_json(const FuzzyPartition& p) {
  return {{"feature_index", p.feature_index}, {"centers", p.centers}};
}

nlohmann::json to_json(const PartitionSet& partitions) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& p : partitions) out.push_back(to_json(p));
  return out;
}

nlohmann::json to_json(const ConfusionRecord& r) {
  return {{"fold", r.fold_index}, {"a", r.a}, {"b", r.b}, {"c", r.c}, {"d", r.d}};
}

nlohmann::json to_json(const ExperimentResult& result, bool verbose) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& r : result.records) records.push_back(to_json(r));
  nlohmann::json out{{"method", std::string(to_string(result.method))},
                     {"pair", result.class_pair},
                     {"groups", result.groups},
                     {"records", std::move(records)},
                     {"mean_accuracy", result.mean_accuracy}};
  if (verbose) {
    nlohmann::json folds = nlohmann::json::array();
    for (const auto& fold : result.folds) {
      nlohmann::json diags = nlohmann::json::array();
      for (const auto& d : fold.diagnostics) diags.push_back(to_json(d, result.class_pair));
      folds.push_back({{"fold", fold.record.fold_index},
                       {"test_rows", fold.test_rows},
                       {"tree", to_json(fold.tree, result.class_pair)},
                       {"nodes", std::move(diags)}});
    }
    out["folds"] = std::move(folds);
  }
  return out;
}

nlohmann::json partitions_json(const ExperimentResult& result) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& fold : result.folds) {
    for (const auto& p : fold.partitions) {
      auto entry = to_json(p);
      entry["method"] = std::string(to_string(result.method));
      entry["pair"] = result.class_pair;
      entry["fold"] = fold.record.fold_index;
      out.push_back(std::move(entry));
    }
  }
  return out;
}

namespace {

std::string pair_title(const ExperimentResult& r) {
  return fmt::format("group {} ({}) vs group {} ({})", r.groups[0], r.class_pair[0], r.groups[1],
                     r.class_pair[1]);
}

}  // namespace

void write_table(std::ostream& out, const ExperimentResult& result) {
  fmt::print(out, "{} five-fold: {}\n", result.method == Method::id3 ? "ID3" : "Fuzzy tree",
             pair_title(result));
  fmt::print(out, "{:<6}{:>9}{:>9}{:>9}{:>9}{:>10}\n", "Exp.", "Group A", "Group B", "Group C",
             "Group D", "Accuracy");
  for (const auto& r : result.records) {
    fmt::print(out, "{:<6}{:>9}{:>9}{:>9}{:>9}{:>10.3f}\n", r.fold_index + 1, r.a, r.b, r.c, r.d,
               accuracy(r));
  }
  fmt::print(out, "Mean accuracy: {:.3f}\n", result.mean_accuracy);
}

void write_comparison_table(std::ostream& out, const MethodComparison& comparison) {
  write_table(out, comparison.id3);
  out << '\n';
  write_table(out, comparison.fuzzy);
  out << '\n';
  fmt::print(out, "{:<6}{:>10}{:>10}{:>10}\n", "Exp.", "ID3", "Fuzzy", "Delta");
  for (std::size_t f = 0; f < comparison.deltas.size(); ++f) {
    fmt::print(out, "{:<6}{:>10.3f}{:>10.3f}{:>+10.3f}\n", f + 1,
               accuracy(comparison.id3.records[f]), accuracy(comparison.fuzzy.records[f]),
               comparison.deltas[f]);
  }
  fmt::print(out, "Identical folds: {}\n", comparison.identical_folds ? "yes" : "no");
}

void write_csv_header(std::ostream& out) {
  out << "method,class_1,class_2,fold,a,b,c,d,accuracy\n";
}

void write_csv_rows(std::ostream& out, const ExperimentResult& result) {
  for (const auto& r : result.records) {
    fmt::print(out, "{},{},{},{},{},{},{},{},{}\n", to_string(result.method), result.class_pair[0],
               result.class_pair[1], r.fold_index + 1, r.a, r.b, r.c, r.d, accuracy(r));
  }
}

void write_diagnostics(std::ostream& out, const ExperimentResult& result) {
  fmt::print(out, "Split diagnostics ({}, {}):\n", to_string(result.method), pair_title(result));
  for (const auto& fold : result.folds) {
    fmt::print(out, "  fold {}\n", fold.record.fold_index + 1);
    for (const auto& d : fold.diagnostics) {
      std::string path = "root";
      for (const auto& [feature, term] : d.path) {
        path += fmt::format(" > {}={}", kFeatureNames[feature], term);
      }
      std::string scores;
      for (const auto& s : d.choice.scores) {
        scores += fmt::format(" {}:{:.6f}", kFeatureNames[s.feature], s.score);
      }
      fmt::print(out, "    [{}] chose {} |{}\n", path, kFeatureNames[d.choice.feature], scores);
    }
  }
}

}  // namespace fuzzid3
