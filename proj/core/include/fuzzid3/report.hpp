#pragma once

#include <ostream>
#include <span>
#include <string>

#include <nlohmann/json.hpp>

#include "fuzzid3/evaluation.hpp"
#include "fuzzid3/fuzzifier.hpp"

namespace fuzzid3 {

nlohmann::json to_json(const FuzzyPartition& p);
nlohmann::json to_json(const PartitionSet& partitions);
nlohmann::json to_json(const ConfusionRecord& r);

// {method, pair, groups, records[], mean_accuracy}. With `verbose`, adds a
// folds[] array holding every fold's tree and split diagnostics.
nlohmann::json to_json(const ExperimentResult& result, bool verbose = false);

// Partition entries of a result for the report's top-level partitions[]:
// one {method, pair, fold, feature_index, centers} per fold and feature.
nlohmann::json partitions_json(const ExperimentResult& result);

// Five-row Exp/A/B/C/D table with a mean-accuracy footer.
void write_table(std::ostream& out, const ExperimentResult& result);
// Both tables plus a per-fold accuracy delta table.
void write_comparison_table(std::ostream& out, const MethodComparison& comparison);
void write_csv_header(std::ostream& out);
void write_csv_rows(std::ostream& out, const ExperimentResult& result);
// Human-readable dump of split diagnostics for every fold.
void write_diagnostics(std::ostream& out, const ExperimentResult& result);

}  // namespace fuzzid3
