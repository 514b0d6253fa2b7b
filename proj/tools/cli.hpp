#pragma once

#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "fuzzid3/evaluation.hpp"
#include "fuzzid3/fuzzy_id3.hpp"

namespace fuzzid3::cli {

enum class OutputFormat { table, json, csv };

struct RunConfig {
  std::string data_path;
  // "id3", "fuzzy" or "both".
  std::string method = "both";
  // "<i>,<j>" with 1-based group numbers, or "all-pairs".
  std::string class_pair = "1,2";
  std::size_t k = 2;
  std::size_t fold_size = kDefaultFoldSize;
  OutputFormat format = OutputFormat::table;
  bool verbose = false;
  PrototypeScope prototype_scope = PrototypeScope::per_node;
  // "exp" or "reciprocal".
  std::string certainty = "exp";
  std::string out_path;
};

// Runs one invocation. Reports go to `out`, diagnostics to `err`.
// Returns 0 on success, 1 on a runtime failure and 2 on a usage error.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fuzzid3::cli
