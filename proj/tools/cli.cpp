#include "cli.hpp"

#include <charconv>
#include <fstream>
#include <optional>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "fuzzid3/crisp_id3.hpp"
#include "fuzzid3/dataset.hpp"
#include "fuzzid3/error.hpp"
#include "fuzzid3/report.hpp"

namespace fuzzid3::cli {
namespace {

std::optional<std::size_t> parse_count(std::string_view s) {
  std::size_t value = 0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return value;
}

// Parses "<i>,<j>"; the groups are 1-based.
std::optional<std::pair<std::size_t, std::size_t>> parse_pair(std::string_view s) {
  const auto comma = s.find(',');
  if (comma == std::string_view::npos) return std::nullopt;
  const auto first = parse_count(s.substr(0, comma));
  const auto second = parse_count(s.substr(comma + 1));
  if (!first || !second || *first == 0 || *second == 0) return std::nullopt;
  return std::pair{*first, *second};
}

const CLI::Validator kTermCount(
    [](std::string& s) -> std::string {
      const auto k = parse_count(s);
      return k && *k >= 2 ? std::string{} : std::string("k must be ≥ 2");
    },
    "INT>=2");

const CLI::Validator kPositive(
    [](std::string& s) -> std::string {
      const auto n = parse_count(s);
      return n && *n > 0 ? std::string{} : std::string("expected a positive integer");
    },
    "INT>0");

const CLI::Validator kPairSpec(
    [](std::string& s) -> std::string {
      if (s == "all-pairs" || parse_pair(s)) return {};
      return "expected a pair like 1,2 or all-pairs";
    },
    "PAIR");

void add_common_options(CLI::App& sub, RunConfig& cfg, std::string& scope) {
  sub.add_option("--data", cfg.data_path, "Iris CSV file")->envname("FUZZID3_DATA")->required();
  sub.add_option("--pair", cfg.class_pair, "1-based class groups, e.g. 1,2, or all-pairs")
      ->check(kPairSpec)
      ->capture_default_str();
  sub.add_option("--k", cfg.k, "Linguistic terms per feature")
      ->check(kTermCount)
      ->capture_default_str();
  sub.add_option("--fold-size", cfg.fold_size, "Test instances per class per fold")
      ->check(kPositive)
      ->capture_default_str();
  sub.add_option("--prototype-scope", scope, "Where class averages are computed")
      ->check(CLI::IsMember({"per-node", "global"}))
      ->capture_default_str();
  sub.add_option("--certainty", cfg.certainty, "Distance-to-certainty mapping")
      ->check(CLI::IsMember({"exp", "reciprocal"}))
      ->capture_default_str();
  sub.add_flag("--verbose", cfg.verbose, "Include per-node split diagnostics");
}

std::vector<ClassPair> resolve_pairs(const Dataset& data, const std::string& spec) {
  if (spec == "all-pairs") return all_class_pairs(data);
  const auto groups = parse_pair(spec);
  if (!groups) throw InvalidArgument("malformed class pair '" + spec + "'");
  const auto [first, second] = *groups;
  if (first > data.class_count() || second > data.class_count()) {
    throw InvalidArgument("class group out of range: the data has " +
                          std::to_string(data.class_count()) + " classes");
  }
  if (first == second) throw InvalidArgument("a class pair needs two distinct groups");
  return {ClassPair{first - 1, second - 1}};
}

std::vector<Method> resolve_methods(const std::string& spec) {
  if (spec == "both") return {Method::id3, Method::fuzzy};
  return {parse_method(spec)};
}

ExperimentConfig experiment_config(const RunConfig& cfg) {
  ExperimentConfig ec;
  ec.k = cfg.k;
  ec.fold_size = cfg.fold_size;
  ec.fuzzy.prototype_scope = cfg.prototype_scope;
  ec.fuzzy.certainty = cfg.certainty == "reciprocal" ? &certainty_reciprocal : &certainty;
  ec.collect_diagnostics = cfg.verbose;
  return ec;
}

std::string_view scope_name(PrototypeScope scope) {
  return scope == PrototypeScope::global ? "global" : "per-node";
}

std::string_view format_name(OutputFormat f) {
  switch (f) {
    case OutputFormat::json:
      return "json";
    case OutputFormat::csv:
      return "csv";
    default:
      return "table";
  }
}

nlohmann::json config_json(const RunConfig& cfg) {
  return {{"data", cfg.data_path},
          {"method", cfg.method},
          {"pair", cfg.class_pair},
          {"k", cfg.k},
          {"fold_size", cfg.fold_size},
          {"format", std::string(format_name(cfg.format))},
          {"verbose", cfg.verbose},
          {"prototype_scope", std::string(scope_name(cfg.prototype_scope))},
          {"certainty", cfg.certainty}};
}

void run_train(const RunConfig& cfg, std::ostream& out) {
  const auto data = load_iris(cfg.data_path);
  const auto ec = experiment_config(cfg);

  nlohmann::json partitions = nlohmann::json::array();
  nlohmann::json trees = nlohmann::json::array();
  for (const auto pair : resolve_pairs(data, cfg.class_pair)) {
    const auto subset = pairwise_subset(data, pair.first, pair.second);
    const auto fitted = fit_partitions(subset, cfg.k);
    for (const auto& p : fitted) {
      auto entry = to_json(p);
      entry["pair"] = subset.class_names();
      partitions.push_back(std::move(entry));
    }
    for (const auto method : resolve_methods(cfg.method)) {
      std::vector<NodeDiagnostic> diagnostics;
      auto* diag = cfg.verbose ? &diagnostics : nullptr;
      const auto tree = method == Method::id3 ? build_id3(subset, fitted, diag)
                                              : build_fuzzy_tree(subset, fitted, ec.fuzzy, diag);
      nlohmann::json entry{{"method", std::string(to_string(method))},
                           {"pair", subset.class_names()},
                           {"groups", {pair.first + 1, pair.second + 1}},
                           {"depth", tree.depth()},
                           {"tree", to_json(tree, subset.class_names())}};
      if (cfg.verbose) {
        nlohmann::json nodes = nlohmann::json::array();
        for (const auto& d : diagnostics) nodes.push_back(to_json(d, subset.class_names()));
        entry["nodes"] = std::move(nodes);
      }
      trees.push_back(std::move(entry));
    }
  }
  const nlohmann::json doc{
      {"config", config_json(cfg)}, {"partitions", std::move(partitions)}, {"trees", std::move(trees)}};

  if (cfg.out_path.empty()) {
    out << doc.dump(2) << '\n';
  } else {
    std::ofstream file(cfg.out_path);
    if (!file) throw Error("cannot write '" + cfg.out_path + "'");
    file << doc.dump(2) << '\n';
  }
}

void run_evaluate(const RunConfig& cfg, bool compare, std::ostream& out) {
  const auto data = load_iris(cfg.data_path);
  const auto ec = experiment_config(cfg);
  const auto pairs = resolve_pairs(data, cfg.class_pair);

  std::vector<ExperimentResult> results;
  std::vector<MethodComparison> comparisons;
  for (const auto pair : pairs) {
    if (compare) {
      auto cmp = compare_methods(data, pair, ec);
      results.push_back(cmp.id3);
      results.push_back(cmp.fuzzy);
      comparisons.push_back(std::move(cmp));
    } else {
      for (const auto method : resolve_methods(cfg.method)) {
        results.push_back(run_experiment(data, method, pair, ec));
      }
    }
  }

  switch (cfg.format) {
    case OutputFormat::json: {
      nlohmann::json partitions = nlohmann::json::array();
      nlohmann::json result_docs = nlohmann::json::array();
      for (const auto& r : results) {
        for (auto& p : partitions_json(r)) partitions.push_back(std::move(p));
        result_docs.push_back(to_json(r, cfg.verbose));
      }
      nlohmann::json doc{{"config", config_json(cfg)},
                         {"partitions", std::move(partitions)},
                         {"results", std::move(result_docs)}};
      if (compare) {
        nlohmann::json cmp_docs = nlohmann::json::array();
        for (const auto& c : comparisons) {
          cmp_docs.push_back({{"pair", c.id3.class_pair},
                              {"deltas", c.deltas},
                              {"identical_folds", c.identical_folds}});
        }
        doc["comparisons"] = std::move(cmp_docs);
      }
      out << doc.dump(2) << '\n';
      break;
    }
    case OutputFormat::csv:
      write_csv_header(out);
      for (const auto& r : results) write_csv_rows(out, r);
      break;
    case OutputFormat::table:
      if (compare) {
        for (std::size_t i = 0; i < comparisons.size(); ++i) {
          if (i > 0) out << '\n';
          write_comparison_table(out, comparisons[i]);
        }
      } else {
        for (std::size_t i = 0; i < results.size(); ++i) {
          if (i > 0) out << '\n';
          write_table(out, results[i]);
        }
      }
      if (cfg.verbose) {
        for (const auto& r : results) {
          out << '\n';
          write_diagnostics(out, r);
        }
      }
      break;
  }
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"ID3 and distance-based fuzzy decision trees on Iris-style data", "fuzzid3"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string scope = "per-node";
  std::string format = "table";

  auto* train = app.add_subcommand("train", "Build one tree on the full pairwise dataset");
  add_common_options(*train, cfg, scope);
  train->add_option("--method", cfg.method, "id3, fuzzy or both")
      ->check(CLI::IsMember({"id3", "fuzzy", "both"}))
      ->default_str("fuzzy");
  train->add_option("--out", cfg.out_path, "Write the JSON tree here instead of stdout");

  auto* evaluate = app.add_subcommand("evaluate", "Pairwise five-fold cross-validation");
  add_common_options(*evaluate, cfg, scope);
  evaluate->add_option("--method", cfg.method, "id3, fuzzy or both")
      ->check(CLI::IsMember({"id3", "fuzzy", "both"}))
      ->capture_default_str();
  evaluate->add_option("--format", format, "table, json or csv")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();

  auto* compare = app.add_subcommand("compare", "Evaluate both methods on identical folds");
  add_common_options(*compare, cfg, scope);
  compare->add_option("--format", format, "table, json or csv")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    const auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return 2;
  }

  if (train->parsed() && train->count("--method") == 0) cfg.method = "fuzzy";
  cfg.prototype_scope = scope == "global" ? PrototypeScope::global : PrototypeScope::per_node;
  cfg.format = format == "json" ? OutputFormat::json
               : format == "csv" ? OutputFormat::csv
                                 : OutputFormat::table;

  try {
    if (train->parsed()) {
      run_train(cfg, out);
    } else {
      run_evaluate(cfg, compare->parsed(), out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace fuzzid3::cli
