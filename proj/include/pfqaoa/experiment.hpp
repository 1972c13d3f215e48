#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pfqaoa/graph.hpp"
#include "pfqaoa/metrics.hpp"
#include "pfqaoa/optimizer.hpp"
#include "pfqaoa/problems.hpp"

namespace pfqaoa {

enum class GraphFamily { ErdosRenyi, Regular };

struct GraphSuite {
  GraphFamily family = GraphFamily::ErdosRenyi;
  std::vector<std::size_t> sizes{8};
  std::vector<double> densities{0.1, 0.3, 0.5, 0.8};  // Erdos-Renyi only
  std::size_t degree = 3;                             // regular only
  std::size_t count = 10;                             // graphs per (size, density)
  std::uint64_t seed = 1;
};

/// Everything that determines a study's results, plus where to write them.
struct ExperimentConfig {
  std::string name = "custom";
  GraphSuite suite;
  std::vector<ProblemKind> kinds{std::begin(kAllKinds), std::end(kAllKinds)};
  std::vector<Penalties> penalty_grid{Penalties::defaults()};
  std::vector<std::size_t> layers{1, 2, 3};  // 0 = uniform state, no optimization
  OptimizerConfig optimizer;
  bool probability_table = false;

  std::string out_dir = "results";
  std::size_t workers = 1;

  /// Resolved key-value text with [sections]. The [run] section (output
  /// directory, worker count) does not influence results.
  std::string to_text() const;
  /// Starts from `base` and applies every key present in `text`.
  static ExperimentConfig from_text(std::string_view text, const ExperimentConfig& base);
  static ExperimentConfig from_text(std::string_view text);
  /// FNV-1a of to_text() without the [run] section, as 16 hex digits.
  std::string hash() const;

  void validate() const;
};

std::vector<std::string> preset_names();
/// Named study configurations; throws std::invalid_argument for unknown names.
ExperimentConfig preset(std::string_view name);

/// "1-8", "0,1,2,3", "3" -> list of layer counts.
std::vector<std::size_t> parse_layer_list(std::string_view text);

struct GraphCase {
  std::string id;
  std::string family;  // "er-p0.3", "3-regular"
  double density = 0.0;  // nominal edge probability, or realized density
  std::uint64_t seed = 0;
  Graph graph;
};

/// Deterministic graph ensemble for the suite.
std::vector<GraphCase> generate_suite(const GraphSuite& suite);

/// Seed of the optimizer for one graph and depth; independent of the problem
/// kind and penalties so that paired runs share their initial angles.
std::uint64_t cell_seed(std::uint64_t base_seed, std::size_t graph_index,
                        std::size_t layers);

struct CellSpec {
  std::size_t graph_index = 0;
  ProblemKind kind = ProblemKind::MaxPC;
  std::optional<Penalties> penalties;
  std::size_t layers = 1;

  std::string name(const std::vector<GraphCase>& graphs) const;
};

/// One probability-table line.
struct ProbabilityEntry {
  std::uint64_t state = 0;
  double probability = 0.0;
  double postprocessed = 0.0;
};

struct CellResult {
  std::vector<MetricsRow> rows;  // raw, then postprocessed
  std::string trace_csv;         // empty at depth 0
  std::vector<ProbabilityEntry> probabilities;
  QaoaParams best_params;
};

/// QAOA at one depth for one (graph, kind, penalties): optimize, take the
/// final distribution, post-process it, and score both against exact tiers.
CellResult run_cell(const GraphCase& graph, std::size_t graph_index, ProblemKind kind,
                    const std::optional<Penalties>& penalties, std::size_t layers,
                    const OptimizerConfig& optimizer, const std::string& config_hash,
                    bool want_probabilities = false);

std::vector<CellSpec> plan_cells(const ExperimentConfig& config,
                                 const std::vector<GraphCase>& graphs);

struct SuiteReport {
  std::size_t cells = 0;
  std::size_t failures = 0;
  std::vector<MetricsRow> rows;
  std::vector<std::string> notes;
};

using LogSink = std::function<void(const std::string&)>;

/// Runs every cell (in parallel with config.workers threads), writes per-cell
/// files atomically, then the aggregated metrics.csv, summary.csv and the
/// resolved config into config.out_dir.
SuiteReport run_suite(const ExperimentConfig& config, const LogSink& log = {});

/// Mean and sample standard deviation per (family, n, kind, variant,
/// penalties, p) group, in first-appearance order.
std::string summarize_csv(const std::vector<MetricsRow>& rows);

/// Write-to-temp-then-rename.
void write_file_atomic(const std::string& path, const std::string& contents);

}  // namespace pfqaoa
