#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "pfqaoa/exact.hpp"
#include "pfqaoa/experiment.hpp"
#include "pfqaoa/hamiltonian.hpp"
#include "pfqaoa/metrics.hpp"
#include "pfqaoa/postprocess.hpp"
#include "pfqaoa/random.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace pfqaoa;

namespace {

struct RunOptions {
  std::string graph;
  std::string kind = "maxpc";
  std::size_t layers = 1;
  std::uint64_t seed = 0;
  std::size_t iterations = 200;
  std::string optimizer = "rmsprop";
  double learning_rate = 0.01;
  std::optional<double> penalty_a;
  std::optional<double> penalty_b;
  std::string out = "run";
};

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GraphCase load_case(const std::string& path) {
  Graph g = read_edge_list_file(path);
  const double density = g.density();
  return {fs::path(path).stem().string(), "file", density, 0, std::move(g)};
}

std::optional<Penalties> penalties_for(ProblemKind kind, const RunOptions& o) {
  if (!is_constrained(kind)) {
    if (o.penalty_a || o.penalty_b)
      throw std::invalid_argument("penalties only apply to minvc, maxis and maxcl");
    return std::nullopt;
  }
  const Penalties d = Penalties::defaults();
  return Penalties(o.penalty_a.value_or(d.a()), o.penalty_b.value_or(d.b()));
}

OptimizerConfig optimizer_for(const RunOptions& o) {
  OptimizerConfig c;
  c.method = parse_optimizer_method(o.optimizer);
  c.iterations = o.iterations;
  c.learning_rate = o.learning_rate;
  c.seed = o.seed;
  c.validate();
  return c;
}

// Resolved settings of a single run; its hash tags every row the run emits.
ExperimentConfig single_run_config(ProblemKind kind, const std::optional<Penalties>& pen,
                                   const RunOptions& o) {
  ExperimentConfig c;
  c.name = "run-qaoa";
  c.kinds = {kind};
  if (pen) c.penalty_grid = {*pen};
  c.layers = {o.layers};
  c.optimizer = optimizer_for(o);
  c.out_dir = o.out;
  return c;
}

json row_json(const MetricsRow& r) {
  json j;
  j["variant"] = r.variant;
  j["sp_opt"] = r.summed[0];
  j["sp_opt_1"] = r.summed[1];
  j["sp_opt_2"] = r.summed[2];
  j["ratio"] = r.ratio ? json(*r.ratio) : json(nullptr);
  j["expectation"] = r.expectation;
  j["optimum"] = r.optimum;
  return j;
}

void add_run_flags(CLI::App* cmd, RunOptions& o) {
  cmd->add_option("--layers,--p", o.layers, "QAOA depth (0 = uniform state)");
  cmd->add_option("--seed", o.seed, "Optimizer seed");
  cmd->add_option("--iterations", o.iterations, "Optimizer iterations");
  cmd->add_option("--optimizer", o.optimizer, "rmsprop or gd");
  cmd->add_option("--learning-rate", o.learning_rate, "Optimizer step size");
  cmd->add_option("--penalty-a", o.penalty_a, "Constraint penalty A");
  cmd->add_option("--penalty-b", o.penalty_b, "Size weight B");
}

int cmd_generate(std::size_t n, std::optional<double> density, std::optional<std::size_t> regular,
                 std::size_t count, std::uint64_t seed, const std::string& out) {
  if (density.has_value() == regular.has_value())
    throw std::invalid_argument("give exactly one of --density or --regular");
  GraphSuite suite;
  suite.sizes = {n};
  suite.count = count;
  suite.seed = seed;
  if (regular) {
    suite.family = GraphFamily::Regular;
    suite.degree = *regular;
    suite.densities.clear();
  } else {
    suite.family = GraphFamily::ErdosRenyi;
    suite.densities = {*density};
  }
  fs::create_directories(out);
  for (const GraphCase& c : generate_suite(suite)) {
    const fs::path path = fs::path(out) / (c.id + ".txt");
    write_file_atomic(path.string(), serialize_edge_list(c.graph));
    std::cout << path.string() << '\n';
  }
  return 0;
}

int cmd_solve_exact(const std::string& graph_path, const std::string& out) {
  const Graph g = read_edge_list_file(graph_path);
  json j;
  j["graph"] = graph_path;
  j["n"] = g.num_vertices();
  j["edges"] = g.num_edges();
  const std::pair<const char*, ProblemKind> keys[] = {
      {"minVC", ProblemKind::MinVC}, {"maxIS", ProblemKind::MaxIS},
      {"maxClique", ProblemKind::MaxCl}, {"maxPC", ProblemKind::MaxPC},
      {"maxPI", ProblemKind::MaxPI}, {"maxPCl", ProblemKind::MaxPCl}};
  for (const auto& [key, kind] : keys) {
    const ExactResult r = exact_solve(kind, g);
    j[key] = {{"value", r.optimum}, {"witness", r.witness}};
  }
  const std::string text = j.dump(2) + "\n";
  if (out.empty())
    std::cout << text;
  else
    write_file_atomic(out, text);
  return 0;
}

int cmd_run_qaoa(const RunOptions& o) {
  const ProblemKind kind = parse_problem_kind(o.kind);
  const std::optional<Penalties> pen = penalties_for(kind, o);
  const ExperimentConfig config = single_run_config(kind, pen, o);
  const GraphCase graph = load_case(o.graph);
  const std::string hash = config.hash();
  const CellResult r =
      run_cell(graph, 0, kind, pen, o.layers, config.optimizer, hash, true);

  const fs::path out(o.out);
  fs::create_directories(out);
  const ProblemInstance instance(kind, graph.graph, pen);
  const std::size_t n = graph.graph.num_vertices();

  std::string dist = "bitstring,probability,cost,postprocessed_probability\n";
  for (const ProbabilityEntry& e : r.probabilities) {
    const Assignment a(n, e.state);
    dist += fmt::format("{},{},{},{}\n", a.to_string(), e.probability,
                        qubo_cost(instance, a), e.postprocessed);
  }
  write_file_atomic((out / "distribution.csv").string(), dist);
  if (!r.trace_csv.empty()) write_file_atomic((out / "trace.csv").string(), r.trace_csv);
  write_file_atomic((out / "resolved_config.ini").string(), config.to_text());

  json j;
  j["graph"] = graph.id;
  j["n"] = n;
  j["kind"] = std::string(to_string(kind));
  if (pen) j["penalties"] = {{"a", pen->a()}, {"b", pen->b()}};
  j["layers"] = o.layers;
  j["seed"] = o.seed;
  j["config_hash"] = hash;
  j["gammas"] = r.best_params.gammas;
  j["betas"] = r.best_params.betas;
  j["rows"] = json::array();
  for (const MetricsRow& row : r.rows) j["rows"].push_back(row_json(row));
  write_file_atomic((out / "result.json").string(), j.dump(2) + "\n");

  std::cout << MetricsRow::csv_header() << '\n';
  for (const MetricsRow& row : r.rows) std::cout << row.to_csv() << '\n';
  return 0;
}

// Scores a bitstring,probability CSV (as written by run-qaoa) for a graph and kind.
int cmd_metrics(const std::string& graph_path, const std::string& kind_name,
                const std::string& dist_path, std::optional<double> pa, std::optional<double> pb) {
  const ProblemKind kind = parse_problem_kind(kind_name);
  RunOptions o;
  o.penalty_a = pa;
  o.penalty_b = pb;
  const std::optional<Penalties> pen = penalties_for(kind, o);
  const GraphCase graph = load_case(graph_path);
  const Graph& g = graph.graph;
  const std::size_t n = g.num_vertices();

  std::vector<double> probs(std::size_t{1} << n, 0.0);
  std::istringstream in(read_text(dist_path));
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line.rfind("bitstring", 0) == 0) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument(fmt::format("line {}: expected bitstring,probability", line_no));
    const Assignment a = Assignment::from_string(line.substr(0, comma));
    if (a.size() != n)
      throw std::invalid_argument(fmt::format("line {}: bitstring length differs from n", line_no));
    const auto end = line.find(',', comma + 1);
    probs[a.bits()] = std::stod(line.substr(comma + 1, end - comma - 1));
  }
  const OutcomeDistribution dist(n, probs);

  const ProblemInstance instance(kind, g, pen);
  double exp = 0.0;
  for (std::uint64_t x = 0; x < probs.size(); ++x)
    exp += probs[x] * qubo_cost(instance, Assignment(n, x));

  const SolutionTiers own = enumerate_tiers(kind, g);
  const ProblemKind target = constrained_counterpart(kind);
  const SolutionTiers target_tiers = enumerate_tiers(target, g);
  const std::vector<double> mapped = postprocess_distribution(g, kind, probs);

  json j;
  j["graph"] = graph.id;
  j["kind"] = std::string(to_string(kind));
  j["expectation"] = exp;
  j["optimum"] = *own.tiers[0].value;
  if (!is_constrained(kind) && *own.tiers[0].value != 0)
    j["ratio"] = approximation_ratio(exp, 0.0, static_cast<double>(*own.tiers[0].value));
  for (std::size_t d = 0; d < 3; ++d) {
    j["raw"].push_back(summed_probability(dist, own, d));
    j["postprocessed"].push_back(summed_probability(mapped, target_tiers, d));
  }
  std::cout << j.dump(2) << '\n';
  return 0;
}

// Constrained kind with penalties vs its profit relaxation, same graph and seed.
int cmd_compare(RunOptions o) {
  const ProblemKind constrained = constrained_counterpart(parse_problem_kind(o.kind));
  const ProblemKind profit = profit_counterpart(constrained);
  const GraphCase graph = load_case(o.graph);
  const std::optional<Penalties> pen = penalties_for(constrained, o);
  const OptimizerConfig oc = optimizer_for(o);

  std::string csv = MetricsRow::csv_header() + "\n";
  o.penalty_a.reset();
  o.penalty_b.reset();
  for (auto [kind, p] : {std::pair{constrained, pen}, std::pair{profit, std::optional<Penalties>{}}}) {
    RunOptions ko = o;
    if (p) {
      ko.penalty_a = p->a();
      ko.penalty_b = p->b();
    }
    const std::string hash = single_run_config(kind, p, ko).hash();
    const CellResult r = run_cell(graph, 0, kind, p, o.layers, oc, hash);
    for (const MetricsRow& row : r.rows) csv += row.to_csv() + "\n";
  }
  if (o.out.empty() || o.out == "-") {
    std::cout << csv;
  } else {
    write_file_atomic(o.out, csv);
    std::cout << o.out << '\n';
  }
  return 0;
}

int cmd_anomaly(std::optional<std::string> graph_path, std::size_t n, double density,
                std::uint64_t seed, std::size_t tries, double a, double b) {
  const Penalties pen(a, b);
  auto report = [&](const std::string& id, const Graph& g, const PenaltyAnomaly& r) {
    json j;
    j["graph"] = id;
    j["anomalous"] = r.anomalous;
    j["lowest_cost"] = r.lowest_cost;
    j["second_cost"] = r.second_cost;
    std::vector<std::string> states;
    for (std::uint64_t x : r.second_cost_states)
      states.push_back(Assignment(g.num_vertices(), x).to_string());
    j["second_cost_states"] = states;
    j["next_feasible_cost"] = r.next_feasible_cost ? json(*r.next_feasible_cost) : json(nullptr);
    if (r.anomalous) j["edge_list"] = serialize_edge_list(g);
    std::cout << j.dump(2) << '\n';
  };
  if (graph_path) {
    const Graph g = read_edge_list_file(*graph_path);
    const PenaltyAnomaly r = detect_penalty_anomaly(g, pen);
    report(*graph_path, g, r);
    return r.anomalous ? 0 : 1;
  }
  for (std::size_t i = 0; i < tries; ++i) {
    const std::uint64_t s = derive_seed(seed, n, i);
    const Graph g = gen_erdos_renyi_connected(n, density, s);
    const PenaltyAnomaly r = detect_penalty_anomaly(g, pen);
    if (r.anomalous) {
      report(fmt::format("er-n{}-p{}-seed{}", n, density, s), g, r);
      return 0;
    }
  }
  std::cerr << "no anomalous graph found\n";
  return 1;
}

struct SuiteOptions {
  std::optional<std::string> preset;
  std::optional<std::string> config;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> workers;
  std::optional<std::string> out;
  std::optional<std::string> kind;
  std::optional<std::size_t> n;
  std::optional<double> density;
  std::optional<double> penalty_a;
  std::optional<double> penalty_b;
  std::optional<std::string> layers;
  std::optional<std::size_t> iterations;
  std::optional<std::string> optimizer;
  bool print_only = false;
};

int cmd_suite(const SuiteOptions& o) {
  if (o.preset && o.config) throw std::invalid_argument("give --preset or --config, not both");
  ExperimentConfig c;
  if (o.preset) c = preset(*o.preset);
  if (o.config) c = ExperimentConfig::from_text(read_text(*o.config));
  if (o.seed) {
    c.suite.seed = *o.seed;
    c.optimizer.seed = *o.seed;
  }
  if (o.workers) c.workers = *o.workers;
  if (o.out) c.out_dir = *o.out;
  if (o.kind) {
    c.kinds.clear();
    std::stringstream ss(*o.kind);
    for (std::string k; std::getline(ss, k, ',');) c.kinds.push_back(parse_problem_kind(k));
  }
  if (o.n) c.suite.sizes = {*o.n};
  if (o.density) c.suite.densities = {*o.density};
  if (o.penalty_a || o.penalty_b) {
    const Penalties d = Penalties::defaults();
    c.penalty_grid = {Penalties(o.penalty_a.value_or(d.a()), o.penalty_b.value_or(d.b()))};
  }
  if (o.layers) c.layers = parse_layer_list(*o.layers);
  if (o.iterations) c.optimizer.iterations = *o.iterations;
  if (o.optimizer) c.optimizer.method = parse_optimizer_method(*o.optimizer);
  c.validate();
  if (o.print_only) {
    std::cout << c.to_text();
    return 0;
  }
  const SuiteReport report =
      run_suite(c, [](const std::string& msg) { std::cerr << msg << '\n'; });
  return report.failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Penalty-free QAOA for vertex cover, independent set and clique"};
  app.require_subcommand(1);

  std::size_t gen_n = 8, gen_count = 1;
  std::optional<double> gen_density;
  std::optional<std::size_t> gen_regular;
  std::uint64_t gen_seed = 1;
  std::string gen_out = "graphs";
  auto* gen = app.add_subcommand("generate", "Write seeded connected random graphs");
  gen->add_option("--n", gen_n, "Vertices")->required();
  gen->add_option("--density", gen_density, "Erdos-Renyi edge probability");
  gen->add_option("--regular", gen_regular, "Degree of a random regular graph");
  gen->add_option("--count", gen_count, "Number of graphs");
  gen->add_option("--seed", gen_seed, "Base seed");
  gen->add_option("--out", gen_out, "Output directory");

  std::string solve_graph, solve_out;
  auto* solve = app.add_subcommand("solve-exact", "Exact optima of all six kinds as JSON");
  solve->add_option("graph", solve_graph, "Edge-list file")->required();
  solve->add_option("--out", solve_out, "Write JSON here instead of stdout");

  RunOptions run;
  auto* run_cmd = app.add_subcommand("run-qaoa", "Optimize and score QAOA on one graph");
  run_cmd->add_option("--graph", run.graph, "Edge-list file")->required();
  run_cmd->add_option("--kind", run.kind, "minvc, maxis, maxcl, maxpc, maxpi or maxpcl");
  run_cmd->add_option("--out", run.out, "Output directory");
  add_run_flags(run_cmd, run);

  std::string met_graph, met_kind = "maxpc", met_dist;
  std::optional<double> met_a, met_b;
  auto* met = app.add_subcommand("metrics", "Score a probability CSV against exact tiers");
  met->add_option("--graph", met_graph, "Edge-list file")->required();
  met->add_option("--kind", met_kind, "Problem kind the distribution was produced for");
  met->add_option("--distribution", met_dist, "CSV with bitstring,probability columns")
      ->required();
  met->add_option("--penalty-a", met_a, "Constraint penalty A");
  met->add_option("--penalty-b", met_b, "Size weight B");

  RunOptions cmp;
  cmp.kind = "minvc";
  cmp.out = "-";
  auto* cmp_cmd = app.add_subcommand("compare", "Penalty vs profit formulation, same seed");
  cmp_cmd->add_option("--graph", cmp.graph, "Edge-list file")->required();
  cmp_cmd->add_option("--kind", cmp.kind, "Either member of the pair, e.g. minvc or maxpc");
  cmp_cmd->add_option("--out", cmp.out, "CSV file (default stdout)");
  add_run_flags(cmp_cmd, cmp);

  SuiteOptions suite;
  auto* suite_cmd = app.add_subcommand("suite", "Run a preset or configured study");
  suite_cmd->add_option("--preset", suite.preset, "One of the named presets");
  suite_cmd->add_option("--config", suite.config, "Configuration file");
  suite_cmd->add_option("--seed", suite.seed, "Base seed for graphs and optimizer");
  suite_cmd->add_option("--workers", suite.workers, "Parallel worker threads");
  suite_cmd->add_option("--out", suite.out, "Output directory");
  suite_cmd->add_option("--kind", suite.kind, "Comma-separated problem kinds");
  suite_cmd->add_option("--n", suite.n, "Graph size");
  suite_cmd->add_option("--density", suite.density, "Erdos-Renyi edge probability");
  suite_cmd->add_option("--penalty-a", suite.penalty_a, "Constraint penalty A");
  suite_cmd->add_option("--penalty-b", suite.penalty_b, "Size weight B");
  suite_cmd->add_option("--layers", suite.layers, "Depths, e.g. 1-8 or 0,1,2");
  suite_cmd->add_option("--iterations", suite.iterations, "Optimizer iterations");
  suite_cmd->add_option("--optimizer", suite.optimizer, "rmsprop or gd");
  suite_cmd->add_flag("--print-config", suite.print_only, "Print the resolved config and exit");

  auto* presets_cmd = app.add_subcommand("presets", "List the named study presets");

  std::optional<std::string> an_graph;
  std::size_t an_n = 6, an_tries = 200;
  double an_density = 0.5, an_a = 3, an_b = 2;
  std::uint64_t an_seed = 1;
  auto* an = app.add_subcommand("anomaly", "Find a graph whose second-best QUBO cost is infeasible");
  an->add_option("--graph", an_graph, "Check this edge-list file instead of searching");
  an->add_option("--n", an_n, "Vertices of searched graphs");
  an->add_option("--density", an_density, "Edge probability of searched graphs");
  an->add_option("--seed", an_seed, "Search seed");
  an->add_option("--tries", an_tries, "Graphs to try");
  an->add_option("--penalty-a", an_a, "Constraint penalty A");
  an->add_option("--penalty-b", an_b, "Size weight B");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) return cmd_generate(gen_n, gen_density, gen_regular, gen_count, gen_seed, gen_out);
    if (*solve) return cmd_solve_exact(solve_graph, solve_out);
    if (*run_cmd) return cmd_run_qaoa(run);
    if (*met) return cmd_metrics(met_graph, met_kind, met_dist, met_a, met_b);
    if (*cmp_cmd) return cmd_compare(cmp);
    if (*suite_cmd) return cmd_suite(suite);
    if (*presets_cmd) {
      for (const std::string& name : preset_names()) std::cout << name << '\n';
      return 0;
    }
    if (*an) return cmd_anomaly(an_graph, an_n, an_density, an_seed, an_tries, an_a, an_b);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
