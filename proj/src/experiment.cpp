#include "pfqaoa/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <fmt/format.h>

#include "pfqaoa/exact.hpp"
#include "pfqaoa/hamiltonian.hpp"
#include "pfqaoa/postprocess.hpp"
#include "pfqaoa/random.hpp"
#include "pfqaoa/simulator.hpp"

namespace fs = std::filesystem;

namespace pfqaoa {

namespace {

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r";
  auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  while (true) {
    auto pos = s.find(sep);
    std::string_view part = trim(s.substr(0, pos));
    if (!part.empty()) parts.push_back(part);
    if (pos == std::string_view::npos) break;
    s.remove_prefix(pos + 1);
  }
  return parts;
}

template <typename T>
T parse_number(std::string_view s, std::string_view what) {
  T value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw std::invalid_argument(fmt::format("invalid {} '{}'", what, s));
  return value;
}

// from_chars for double is missing from some standard libraries.
double parse_double(std::string_view s, std::string_view what) {
  std::string text(s);
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size())
    throw std::invalid_argument(fmt::format("invalid {} '{}'", what, s));
  return value;
}

bool parse_bool(std::string_view s) {
  if (s == "true" || s == "1" || s == "yes") return true;
  if (s == "false" || s == "0" || s == "no") return false;
  throw std::invalid_argument(fmt::format("invalid boolean '{}'", s));
}

template <typename T, typename F>
std::string join(const std::vector<T>& items, F&& render) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ',';
    out += render(items[i]);
  }
  return out;
}

std::string family_name(GraphFamily f) {
  return f == GraphFamily::Regular ? "regular" : "erdos-renyi";
}

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string results_text(const ExperimentConfig& c) {
  const GraphSuite& s = c.suite;
  const OptimizerConfig& o = c.optimizer;
  std::string out;
  out += fmt::format("name = {}\n\n", c.name);
  out += "[suite]\n";
  out += fmt::format("generator = {}\n", family_name(s.family));
  out += fmt::format("sizes = {}\n", join(s.sizes, [](auto v) { return fmt::format("{}", v); }));
  out += fmt::format("densities = {}\n",
                     join(s.densities, [](auto v) { return fmt::format("{}", v); }));
  out += fmt::format("degree = {}\n", s.degree);
  out += fmt::format("count = {}\n", s.count);
  out += fmt::format("seed = {}\n\n", s.seed);
  out += "[problems]\n";
  out += fmt::format("kinds = {}\n",
                     join(c.kinds, [](auto k) { return std::string(to_string(k)); }));
  out += fmt::format("penalties = {}\n", join(c.penalty_grid, [](const Penalties& p) {
                       return fmt::format("{}:{}", p.a(), p.b());
                     }));
  out += "\n[qaoa]\n";
  out += fmt::format("layers = {}\n", join(c.layers, [](auto v) { return fmt::format("{}", v); }));
  out += fmt::format("probability_table = {}\n\n", c.probability_table);
  out += "[optimizer]\n";
  out += fmt::format("method = {}\n", to_string(o.method));
  out += fmt::format("learning_rate = {}\n", o.learning_rate);
  out += fmt::format("rms_decay = {}\n", o.rms_decay);
  out += fmt::format("epsilon = {}\n", o.epsilon);
  out += fmt::format("iterations = {}\n", o.iterations);
  out += fmt::format("fd_step = {}\n", o.fd_step);
  out += fmt::format("seed = {}\n", o.seed);
  return out;
}

}  // namespace

std::vector<std::size_t> parse_layer_list(std::string_view text) {
  std::vector<std::size_t> layers;
  for (std::string_view part : split(text, ',')) {
    auto dash = part.find('-');
    if (dash == std::string_view::npos) {
      layers.push_back(parse_number<std::size_t>(part, "layer count"));
      continue;
    }
    auto lo = parse_number<std::size_t>(trim(part.substr(0, dash)), "layer range");
    auto hi = parse_number<std::size_t>(trim(part.substr(dash + 1)), "layer range");
    if (hi < lo) throw std::invalid_argument(fmt::format("empty layer range '{}'", part));
    for (std::size_t p = lo; p <= hi; ++p) layers.push_back(p);
  }
  if (layers.empty()) throw std::invalid_argument("no layers given");
  return layers;
}

std::string ExperimentConfig::to_text() const {
  return "# pfqaoa experiment configuration\n" + results_text(*this) +
         fmt::format("\n[run]\nout = {}\nworkers = {}\n", out_dir, workers);
}

std::string ExperimentConfig::hash() const {
  return fmt::format("{:016x}", fnv1a(results_text(*this)));
}

ExperimentConfig ExperimentConfig::from_text(std::string_view text,
                                             const ExperimentConfig& base) {
  ExperimentConfig c = base;
  std::string section;
  std::size_t line_no = 0;
  for (std::string_view raw : split(text, '\n')) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#' || line.front() == ';') continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw std::invalid_argument(fmt::format("malformed section header '{}'", line));
      section = std::string(trim(line.substr(1, line.size() - 2)));
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw std::invalid_argument(fmt::format("expected key = value, got '{}'", line));
    const std::string key = section.empty()
                                ? std::string(trim(line.substr(0, eq)))
                                : section + "." + std::string(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));

    if (key == "name") {
      c.name = std::string(value);
    } else if (key == "suite.generator") {
      if (value == "erdos-renyi" || value == "er")
        c.suite.family = GraphFamily::ErdosRenyi;
      else if (value == "regular")
        c.suite.family = GraphFamily::Regular;
      else
        throw std::invalid_argument(fmt::format("unknown generator '{}'", value));
    } else if (key == "suite.sizes") {
      c.suite.sizes.clear();
      for (auto v : split(value, ',')) c.suite.sizes.push_back(parse_number<std::size_t>(v, "size"));
    } else if (key == "suite.densities") {
      c.suite.densities.clear();
      for (auto v : split(value, ',')) c.suite.densities.push_back(parse_double(v, "density"));
    } else if (key == "suite.degree") {
      c.suite.degree = parse_number<std::size_t>(value, "degree");
    } else if (key == "suite.count") {
      c.suite.count = parse_number<std::size_t>(value, "count");
    } else if (key == "suite.seed") {
      c.suite.seed = parse_number<std::uint64_t>(value, "seed");
    } else if (key == "problems.kinds") {
      c.kinds.clear();
      for (auto v : split(value, ',')) c.kinds.push_back(parse_problem_kind(v));
    } else if (key == "problems.penalties") {
      c.penalty_grid.clear();
      for (auto v : split(value, ',')) {
        auto colon = v.find(':');
        if (colon == std::string_view::npos)
          throw std::invalid_argument(fmt::format("penalties must be A:B, got '{}'", v));
        c.penalty_grid.emplace_back(parse_double(trim(v.substr(0, colon)), "penalty A"),
                                    parse_double(trim(v.substr(colon + 1)), "penalty B"));
      }
    } else if (key == "qaoa.layers") {
      c.layers = parse_layer_list(value);
    } else if (key == "qaoa.probability_table") {
      c.probability_table = parse_bool(value);
    } else if (key == "optimizer.method") {
      c.optimizer.method = parse_optimizer_method(value);
    } else if (key == "optimizer.learning_rate") {
      c.optimizer.learning_rate = parse_double(value, "learning rate");
    } else if (key == "optimizer.rms_decay") {
      c.optimizer.rms_decay = parse_double(value, "rms decay");
    } else if (key == "optimizer.epsilon") {
      c.optimizer.epsilon = parse_double(value, "epsilon");
    } else if (key == "optimizer.iterations") {
      c.optimizer.iterations = parse_number<std::size_t>(value, "iterations");
    } else if (key == "optimizer.fd_step") {
      c.optimizer.fd_step = parse_double(value, "fd step");
    } else if (key == "optimizer.seed") {
      c.optimizer.seed = parse_number<std::uint64_t>(value, "seed");
    } else if (key == "run.out") {
      c.out_dir = std::string(value);
    } else if (key == "run.workers") {
      c.workers = parse_number<std::size_t>(value, "workers");
    } else {
      throw std::invalid_argument(fmt::format("line {}: unknown key '{}'", line_no, key));
    }
  }
  return c;
}

ExperimentConfig ExperimentConfig::from_text(std::string_view text) {
  return from_text(text, ExperimentConfig{});
}

void ExperimentConfig::validate() const {
  if (suite.sizes.empty()) throw std::invalid_argument("suite needs at least one size");
  if (suite.count == 0) throw std::invalid_argument("suite count must be positive");
  if (suite.family == GraphFamily::ErdosRenyi && suite.densities.empty())
    throw std::invalid_argument("Erdos-Renyi suite needs densities");
  if (kinds.empty()) throw std::invalid_argument("no problem kinds selected");
  if (layers.empty()) throw std::invalid_argument("no layers selected");
  if (workers == 0) throw std::invalid_argument("workers must be positive");
  for (ProblemKind k : kinds)
    if (is_constrained(k) && penalty_grid.empty())
      throw std::invalid_argument("constrained kinds need a penalty grid");
  for (std::size_t n : suite.sizes)
    if (n > kBruteForceMaxVertices || n > kDefaultQubitCap)
      throw std::invalid_argument(fmt::format("graph size {} is too large for exact scoring", n));
  optimizer.validate();
}

std::vector<std::string> preset_names() {
  return {"fig3", "fig5", "fig6", "fig7-demo", "fig11", "fig12", "penalty-sweep"};
}

ExperimentConfig preset(std::string_view name) {
  ExperimentConfig c;
  c.name = std::string(name);
  const std::vector<ProblemKind> all(std::begin(kAllKinds), std::end(kAllKinds));
  if (name == "fig3") {
    // One small graph; per-state probabilities for MinVC at several penalty
    // weights next to raw and post-processed MaxPC.
    c.suite = {GraphFamily::ErdosRenyi, {5}, {0.5}, 3, 1, 3};
    c.kinds = {ProblemKind::MinVC, ProblemKind::MaxPC};
    c.penalty_grid = {{3, 2}, {5, 2}, {8, 2}};
    c.layers = {1, 2, 3};
    c.probability_table = true;
  } else if (name == "fig5") {
    c.suite = {GraphFamily::ErdosRenyi, {8}, {0.1, 0.3, 0.5, 0.8}, 3, 10, 5};
    c.kinds = all;
    c.layers = parse_layer_list("1-8");
  } else if (name == "fig6") {
    c.suite = {GraphFamily::Regular, {8}, {}, 3, 10, 6};
    c.kinds = all;
    c.layers = parse_layer_list("1-8");
  } else if (name == "fig7-demo") {
    c.suite = {GraphFamily::ErdosRenyi, {8}, {0.1, 0.3, 0.5, 0.8}, 3, 3, 7};
    c.kinds = {ProblemKind::MinVC, ProblemKind::MaxPC};
    c.layers = parse_layer_list("1-8");
  } else if (name == "fig11") {
    c.suite = {GraphFamily::ErdosRenyi, {7, 8}, {0.1, 0.3, 0.5, 0.8}, 3, 10, 11};
    c.kinds = {ProblemKind::MaxPC};
    c.layers = parse_layer_list("0-8");
  } else if (name == "fig12") {
    c.suite = {GraphFamily::Regular, {8, 10, 12, 14}, {}, 3, 10, 12};
    c.kinds = {ProblemKind::MaxPC};
    c.layers = parse_layer_list("0-3");
  } else if (name == "penalty-sweep") {
    c.suite = {GraphFamily::ErdosRenyi, {8}, {0.1, 0.3, 0.5, 0.8}, 3, 10, 13};
    c.kinds = {ProblemKind::MinVC, ProblemKind::MaxIS, ProblemKind::MaxCl};
    c.penalty_grid = {{3, 2}, {4, 2}, {5, 2}, {6, 2}, {8, 2}};
    c.layers = parse_layer_list("1-8");
  } else {
    throw std::invalid_argument(fmt::format("unknown preset '{}'", name));
  }
  return c;
}

std::vector<GraphCase> generate_suite(const GraphSuite& suite) {
  std::vector<GraphCase> out;
  for (std::size_t n : suite.sizes) {
    if (suite.family == GraphFamily::Regular) {
      for (std::size_t i = 0; i < suite.count; ++i) {
        const std::uint64_t seed = derive_seed(suite.seed, n * 1000 + suite.degree, i);
        Graph g = gen_regular(n, suite.degree, seed);
        const double density = g.density();
        out.push_back({fmt::format("reg{}-n{}-g{:02}", suite.degree, n, i),
                       fmt::format("{}-regular", suite.degree), density, seed, std::move(g)});
      }
      continue;
    }
    for (std::size_t d = 0; d < suite.densities.size(); ++d) {
      const double p = suite.densities[d];
      for (std::size_t i = 0; i < suite.count; ++i) {
        const std::uint64_t seed = derive_seed(suite.seed, n * 1000 + d, i);
        out.push_back({fmt::format("er-n{}-p{}-g{:02}", n, p, i), fmt::format("er-p{}", p),
                       p, seed, gen_erdos_renyi_connected(n, p, seed)});
      }
    }
  }
  return out;
}

std::uint64_t cell_seed(std::uint64_t base_seed, std::size_t graph_index,
                        std::size_t layers) {
  return derive_seed(base_seed, graph_index, layers);
}

std::string CellSpec::name(const std::vector<GraphCase>& graphs) const {
  std::string out = graphs.at(graph_index).id + "__" + std::string(to_string(kind));
  if (penalties) out += fmt::format("-A{}-B{}", penalties->a(), penalties->b());
  return out + fmt::format("__p{}", layers);
}

std::vector<CellSpec> plan_cells(const ExperimentConfig& config,
                                 const std::vector<GraphCase>& graphs) {
  std::vector<CellSpec> cells;
  for (std::size_t gi = 0; gi < graphs.size(); ++gi)
    for (ProblemKind kind : config.kinds)
      for (std::size_t p : config.layers) {
        if (is_constrained(kind)) {
          for (const Penalties& pen : config.penalty_grid) cells.push_back({gi, kind, pen, p});
        } else {
          cells.push_back({gi, kind, std::nullopt, p});
        }
      }
  return cells;
}

CellResult run_cell(const GraphCase& graph, std::size_t graph_index, ProblemKind kind,
                    const std::optional<Penalties>& penalties, std::size_t layers,
                    const OptimizerConfig& optimizer, const std::string& config_hash,
                    bool want_probabilities) {
  (void)graph_index;
  const Graph& g = graph.graph;
  const ProblemInstance instance(kind, g, penalties);
  const DiagonalHamiltonian diag = build_diagonal(build_ising(instance));

  CellResult out;
  Statevector state = Statevector::uniform(g.num_vertices());
  if (layers > 0) {
    OptimizationResult opt = optimize(diag, layers, optimizer);
    out.trace_csv = opt.trace.to_csv();
    out.best_params = opt.best_params;
    state = run_qaoa(diag, opt.best_params);
  }
  const std::vector<double> probs = probabilities(state);
  const double exp_no_offset = expectation(state, diag, false);

  const SolutionTiers own = enumerate_tiers(kind, g);
  const long optimum = own.tiers[0].value.value();
  const ExactResult exact = exact_solve(kind, g);
  if (exact.optimum != optimum)
    throw std::logic_error(fmt::format("{}: exact solver optimum {} differs from enumeration {}",
                                       graph.id, exact.optimum, optimum));

  MetricsRow raw;
  raw.graph_id = graph.id;
  raw.family = graph.family;
  raw.n = g.num_vertices();
  raw.density = graph.density;
  raw.kind = std::string(to_string(kind));
  raw.variant = "raw";
  raw.penalties = penalties;
  raw.layers = layers;
  raw.seed = optimizer.seed;
  raw.config_hash = config_hash;
  for (std::size_t d = 0; d < 3; ++d) raw.summed[d] = summed_probability(probs, own, d);
  raw.expectation = exp_no_offset + diag.offset;
  raw.optimum = optimum;
  if (!is_constrained(kind) && optimum != 0)
    raw.ratio = approximation_ratio(exp_no_offset, diag.offset, static_cast<double>(optimum));

  const ProblemKind target = constrained_counterpart(kind);
  const SolutionTiers target_tiers = target == kind ? own : enumerate_tiers(target, g);
  const std::vector<double> mapped = postprocess_distribution(g, kind, probs);
  MetricsRow post = raw;
  post.variant = "postprocessed";
  post.ratio.reset();
  post.optimum = target_tiers.tiers[0].value.value();
  for (std::size_t d = 0; d < 3; ++d) post.summed[d] = summed_probability(mapped, target_tiers, d);

  out.rows = {std::move(raw), std::move(post)};
  if (want_probabilities) {
    out.probabilities.reserve(probs.size());
    for (std::uint64_t x = 0; x < probs.size(); ++x)
      out.probabilities.push_back({x, probs[x], mapped[x]});
  }
  return out;
}

void write_file_atomic(const std::string& path, const std::string& contents) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp);
    out << contents;
    if (!out.flush()) throw std::runtime_error("write failed for " + tmp);
  }
  fs::rename(tmp, path);
}

namespace {

struct Stats {
  double mean = 0.0;
  double stddev = 0.0;
};

Stats stats(const std::vector<double>& xs) {
  Stats s;
  if (xs.empty()) return s;
  for (double x : xs) s.mean += x;
  s.mean /= static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double ss = 0.0;
    for (double x : xs) ss += (x - s.mean) * (x - s.mean);
    s.stddev = std::sqrt(ss / static_cast<double>(xs.size() - 1));
  }
  return s;
}

std::string probability_csv(const std::string& cell, const CellSpec& spec,
                            const GraphCase& graph, const CellResult& r) {
  std::string out;
  for (const ProbabilityEntry& e : r.probabilities)
    out += fmt::format("{},{},{},{},{},{},{},{}\n", cell, graph.id, to_string(spec.kind),
                       spec.layers,
                       Assignment(graph.graph.num_vertices(), e.state).to_string(),
                       profit_cover(graph.graph, Assignment(graph.graph.num_vertices(), e.state)),
                       e.probability, e.postprocessed);
  return out;
}

constexpr std::string_view kProbabilityHeader =
    "cell,graph_id,kind,p,bitstring,profit_cover,probability,postprocessed_probability\n";

}  // namespace

std::string summarize_csv(const std::vector<MetricsRow>& rows) {
  struct Group {
    const MetricsRow* first = nullptr;
    std::vector<double> sp[3];
    std::vector<double> ratio;
    std::vector<double> expectation;
  };
  std::vector<std::string> order;
  std::map<std::string, Group> groups;
  for (const MetricsRow& r : rows) {
    std::string key = fmt::format("{}|{}|{}|{}|{}|{}|{}", r.family, r.n, r.kind, r.variant,
                                  r.penalties ? r.penalties->a() : 0.0,
                                  r.penalties ? r.penalties->b() : 0.0, r.layers);
    auto [it, inserted] = groups.try_emplace(key);
    if (inserted) {
      order.push_back(key);
      it->second.first = &r;
    }
    for (int d = 0; d < 3; ++d) it->second.sp[d].push_back(r.summed[d]);
    if (r.ratio) it->second.ratio.push_back(*r.ratio);
    it->second.expectation.push_back(r.expectation);
  }

  std::string out =
      "family,n,kind,variant,penalty_a,penalty_b,p,graphs,sp_opt_mean,sp_opt_std,"
      "sp_opt_1_mean,sp_opt_1_std,sp_opt_2_mean,sp_opt_2_std,ratio_mean,ratio_std,"
      "ratio_count,expectation_mean,expectation_std\n";
  for (const std::string& key : order) {
    const Group& g = groups.at(key);
    const MetricsRow& r = *g.first;
    std::string pa, pb;
    if (r.penalties) {
      pa = fmt::format("{}", r.penalties->a());
      pb = fmt::format("{}", r.penalties->b());
    }
    const Stats s0 = stats(g.sp[0]), s1 = stats(g.sp[1]), s2 = stats(g.sp[2]);
    const Stats e = stats(g.expectation);
    std::string ratio_cols = ",,0";
    if (!g.ratio.empty()) {
      const Stats rs = stats(g.ratio);
      ratio_cols = fmt::format("{},{},{}", rs.mean, rs.stddev, g.ratio.size());
    }
    out += fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n", r.family, r.n,
                       r.kind, r.variant, pa, pb, r.layers, g.sp[0].size(), s0.mean,
                       s0.stddev, s1.mean, s1.stddev, s2.mean, s2.stddev, ratio_cols, e.mean,
                       e.stddev);
  }
  return out;
}

SuiteReport run_suite(const ExperimentConfig& config, const LogSink& log) {
  config.validate();
  std::mutex log_mutex;
  auto say = [&](const std::string& msg) {
    if (!log) return;
    std::lock_guard lock(log_mutex);
    log(msg);
  };

  const fs::path root(config.out_dir);
  fs::create_directories(root / "graphs");
  fs::create_directories(root / "cells");
  fs::create_directories(root / "traces");
  const std::string hash = config.hash();
  write_file_atomic((root / "resolved_config.ini").string(), config.to_text());

  const std::vector<GraphCase> graphs = generate_suite(config.suite);
  for (const GraphCase& g : graphs)
    write_file_atomic((root / "graphs" / (g.id + ".txt")).string(),
                      serialize_edge_list(g.graph));

  const std::vector<CellSpec> cells = plan_cells(config, graphs);
  std::vector<std::optional<CellResult>> results(cells.size());
  std::atomic<std::size_t> next{0};
  say(fmt::format("{}: {} graphs, {} cells, config {}", config.name, graphs.size(),
                  cells.size(), hash));

  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      const CellSpec& spec = cells[i];
      const std::string name = spec.name(graphs);
      try {
        OptimizerConfig oc = config.optimizer;
        oc.seed = cell_seed(config.optimizer.seed, spec.graph_index, spec.layers);
        CellResult r = run_cell(graphs[spec.graph_index], spec.graph_index, spec.kind,
                                spec.penalties, spec.layers, oc, hash,
                                config.probability_table);
        std::string csv = MetricsRow::csv_header() + "\n";
        for (const MetricsRow& row : r.rows) csv += row.to_csv() + "\n";
        write_file_atomic((root / "cells" / (name + ".csv")).string(), csv);
        if (!r.trace_csv.empty())
          write_file_atomic((root / "traces" / (name + ".csv")).string(), r.trace_csv);
        results[i] = std::move(r);
      } catch (const std::exception& e) {
        say(fmt::format("cell {} failed: {}", name, e.what()));
      }
    }
  };
  const std::size_t threads = std::min(config.workers, std::max<std::size_t>(cells.size(), 1));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  SuiteReport report;
  report.cells = cells.size();
  std::string metrics = MetricsRow::csv_header() + "\n";
  std::string probs(kProbabilityHeader);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (!results[i]) {
      ++report.failures;
      continue;
    }
    const CellSpec& spec = cells[i];
    for (const MetricsRow& row : results[i]->rows) {
      metrics += row.to_csv() + "\n";
      report.rows.push_back(row);
      if (row.variant == "raw" && !is_constrained(spec.kind) && !row.ratio)
        report.notes.push_back(fmt::format(
            "{}: optimal profit is zero; excluded from approximation ratios", row.graph_id));
    }
    if (config.probability_table)
      probs += probability_csv(spec.name(graphs), spec, graphs[spec.graph_index], *results[i]);
  }
  write_file_atomic((root / "metrics.csv").string(), metrics);
  write_file_atomic((root / "summary.csv").string(), summarize_csv(report.rows));
  if (config.probability_table) write_file_atomic((root / "probabilities.csv").string(), probs);
  for (const std::string& note : report.notes) say(note);
  say(fmt::format("{}: {} of {} cells succeeded", config.name,
                  report.cells - report.failures, report.cells));
  return report;
}

}  // namespace pfqaoa
