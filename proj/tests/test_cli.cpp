#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "pfqaoa/experiment.hpp"
#include "support.hpp"

namespace fs = std::filesystem;
using namespace pfqaoa;

namespace {

const fs::path kWork = fs::temp_directory_path() / "pfqaoa-cli-test";

int run(const std::string& args) {
  const std::string cmd = std::string(PFQAOA_CLI) + " " + args + " > " +
                          (kWork / "stdout.txt").string() + " 2> " +
                          (kWork / "stderr.txt").string();
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Workspace {
  Workspace() {
    fs::remove_all(kWork);
    fs::create_directories(kWork);
  }
  ~Workspace() { fs::remove_all(kWork); }
};

}  // namespace

TEST_CASE_FIXTURE(Workspace, "generate writes regular graphs") {
  REQUIRE(run("generate --regular 3 --n 8 --count 10 --seed 1 --out " + (kWork / "g").string()) == 0);
  std::size_t files = 0;
  for (const auto& entry : fs::directory_iterator(kWork / "g")) {
    ++files;
    const Graph g = read_edge_list_file(entry.path().string());
    CHECK(g.num_vertices() == 8);
    for (Vertex v = 0; v < 8; ++v) CHECK(g.degree(v) == 3);
  }
  CHECK(files == 10);
  CHECK(run("generate --n 8 --out " + (kWork / "g").string()) != 0);
}

TEST_CASE_FIXTURE(Workspace, "solve-exact reports all six optima") {
  const fs::path graph = kWork / "c5.txt";
  write_edge_list_file(testing::cycle(5), graph.string());
  REQUIRE(run("solve-exact " + graph.string()) == 0);
  const auto j = nlohmann::json::parse(slurp(kWork / "stdout.txt"));
  const Graph c5 = testing::cycle(5);
  const std::pair<const char*, ProblemKind> keys[] = {
      {"minVC", ProblemKind::MinVC}, {"maxIS", ProblemKind::MaxIS},
      {"maxClique", ProblemKind::MaxCl}, {"maxPC", ProblemKind::MaxPC},
      {"maxPI", ProblemKind::MaxPI}, {"maxPCl", ProblemKind::MaxPCl}};
  for (const auto& [key, kind] : keys) {
    CAPTURE(key);
    CHECK(j[key]["value"].get<long>() == testing::oracle_optimum(kind, c5));
    const auto w = j[key]["witness"].get<std::vector<Vertex>>();
    const Assignment a = Assignment::from_vertices(5, w);
    CHECK(is_feasible(constrained_counterpart(kind), c5, a));
    CHECK(objective_value(kind, c5, a) == j[key]["value"].get<long>());
  }
  CHECK(run("solve-exact " + (kWork / "missing.txt").string()) != 0);
}

TEST_CASE_FIXTURE(Workspace, "run-qaoa is deterministic") {
  const fs::path graph = kWork / "g.txt";
  write_edge_list_file(gen_erdos_renyi_connected(5, 0.5, 3), graph.string());
  const std::string args = "run-qaoa --graph " + graph.string() +
                           " --kind maxpc --p 3 --seed 7 --iterations 40 --out " +
                           (kWork / "r").string();
  REQUIRE(run(args) == 0);
  std::map<std::string, std::string> first;
  for (const char* f : {"trace.csv", "distribution.csv", "result.json", "resolved_config.ini"})
    first[f] = slurp(kWork / "r" / f);
  REQUIRE(run(args) == 0);
  for (const auto& [f, text] : first) {
    CAPTURE(f);
    CHECK_FALSE(text.empty());
    CHECK(slurp(kWork / "r" / f) == text);
  }
  const auto j = nlohmann::json::parse(first["result.json"]);
  CHECK(j["layers"] == 3);
  CHECK(j["gammas"].size() == 3);

  REQUIRE(run("metrics --graph " + graph.string() + " --kind maxpc --distribution " +
              (kWork / "r" / "distribution.csv").string()) == 0);
  const auto m = nlohmann::json::parse(slurp(kWork / "stdout.txt"));
  CHECK(m["raw"][0].get<double>() == doctest::Approx(j["rows"][0]["sp_opt"].get<double>()));
  CHECK(m["postprocessed"][0].get<double>() ==
        doctest::Approx(j["rows"][1]["sp_opt"].get<double>()));
  CHECK(m["ratio"].get<double>() == doctest::Approx(j["rows"][0]["ratio"].get<double>()));
}

TEST_CASE_FIXTURE(Workspace, "compare pairs both formulations on one seed") {
  const fs::path graph = kWork / "g.txt";
  write_edge_list_file(gen_erdos_renyi_connected(5, 0.5, 4), graph.string());
  REQUIRE(run("compare --graph " + graph.string() +
              " --kind minvc --p 1 --seed 2 --iterations 20 --out " +
              (kWork / "cmp.csv").string()) == 0);
  const std::string csv = slurp(kWork / "cmp.csv");
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
  CHECK(csv.find(",minvc,raw,3,2,") != std::string::npos);
  CHECK(csv.find(",maxpc,postprocessed,,,") != std::string::npos);
}

TEST_CASE_FIXTURE(Workspace, "suite with overrides") {
  const fs::path out = kWork / "suite";
  REQUIRE(run("suite --preset fig11 --n 4 --density 0.5 --layers 0-1 --iterations 5 "
              "--workers 2 --out " + out.string()) == 0);
  CHECK(fs::exists(out / "metrics.csv"));
  CHECK(fs::exists(out / "summary.csv"));
  const ExperimentConfig c = ExperimentConfig::from_text(slurp(out / "resolved_config.ini"));
  CHECK(c.suite.sizes == std::vector<std::size_t>{4});
  CHECK(c.optimizer.iterations == 5);
  CHECK(c.workers == 2);

  const fs::path cfg = kWork / "study.ini";
  std::ofstream(cfg) << "[suite]\nsizes = 4\ndensities = 0.5\ncount = 1\n[problems]\n"
                        "kinds = maxpi\n[qaoa]\nlayers = 1\n[optimizer]\niterations = 3\n";
  REQUIRE(run("suite --config " + cfg.string() + " --out " + (kWork / "s2").string()) == 0);
  CHECK(fs::exists(kWork / "s2" / "cells" / "er-n4-p0.5-g00__maxpi__p1.csv"));

  REQUIRE(run("suite --preset fig5 --print-config") == 0);
  CHECK(slurp(kWork / "stdout.txt").find("[optimizer]") != std::string::npos);
}

TEST_CASE_FIXTURE(Workspace, "usage errors exit nonzero") {
  CHECK(run("") != 0);
  CHECK(run("no-such-command") != 0);
  CHECK(run("suite --preset fig99") != 0);
  CHECK(run("run-qaoa --kind maxpc") != 0);
  CHECK(run("suite --preset fig3 --preset fig5") != 0);
  const fs::path graph = kWork / "g.txt";
  write_edge_list_file(Graph::complete(3), graph.string());
  CHECK(run("run-qaoa --graph " + graph.string() + " --kind maxpc --penalty-a 3") != 0);
  CHECK(run("run-qaoa --graph " + graph.string() + " --kind vertexcover") != 0);
}

TEST_CASE_FIXTURE(Workspace, "anomaly search") {
  REQUIRE(run("anomaly --n 6 --density 0.5 --seed 1") == 0);
  const auto j = nlohmann::json::parse(slurp(kWork / "stdout.txt"));
  CHECK(j["anomalous"] == true);
  CHECK(j["second_cost"].get<double>() > j["lowest_cost"].get<double>());
}
