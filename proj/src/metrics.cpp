#include "pfqaoa/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

#include <fmt/format.h>

#include "pfqaoa/hamiltonian.hpp"

namespace pfqaoa {

OutcomeDistribution::OutcomeDistribution(std::size_t n, std::vector<double> probs,
                                         Provenance meta)
    : n_(n), probs_(std::move(probs)), meta_(std::move(meta)) {
  if (n >= 64 || probs_.size() != (std::size_t{1} << n))
    throw std::invalid_argument("distribution must have 2^n entries");
  double total = 0.0;
  for (double p : probs_) {
    if (!(p >= 0.0)) throw std::invalid_argument("negative probability");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9)
    throw std::invalid_argument(fmt::format("probabilities sum to {}, not 1", total));
}

SolutionTiers enumerate_tiers(ProblemKind kind, const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n > kTierEnumerationMaxVertices)
    throw ResourceError("tier enumeration supports at most " +
                        std::to_string(kTierEnumerationMaxVertices) + " vertices");
  const std::uint64_t dim = std::uint64_t{1} << n;

  SolutionTiers out;
  out.kind = kind;
  out.n = n;

  std::vector<long> value(dim);
  std::vector<char> feasible(dim);
  for (std::uint64_t x = 0; x < dim; ++x) {
    const Assignment a(n, x);
    feasible[x] = is_feasible(kind, g, a);
    value[x] = objective_value(kind, g, a);
  }

  if (!is_constrained(kind)) {
    std::set<long, std::greater<>> distinct(value.begin(), value.end());
    auto it = distinct.begin();
    for (std::size_t t = 0; t < 3 && it != distinct.end(); ++t, ++it)
      out.tiers[t].value = *it;
  } else {
    const bool minimize = kind == ProblemKind::MinVC;
    long best = minimize ? std::numeric_limits<long>::max()
                         : std::numeric_limits<long>::min();
    for (std::uint64_t x = 0; x < dim; ++x)
      if (feasible[x]) best = minimize ? std::min(best, value[x]) : std::max(best, value[x]);
    for (std::size_t t = 0; t < 3; ++t) {
      const long shift = static_cast<long>(t);
      out.tiers[t].value = minimize ? best + shift : best - shift;
    }
  }

  for (std::uint64_t x = 0; x < dim; ++x) {
    if (!feasible[x]) continue;
    for (auto& tier : out.tiers)
      if (tier.value && *tier.value == value[x]) tier.members.push_back(x);
  }
  return out;
}

double summed_probability(const std::vector<double>& probs, const SolutionTiers& tiers,
                          std::size_t depth) {
  if (depth > 2) throw std::invalid_argument("tier depth must be 0, 1 or 2");
  if (probs.size() != (std::size_t{1} << tiers.n))
    throw std::invalid_argument("distribution and tiers have different sizes");
  double sum = 0.0;
  for (std::size_t t = 0; t <= depth; ++t)
    for (std::uint64_t x : tiers.tiers[t].members) sum += probs[x];
  return sum;
}

double summed_probability(const OutcomeDistribution& dist, const SolutionTiers& tiers,
                          std::size_t depth) {
  return summed_probability(dist.probabilities(), tiers, depth);
}

double approximation_ratio(double expectation_no_offset, double offset,
                           double optimal_profit) {
  if (optimal_profit == 0.0)
    throw std::domain_error("approximation ratio undefined for zero optimal profit");
  return std::abs(expectation_no_offset + offset) / std::abs(optimal_profit);
}

PenaltyAnomaly detect_penalty_anomaly(const Graph& g, const Penalties& penalties) {
  const std::size_t n = g.num_vertices();
  if (n > kTierEnumerationMaxVertices)
    throw ResourceError("penalty anomaly search enumerates at most " +
                        std::to_string(kTierEnumerationMaxVertices) + " vertices");
  const std::uint64_t dim = std::uint64_t{1} << n;
  constexpr double kTol = 1e-9;

  std::vector<double> cost(dim);
  std::vector<char> feasible(dim);
  for (std::uint64_t x = 0; x < dim; ++x) {
    const Assignment a(n, x);
    cost[x] = qubo_cost(ProblemKind::MinVC, g, penalties, a);
    feasible[x] = is_vertex_cover(g, a);
  }

  PenaltyAnomaly out;
  out.lowest_cost = *std::min_element(cost.begin(), cost.end());
  double second = std::numeric_limits<double>::infinity();
  for (double c : cost)
    if (c > out.lowest_cost + kTol) second = std::min(second, c);
  if (!std::isfinite(second)) return out;
  out.second_cost = second;

  bool any_feasible = false;
  for (std::uint64_t x = 0; x < dim; ++x) {
    if (std::abs(cost[x] - second) <= kTol) {
      out.second_cost_states.push_back(x);
      any_feasible = any_feasible || feasible[x];
    }
    if (feasible[x] && cost[x] > out.lowest_cost + kTol &&
        (!out.next_feasible_cost || cost[x] < *out.next_feasible_cost))
      out.next_feasible_cost = cost[x];
  }
  out.anomalous = !any_feasible;
  return out;
}

std::string MetricsRow::csv_header() {
  return "graph_id,family,n,density,kind,variant,penalty_a,penalty_b,lambda,p,seed,"
         "config_hash,sp_opt,sp_opt_1,sp_opt_2,ratio,expectation,optimum";
}

std::string MetricsRow::to_csv() const {
  std::string pa, pb, lam, r;
  if (penalties) {
    pa = fmt::format("{}", penalties->a());
    pb = fmt::format("{}", penalties->b());
    lam = fmt::format("{}", penalties->lambda());
  }
  if (ratio) r = fmt::format("{}", *ratio);
  return fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
                     graph_id, family, n, density, kind, variant, pa, pb, lam, layers,
                     seed, config_hash, summed[0], summed[1], summed[2], r,
                     expectation, optimum);
}

}  // namespace pfqaoa
