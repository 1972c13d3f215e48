#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pfqaoa/graph.hpp"
#include "pfqaoa/problems.hpp"

namespace pfqaoa {

/// Where a distribution came from; carried into every exported row.
struct Provenance {
  std::string graph_id;
  std::string kind;
  std::size_t layers = 0;
  std::uint64_t seed = 0;
  std::string config_hash;
};

/// Probability per basis state (2^n entries, bit v = vertex v).
class OutcomeDistribution {
 public:
  /// Throws std::invalid_argument on a size other than 2^n, negative entries,
  /// or a total mass further than 1e-9 from one.
  OutcomeDistribution(std::size_t n, std::vector<double> probs, Provenance meta = {});

  std::size_t num_vertices() const { return n_; }
  const std::vector<double>& probabilities() const { return probs_; }
  double operator[](std::uint64_t x) const { return probs_[x]; }
  const Provenance& provenance() const { return meta_; }

 private:
  std::size_t n_;
  std::vector<double> probs_;
  Provenance meta_;
};

/// Optimal and two near-optimal solution tiers, enumerated exhaustively.
///
/// Profit kinds: the three best distinct profit values. Constrained kinds:
/// feasible subsets of optimal size, then one and two vertices worse (larger
/// for MinVC, smaller for MaxIS/MaxCl). A tier may be empty.
struct SolutionTiers {
  struct Tier {
    std::optional<long> value;  // unset when the tier does not exist
    std::vector<std::uint64_t> members;  // ascending
  };

  ProblemKind kind = ProblemKind::MinVC;
  std::size_t n = 0;
  std::array<Tier, 3> tiers;
};

inline constexpr std::size_t kTierEnumerationMaxVertices = 20;

SolutionTiers enumerate_tiers(ProblemKind kind, const Graph& g);

/// Probability mass of tiers 0..depth, each state counted once.
double summed_probability(const std::vector<double>& probs, const SolutionTiers& tiers,
                          std::size_t depth);
double summed_probability(const OutcomeDistribution& dist, const SolutionTiers& tiers,
                          std::size_t depth);

/// |expectation + offset| / |optimal profit|. Throws std::domain_error when the
/// optimal profit is zero.
double approximation_ratio(double expectation_no_offset, double offset,
                           double optimal_profit);

/// Whether the second-lowest distinct vertex-cover QUBO value is reached only
/// by infeasible assignments.
struct PenaltyAnomaly {
  bool anomalous = false;
  double lowest_cost = 0.0;
  double second_cost = 0.0;
  std::vector<std::uint64_t> second_cost_states;
  /// Lowest QUBO value among feasible non-optimal covers, if any.
  std::optional<double> next_feasible_cost;
};

PenaltyAnomaly detect_penalty_anomaly(const Graph& g, const Penalties& penalties);

/// One exported metrics row.
struct MetricsRow {
  std::string graph_id;
  std::string family;  // e.g. "er-p0.3" or "3-regular"
  std::size_t n = 0;
  double density = 0.0;
  std::string kind;
  std::string variant;  // "raw" or "postprocessed"
  std::optional<Penalties> penalties;
  std::size_t layers = 0;
  std::uint64_t seed = 0;
  std::string config_hash;
  std::array<double, 3> summed{};  // SP_OPT, SP_OPT-1, SP_OPT-2
  std::optional<double> ratio;
  double expectation = 0.0;  // with offset
  long optimum = 0;

  static std::string csv_header();
  std::string to_csv() const;
};

}  // namespace pfqaoa
