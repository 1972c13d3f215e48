#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pfqaoa/hamiltonian.hpp"
#include "pfqaoa/simulator.hpp"

namespace pfqaoa {

enum class OptimizerMethod { GradientDescent, RMSProp };

std::string_view to_string(OptimizerMethod method);
OptimizerMethod parse_optimizer_method(std::string_view name);

enum class InitStrategy {
  /// gamma_l ~ U[0, pi), beta_l ~ U[0, pi/2), seeded.
  Random,
  /// Use OptimizerConfig::initial_params verbatim.
  Fixed,
};

struct OptimizerConfig {
  OptimizerMethod method = OptimizerMethod::RMSProp;
  double learning_rate = 0.01;
  double rms_decay = 0.9;
  double epsilon = 1e-8;
  std::size_t iterations = 200;
  double fd_step = 1e-3;
  InitStrategy init = InitStrategy::Random;
  std::uint64_t seed = 0;
  std::optional<QaoaParams> initial_params;

  /// Throws std::invalid_argument on out-of-range settings.
  void validate() const;
};

class OptimizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Objective = std::function<double(std::span<const double>)>;

/// Central differences (f(x + h e_i) - f(x - h e_i)) / 2h per coordinate.
std::vector<double> fd_gradient(const Objective& f, std::span<const double> x, double h);

struct RmsPropState {
  std::vector<double> mean_square;
};

std::vector<double> gd_step(std::span<const double> params,
                            std::span<const double> grad, double learning_rate);

/// s <- rho s + (1 - rho) g^2;  x <- x - lr g / (sqrt(s) + eps)
std::vector<double> rmsprop_step(std::span<const double> params,
                                 std::span<const double> grad, RmsPropState& state,
                                 double learning_rate, double rho, double epsilon);

struct TraceEntry {
  std::vector<double> params;  // flattened [gammas..., betas...]
  double expectation = 0.0;    // offset-free
  double expectation_with_offset = 0.0;
};

struct OptimizationTrace {
  std::vector<TraceEntry> entries;  // iterations + 1, initial point first
  std::size_t best_index = 0;

  /// CSV: iteration, both expectations, gamma_1..gamma_p, beta_1..beta_p.
  std::string to_csv() const;
};

struct OptimizationResult {
  QaoaParams best_params;
  double best_expectation = 0.0;  // offset-free
  double best_expectation_with_offset = 0.0;
  OptimizationTrace trace;
};

/// Initial angles for `layers` layers per the config's strategy.
QaoaParams initial_params(std::size_t layers, const OptimizerConfig& config);

/// Minimizes the offset-free expectation over 2p angles and returns the best
/// point seen together with the full trace. Throws OptimizationError if the
/// objective becomes non-finite.
OptimizationResult optimize(const DiagonalHamiltonian& diag, std::size_t layers,
                            const OptimizerConfig& config);

}  // namespace pfqaoa
