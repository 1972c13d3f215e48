#include "pfqaoa/optimizer.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "pfqaoa/random.hpp"

namespace pfqaoa {

std::string_view to_string(OptimizerMethod method) {
  return method == OptimizerMethod::RMSProp ? "rmsprop" : "gd";
}

OptimizerMethod parse_optimizer_method(std::string_view name) {
  if (name == "rmsprop") return OptimizerMethod::RMSProp;
  if (name == "gd" || name == "gradient-descent") return OptimizerMethod::GradientDescent;
  throw std::invalid_argument("unknown optimizer '" + std::string(name) + "'");
}

void OptimizerConfig::validate() const {
  if (!(learning_rate > 0.0)) throw std::invalid_argument("learning_rate must be > 0");
  if (!(rms_decay > 0.0 && rms_decay < 1.0))
    throw std::invalid_argument("rms_decay must lie in (0, 1)");
  if (!(epsilon >= 0.0)) throw std::invalid_argument("epsilon must be >= 0");
  if (iterations < 1) throw std::invalid_argument("iterations must be >= 1");
  if (!(fd_step > 0.0)) throw std::invalid_argument("fd_step must be > 0");
  if (init == InitStrategy::Fixed && !initial_params)
    throw std::invalid_argument("fixed initialization needs initial_params");
}

std::vector<double> fd_gradient(const Objective& f, std::span<const double> x, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("finite-difference step must be > 0");
  std::vector<double> probe(x.begin(), x.end());
  std::vector<double> grad(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    probe[i] = x[i] + h;
    const double up = f(probe);
    probe[i] = x[i] - h;
    const double down = f(probe);
    probe[i] = x[i];
    grad[i] = (up - down) / (2.0 * h);
  }
  return grad;
}

namespace {

void check_dims(std::span<const double> params, std::span<const double> grad) {
  if (params.size() != grad.size())
    throw std::invalid_argument("parameter and gradient sizes differ");
}

}  // namespace

std::vector<double> gd_step(std::span<const double> params,
                            std::span<const double> grad, double learning_rate) {
  check_dims(params, grad);
  std::vector<double> out(params.size());
  for (std::size_t i = 0; i < params.size(); ++i)
    out[i] = params[i] - learning_rate * grad[i];
  return out;
}

std::vector<double> rmsprop_step(std::span<const double> params,
                                 std::span<const double> grad, RmsPropState& state,
                                 double learning_rate, double rho, double epsilon) {
  check_dims(params, grad);
  if (state.mean_square.empty()) state.mean_square.assign(params.size(), 0.0);
  if (state.mean_square.size() != params.size())
    throw std::invalid_argument("RMSProp state has the wrong dimension");
  std::vector<double> out(params.size());
  for (std::size_t i = 0; i < params.size(); ++i) {
    double& s = state.mean_square[i];
    s = rho * s + (1.0 - rho) * grad[i] * grad[i];
    out[i] = params[i] - learning_rate * grad[i] / (std::sqrt(s) + epsilon);
  }
  return out;
}

std::string OptimizationTrace::to_csv() const {
  std::string out = "iteration,expectation_no_offset,expectation_with_offset";
  const std::size_t p = entries.empty() ? 0 : entries.front().params.size() / 2;
  for (std::size_t l = 1; l <= p; ++l) out += fmt::format(",gamma_{}", l);
  for (std::size_t l = 1; l <= p; ++l) out += fmt::format(",beta_{}", l);
  out += '\n';
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const TraceEntry& e = entries[i];
    out += fmt::format("{},{},{}", i, e.expectation, e.expectation_with_offset);
    for (double v : e.params) out += fmt::format(",{}", v);
    out += '\n';
  }
  return out;
}

QaoaParams initial_params(std::size_t layers, const OptimizerConfig& config) {
  if (layers == 0) throw std::invalid_argument("QAOA needs p >= 1 layers");
  if (config.init == InitStrategy::Fixed) {
    if (!config.initial_params || config.initial_params->layers() != layers)
      throw std::invalid_argument("fixed initial parameters do not match the layer count");
    return *config.initial_params;
  }
  Rng rng(config.seed);
  std::vector<double> gammas(layers), betas(layers);
  for (std::size_t l = 0; l < layers; ++l) {
    gammas[l] = std::numbers::pi * unit_uniform(rng);
    betas[l] = 0.5 * std::numbers::pi * unit_uniform(rng);
  }
  return QaoaParams(std::move(gammas), std::move(betas));
}

OptimizationResult optimize(const DiagonalHamiltonian& diag, std::size_t layers,
                            const OptimizerConfig& config) {
  config.validate();
  const Objective objective = [&diag](std::span<const double> flat) {
    return expectation(run_qaoa(diag, QaoaParams::unflatten(flat)), diag, false);
  };
  auto checked = [&](std::span<const double> flat, std::size_t iteration) {
    const double value = objective(flat);
    if (!std::isfinite(value))
      throw OptimizationError(
          fmt::format("non-finite expectation at iteration {}", iteration));
    return value;
  };

  std::vector<double> params = initial_params(layers, config).flatten();
  OptimizationTrace trace;
  trace.entries.reserve(config.iterations + 1);
  RmsPropState rms;

  for (std::size_t it = 0; it <= config.iterations; ++it) {
    const double value = checked(params, it);
    trace.entries.push_back({params, value, value + diag.offset});
    if (value < trace.entries[trace.best_index].expectation) trace.best_index = it;
    if (it == config.iterations) break;

    const std::vector<double> grad = fd_gradient(objective, params, config.fd_step);
    for (double g : grad)
      if (!std::isfinite(g))
        throw OptimizationError(
            fmt::format("non-finite gradient at iteration {}", it));
    params = config.method == OptimizerMethod::RMSProp
                 ? rmsprop_step(params, grad, rms, config.learning_rate,
                                config.rms_decay, config.epsilon)
                 : gd_step(params, grad, config.learning_rate);
  }

  const TraceEntry& best = trace.entries[trace.best_index];
  OptimizationResult result;
  result.best_params = QaoaParams::unflatten(best.params);
  result.best_expectation = best.expectation;
  result.best_expectation_with_offset = best.expectation_with_offset;
  result.trace = std::move(trace);
  return result;
}

}  // namespace pfqaoa
