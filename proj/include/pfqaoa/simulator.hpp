#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "pfqaoa/hamiltonian.hpp"

namespace pfqaoa {

using Amplitude = std::complex<double>;

/// Dense n-qubit state; amplitude index bit v is qubit v.
class Statevector {
 public:
  /// |0...0>. Throws ResourceError above the qubit cap.
  explicit Statevector(std::size_t n, std::size_t qubit_cap = kDefaultQubitCap);

  /// Equal superposition 2^(-n/2) on every basis state.
  static Statevector uniform(std::size_t n, std::size_t qubit_cap = kDefaultQubitCap);

  std::size_t num_qubits() const { return n_; }
  std::size_t dimension() const { return amps_.size(); }
  std::span<Amplitude> amplitudes() { return amps_; }
  std::span<const Amplitude> amplitudes() const { return amps_; }
  Amplitude operator[](std::uint64_t i) const { return amps_[i]; }

  double norm() const;

 private:
  std::size_t n_;
  std::vector<Amplitude> amps_;
};

/// Angles of a depth-p circuit, layer-major: layer l applies gammas[l] then
/// betas[l].
struct QaoaParams {
  std::vector<double> gammas;
  std::vector<double> betas;

  QaoaParams() = default;
  /// Throws std::invalid_argument unless both have the same length >= 1.
  QaoaParams(std::vector<double> gammas, std::vector<double> betas);

  std::size_t layers() const { return gammas.size(); }
  /// [gamma_1..gamma_p, beta_1..beta_p]
  std::vector<double> flatten() const;
  static QaoaParams unflatten(std::span<const double> flat);
};

/// amp[x] *= exp(-i gamma values[x]); the constant offset is a global phase
/// and is not applied.
void apply_cost_layer(Statevector& state, const DiagonalHamiltonian& diag, double gamma);

/// exp(-i beta sum_j X_j), applied qubit by qubit.
void apply_mixer_layer(Statevector& state, double beta);

/// p alternating cost/mixer layers on the uniform state, cost first.
Statevector run_qaoa(const DiagonalHamiltonian& diag, const QaoaParams& params);

/// sum_x |amp_x|^2 values[x], plus the offset when requested.
double expectation(const Statevector& state, const DiagonalHamiltonian& diag,
                   bool include_offset);

/// |amp_x|^2 for every basis state.
std::vector<double> probabilities(const Statevector& state);

/// Seeded measurement in the computational basis; returns basis index ->
/// count for the outcomes that occurred.
std::map<std::uint64_t, std::size_t> sample(const Statevector& state,
                                            std::size_t shots, std::uint64_t seed);

}  // namespace pfqaoa
