#include "pfqaoa/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pfqaoa/random.hpp"

namespace pfqaoa {

Statevector::Statevector(std::size_t n, std::size_t qubit_cap) : n_(n) {
  if (n == 0) throw std::invalid_argument("statevector needs at least one qubit");
  if (n > qubit_cap)
    throw ResourceError(std::to_string(n) + " qubits exceed the cap of " +
                        std::to_string(qubit_cap));
  amps_.assign(std::size_t{1} << n, Amplitude{0.0, 0.0});
  amps_[0] = 1.0;
}

Statevector Statevector::uniform(std::size_t n, std::size_t qubit_cap) {
  Statevector s(n, qubit_cap);
  const double a = std::pow(2.0, -0.5 * static_cast<double>(n));
  std::fill(s.amps_.begin(), s.amps_.end(), Amplitude{a, 0.0});
  return s;
}

double Statevector::norm() const {
  double sum = 0.0;
  for (const Amplitude& a : amps_) sum += std::norm(a);
  return std::sqrt(sum);
}

QaoaParams::QaoaParams(std::vector<double> g, std::vector<double> b)
    : gammas(std::move(g)), betas(std::move(b)) {
  if (gammas.empty() || gammas.size() != betas.size())
    throw std::invalid_argument("QAOA needs equally many gammas and betas (p >= 1)");
}

std::vector<double> QaoaParams::flatten() const {
  std::vector<double> flat(gammas);
  flat.insert(flat.end(), betas.begin(), betas.end());
  return flat;
}

QaoaParams QaoaParams::unflatten(std::span<const double> flat) {
  if (flat.size() % 2 != 0)
    throw std::invalid_argument("flattened QAOA parameters must have even length");
  const std::size_t p = flat.size() / 2;
  return QaoaParams({flat.begin(), flat.begin() + static_cast<std::ptrdiff_t>(p)},
                    {flat.begin() + static_cast<std::ptrdiff_t>(p), flat.end()});
}

namespace {

void check_match(const Statevector& state, const DiagonalHamiltonian& diag) {
  if (state.dimension() != diag.dimension())
    throw std::invalid_argument("statevector and Hamiltonian sizes differ");
}

}  // namespace

void apply_cost_layer(Statevector& state, const DiagonalHamiltonian& diag, double gamma) {
  check_match(state, diag);
  if (gamma == 0.0) return;
  auto amps = state.amplitudes();
  for (std::size_t x = 0; x < amps.size(); ++x)
    amps[x] *= std::polar(1.0, -gamma * diag.values[x]);
}

void apply_mixer_layer(Statevector& state, double beta) {
  if (beta == 0.0) return;
  const double c = std::cos(beta);
  const double s = std::sin(beta);
  const Amplitude minus_is{0.0, -s};
  auto amps = state.amplitudes();
  const std::size_t dim = amps.size();
  for (std::size_t q = 0; q < state.num_qubits(); ++q) {
    const std::size_t stride = std::size_t{1} << q;
    for (std::size_t block = 0; block < dim; block += 2 * stride) {
      for (std::size_t i = block; i < block + stride; ++i) {
        const Amplitude a0 = amps[i];
        const Amplitude a1 = amps[i + stride];
        amps[i] = c * a0 + minus_is * a1;
        amps[i + stride] = minus_is * a0 + c * a1;
      }
    }
  }
}

Statevector run_qaoa(const DiagonalHamiltonian& diag, const QaoaParams& params) {
  if (params.layers() == 0 || params.gammas.size() != params.betas.size())
    throw std::invalid_argument("QAOA needs p >= 1 layers");
  Statevector state = Statevector::uniform(diag.n);
  for (std::size_t layer = 0; layer < params.layers(); ++layer) {
    apply_cost_layer(state, diag, params.gammas[layer]);
    apply_mixer_layer(state, params.betas[layer]);
  }
  return state;
}

double expectation(const Statevector& state, const DiagonalHamiltonian& diag,
                   bool include_offset) {
  check_match(state, diag);
  auto amps = state.amplitudes();
  double sum = 0.0;
  for (std::size_t x = 0; x < amps.size(); ++x)
    sum += std::norm(amps[x]) * diag.values[x];
  return include_offset ? sum + diag.offset : sum;
}

std::vector<double> probabilities(const Statevector& state) {
  auto amps = state.amplitudes();
  std::vector<double> probs(amps.size());
  std::transform(amps.begin(), amps.end(), probs.begin(),
                 [](const Amplitude& a) { return std::norm(a); });
  return probs;
}

std::map<std::uint64_t, std::size_t> sample(const Statevector& state,
                                            std::size_t shots, std::uint64_t seed) {
  const std::vector<double> probs = probabilities(state);
  std::vector<double> cdf(probs.size());
  double running = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    running += probs[i];
    cdf[i] = running;
  }
  Rng rng(seed);
  std::map<std::uint64_t, std::size_t> counts;
  for (std::size_t shot = 0; shot < shots; ++shot) {
    const double u = unit_uniform(rng) * running;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    if (it == cdf.end()) --it;
    ++counts[static_cast<std::uint64_t>(it - cdf.begin())];
  }
  return counts;
}

}  // namespace pfqaoa
