#include "doctest.h"

#include <cmath>
#include <numbers>

#include "pfqaoa/simulator.hpp"
#include "support.hpp"

using namespace pfqaoa;
using Matrix = std::vector<std::vector<Amplitude>>;

namespace {

constexpr Amplitude kI{0.0, 1.0};

Matrix identity(std::size_t d) {
  Matrix m(d, std::vector<Amplitude>(d, 0.0));
  for (std::size_t i = 0; i < d; ++i) m[i][i] = 1.0;
  return m;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t d = a.size();
  Matrix c(d, std::vector<Amplitude>(d, 0.0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t j = 0; j < d; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

// Kronecker product with `a` acting on the higher-order bits.
Matrix kron(const Matrix& a, const Matrix& b) {
  const std::size_t da = a.size(), db = b.size();
  Matrix c(da * db, std::vector<Amplitude>(da * db, 0.0));
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j)
      for (std::size_t k = 0; k < db; ++k)
        for (std::size_t l = 0; l < db; ++l) c[i * db + k][j * db + l] = a[i][j] * b[k][l];
  return c;
}

// exp(-i beta sum_q X_q) as the tensor power of the one-qubit rotation.
Matrix mixer_matrix(std::size_t n, double beta) {
  const Matrix rx{{std::cos(beta), -kI * std::sin(beta)},
                  {-kI * std::sin(beta), std::cos(beta)}};
  Matrix m = identity(1);
  for (std::size_t q = 0; q < n; ++q) m = kron(m, rx);
  return m;
}

Matrix cost_matrix(const DiagonalHamiltonian& d, double gamma) {
  Matrix m = identity(d.dimension());
  for (std::size_t x = 0; x < d.dimension(); ++x) m[x][x] = std::exp(-kI * gamma * d.values[x]);
  return m;
}

std::vector<Amplitude> reference_qaoa(const DiagonalHamiltonian& d, const QaoaParams& p) {
  const std::size_t dim = d.dimension();
  Matrix u = identity(dim);
  for (std::size_t l = 0; l < p.layers(); ++l)
    u = multiply(mixer_matrix(d.n, p.betas[l]), multiply(cost_matrix(d, p.gammas[l]), u));
  std::vector<Amplitude> out(dim, 0.0);
  const double amp = 1.0 / std::sqrt(static_cast<double>(dim));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) out[i] += u[i][j] * amp;
  return out;
}

DiagonalHamiltonian random_diagonal(std::mt19937_64& rng, std::size_t n) {
  const Graph g = testing::random_graph(rng, n, 0.6);
  const ProblemKind kind = kAllKinds[rng() % 6];
  return build_diagonal(build_ising(kind, g, testing::default_penalties(kind)));
}

QaoaParams random_params(std::mt19937_64& rng, std::size_t layers) {
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  std::vector<double> g(layers), b(layers);
  for (auto& x : g) x = angle(rng);
  for (auto& x : b) x = angle(rng);
  return {g, b};
}

double max_diff(std::span<const Amplitude> a, std::span<const Amplitude> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

const DiagonalHamiltonian k3_pc =
    build_diagonal(build_ising(ProblemKind::MaxPC, Graph::complete(3), std::nullopt));

}  // namespace

TEST_CASE("uniform state") {
  const Statevector one = Statevector::uniform(1);
  CHECK(one[0].real() == doctest::Approx(1 / std::sqrt(2.0)));
  CHECK(one[1].real() == doctest::Approx(1 / std::sqrt(2.0)));
  const Statevector two = Statevector::uniform(2);
  for (std::uint64_t x = 0; x < 4; ++x) CHECK(two[x] == Amplitude(0.5, 0.0));
  for (std::size_t n = 1; n <= 12; ++n) CHECK(std::abs(Statevector::uniform(n).norm() - 1) < 1e-12);
  CHECK_THROWS(Statevector::uniform(23));
  const Statevector zero(3);
  CHECK(zero[0] == Amplitude(1.0, 0.0));
}

TEST_CASE("cost layer") {
  std::mt19937_64 rng(3);
  const DiagonalHamiltonian d = random_diagonal(rng, 4);
  Statevector s = run_qaoa(d, random_params(rng, 2));
  const Statevector before = s;

  apply_cost_layer(s, d, 0.0);
  CHECK(max_diff(s.amplitudes(), before.amplitudes()) == 0.0);

  apply_cost_layer(s, d, 0.7);
  const auto pa = probabilities(s), pb = probabilities(before);
  for (std::size_t x = 0; x < pa.size(); ++x) CHECK(pa[x] == doctest::Approx(pb[x]));

  Statevector split = before, joint = before;
  apply_cost_layer(split, d, 0.3);
  apply_cost_layer(split, d, 0.45);
  apply_cost_layer(joint, d, 0.75);
  CHECK(max_diff(split.amplitudes(), joint.amplitudes()) < 1e-12);
}

TEST_CASE("integer diagonals are 2 pi periodic") {
  // Offset-free MaxPC values are integers shifted by the offset, so the two
  // states agree up to the global phase exp(2 pi i offset).
  Statevector a = Statevector::uniform(3), b = Statevector::uniform(3);
  apply_cost_layer(a, k3_pc, 0.4);
  apply_cost_layer(b, k3_pc, 0.4 + 2 * std::numbers::pi);
  const Amplitude phase = std::exp(Amplitude(0.0, 2 * std::numbers::pi * k3_pc.offset));
  for (std::uint64_t x = 0; x < 8; ++x) CHECK(std::abs(a[x] * phase - b[x]) < 1e-12);

  const DiagonalHamiltonian shifted{3, [] {
    std::vector<double> v = k3_pc.values;
    for (double& e : v) e += k3_pc.offset;
    return v;
  }(), 0.0};
  Statevector c = Statevector::uniform(3), d = Statevector::uniform(3);
  apply_cost_layer(c, shifted, 0.4);
  apply_cost_layer(d, shifted, 0.4 + 2 * std::numbers::pi);
  CHECK(max_diff(c.amplitudes(), d.amplitudes()) < 1e-12);
}

TEST_CASE("mixer layer") {
  Statevector s(1);
  apply_mixer_layer(s, std::numbers::pi / 2);
  CHECK(std::abs(s[0]) < 1e-15);
  CHECK(std::abs(s[1] - Amplitude(0.0, -1.0)) < 1e-15);

  Statevector u = Statevector::uniform(4);
  const Statevector before = u;
  apply_mixer_layer(u, 0.0);
  CHECK(max_diff(u.amplitudes(), before.amplitudes()) == 0.0);
  apply_mixer_layer(u, 1.1);
  for (double p : probabilities(u)) CHECK(p == doctest::Approx(1.0 / 16));
}

TEST_CASE("run_qaoa agrees with the dense matrix product (n <= 4)") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const DiagonalHamiltonian d = random_diagonal(rng, n);
    const QaoaParams p = random_params(rng, 1 + trial % 3);
    const Statevector s = run_qaoa(d, p);
    const std::vector<Amplitude> ref = reference_qaoa(d, p);
    CHECK(max_diff(s.amplitudes(), ref) <= 1e-10);
  }
}

TEST_CASE("single-edge MinVC at p = 1 against the 4x4 product") {
  const DiagonalHamiltonian d =
      build_diagonal(build_ising(ProblemKind::MinVC, Graph(2, {{0, 1}}), Penalties(3, 2)));
  const QaoaParams p({0.37}, {0.81});
  CHECK(max_diff(run_qaoa(d, p).amplitudes(), reference_qaoa(d, p)) <= 1e-12);
}

TEST_CASE("zero angles leave the uniform state; random angles keep the norm") {
  const Statevector s = run_qaoa(k3_pc, QaoaParams({0, 0}, {0, 0}));
  CHECK(max_diff(s.amplitudes(), Statevector::uniform(3).amplitudes()) == 0.0);
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    const DiagonalHamiltonian d = random_diagonal(rng, 8);
    CHECK(std::abs(run_qaoa(d, random_params(rng, 5)).norm() - 1) <= 1e-9);
  }
}

TEST_CASE("expectation") {
  CHECK(expectation(Statevector::uniform(3), k3_pc, true) == doctest::Approx(-0.75));
  CHECK(expectation(Statevector::uniform(3), k3_pc, false) == doctest::Approx(0.0));

  for (std::uint64_t x = 0; x < 8; ++x) {
    Statevector basis = run_qaoa(k3_pc, QaoaParams({0.0}, {0.0}));
    auto amps = basis.amplitudes();
    std::fill(amps.begin(), amps.end(), Amplitude(0.0));
    amps[x] = 1.0;
    CHECK(expectation(basis, k3_pc, true) == doctest::Approx(k3_pc.cost(x)));
  }

  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = testing::random_graph(rng, 6, 0.5);
    const DiagonalHamiltonian d = build_diagonal(build_ising(ProblemKind::MaxPC, g, std::nullopt));
    const double e = expectation(run_qaoa(d, random_params(rng, 2)), d, true);
    const double lo = d.min_cost();
    const double hi = *std::max_element(d.values.begin(), d.values.end()) + d.offset;
    CHECK(e >= lo - 1e-12);
    CHECK(e <= hi + 1e-12);
  }
}

TEST_CASE("probabilities and sampling") {
  for (double p : probabilities(Statevector::uniform(2))) CHECK(p == doctest::Approx(0.25));

  std::mt19937_64 rng(12);
  const DiagonalHamiltonian d = random_diagonal(rng, 3);
  const Statevector s = run_qaoa(d, random_params(rng, 2));
  const std::vector<double> probs = probabilities(s);
  double total = 0.0;
  for (double p : probs) total += p;
  CHECK(std::abs(total - 1.0) < 1e-9);

  constexpr std::size_t shots = 100000;
  const auto counts = sample(s, shots, 5);
  CHECK(counts == sample(s, shots, 5));
  std::size_t seen = 0;
  double chi2 = 0.0;
  for (std::uint64_t x = 0; x < probs.size(); ++x) {
    const auto it = counts.find(x);
    const double observed = it == counts.end() ? 0.0 : static_cast<double>(it->second);
    seen += static_cast<std::size_t>(observed);
    const double expected = probs[x] * shots;
    if (expected > 0) chi2 += (observed - expected) * (observed - expected) / expected;
  }
  CHECK(seen == shots);
  // 7 degrees of freedom; 24.3 is the 0.999 quantile.
  CHECK(chi2 < 24.3);
}

TEST_CASE("parameter containers") {
  CHECK_THROWS(QaoaParams({0.1}, {0.1, 0.2}));
  CHECK_THROWS(QaoaParams({}, {}));
  const QaoaParams p({1, 2}, {3, 4});
  CHECK(p.flatten() == std::vector<double>{1, 2, 3, 4});
  const auto flat = p.flatten();
  const QaoaParams q = QaoaParams::unflatten(flat);
  CHECK(q.gammas == p.gammas);
  CHECK(q.betas == p.betas);
}
