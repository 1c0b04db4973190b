#include <cmath>
#include <numbers>

#include "qregsim/algorithms.hpp"
#include "qregsim/config.hpp"
#include "qregsim/measurement.hpp"

namespace qreg {

std::uint64_t count_marked(const Oracle& oracle) {
  check_qubit_count(oracle.num_qubits);
  if (!oracle.predicate) throw std::invalid_argument("oracle has no predicate");
  const BasisIndex dim = BasisIndex{1} << oracle.num_qubits;
  std::uint64_t count = 0;
  for (BasisIndex i = 0; i < dim; ++i) count += oracle.predicate(i) ? 1 : 0;
  return count;
}

unsigned optimal_iterations(double theta) {
  if (!(theta > 0.0)) throw std::invalid_argument("amplification angle must be positive");
  const double k = std::round(std::numbers::pi / (4.0 * theta) - 0.5);
  return k > 0.0 ? static_cast<unsigned>(k) : 0U;
}

Amplified amplify(const QuantumState& initial, const std::function<bool(BasisIndex)>& marked,
                  double marked_fraction, unsigned iterations) {
  if (!(marked_fraction > 0.0 && marked_fraction <= 1.0)) {
    throw std::invalid_argument("marked fraction must be in (0, 1]");
  }
  const auto reference = initial.amplitudes();
  const std::size_t dim = reference.size();
  std::vector<bool> flip(dim);
  for (BasisIndex i = 0; i < dim; ++i) flip[i] = marked(i);

  std::vector<Amplitude> psi(reference.begin(), reference.end());
  for (unsigned it = 0; it < iterations; ++it) {
    for (std::size_t i = 0; i < dim; ++i) {
      if (flip[i]) psi[i] = -psi[i];
    }
    // 2|r><r| - I
    Amplitude overlap = 0.0;
    for (std::size_t i = 0; i < dim; ++i) overlap += std::conj(reference[i]) * psi[i];
    for (std::size_t i = 0; i < dim; ++i) psi[i] = 2.0 * overlap * reference[i] - psi[i];
  }

  double mass = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    if (flip[i]) mass += std::norm(psi[i]);
  }
  const double theta = std::asin(std::sqrt(marked_fraction));
  const double s = std::sin((2.0 * iterations + 1.0) * theta);
  return Amplified{QuantumState::from_amplitudes(initial.num_qubits(), std::move(psi)), iterations,
                   theta, s * s, std::sqrt(mass)};
}

Amplified amplify(const QuantumState& initial, const std::function<bool(BasisIndex)>& marked,
                  double marked_fraction) {
  const double theta = std::asin(std::sqrt(marked_fraction));
  return amplify(initial, marked, marked_fraction, optimal_iterations(theta));
}

Amplified grover_state(const Oracle& oracle, std::uint64_t marked_count) {
  check_qubit_count(oracle.num_qubits);
  const std::uint64_t population = std::uint64_t{1} << oracle.num_qubits;
  if (marked_count == 0) throw std::invalid_argument("no marked items: nothing to search for");
  if (marked_count > population) {
    throw std::invalid_argument("marked count " + std::to_string(marked_count) + " exceeds " +
                                std::to_string(population) + " items");
  }
  const std::uint64_t actual = count_marked(oracle);
  if (actual != marked_count) {
    throw std::invalid_argument("oracle marks " + std::to_string(actual) + " items, caller said " +
                                std::to_string(marked_count));
  }
  return amplify(qrng_round_state(oracle.num_qubits), oracle.predicate,
                 static_cast<double>(marked_count) / static_cast<double>(population));
}

GroverResult grover_search(const Oracle& oracle, std::uint64_t marked_count, RandomSource& rng) {
  const Amplified amplified = grover_state(oracle, marked_count);
  const BasisIndex index = measure_all(amplified.state, rng).first;
  return GroverResult{index, amplified.iterations, amplified.predicted_success,
                      amplified.marked_amplitude, oracle.predicate(index)};
}

}  // namespace qreg
