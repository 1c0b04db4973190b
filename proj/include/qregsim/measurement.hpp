#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "qregsim/random.hpp"
#include "qregsim/state.hpp"

namespace qreg {

using Bit = std::uint8_t;

struct MeasurementOutcome {
  std::map<Qubit, Bit> measured_bits;
  QuantumState post_state;
};

/// Probability that `qubits` read `bits` (parallel sequences).
double marginal(const QuantumState& s, std::span<const Qubit> qubits, std::span<const Bit> bits);

/// Joint distribution of `qubits`; entry a has qubits[0] as its most
/// significant bit.
std::vector<double> joint_distribution(const QuantumState& s, std::span<const Qubit> qubits);

/// Projects onto qubits == bits and renormalizes. Throws std::domain_error
/// when the outcome has zero probability.
QuantumState collapse(const QuantumState& s, std::span<const Qubit> qubits,
                      std::span<const Bit> bits);

std::pair<BasisIndex, MeasurementOutcome> measure_all(const QuantumState& s, RandomSource& rng);

/// Draws the joint assignment from the subset marginal with one uniform
/// draw, then projects once.
MeasurementOutcome measure_qubits(const QuantumState& s, std::span<const Qubit> qubits,
                                  RandomSource& rng);

/// Inverse-CDF sampling in index order: the first i whose cumulative weight
/// exceeds u. Never returns a zero-weight index.
std::size_t sample_index(std::span<const double> weights, double u);

/// sample_index with the cumulative table built once, for repeated shots.
class DiscreteSampler {
 public:
  explicit DiscreteSampler(std::span<const double> weights);
  std::size_t operator()(double u) const;

 private:
  std::vector<double> cumulative_;
  std::size_t last_nonzero_;
};

/// True iff s = (state on left_qubits) ⊗ (state on the rest), judged by the
/// second singular value of the reshaped amplitude matrix being < 1e-9.
bool is_product(const QuantumState& s, std::span<const Qubit> left_qubits);

/// Singular values of the left/rest reshape, descending.
std::vector<double> schmidt_coefficients(const QuantumState& s, std::span<const Qubit> left_qubits);

inline constexpr double kProductThreshold = 1e-9;

}  // namespace qreg
