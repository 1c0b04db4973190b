#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qregsim/gates.hpp"
#include "qregsim/random.hpp"
#include "qregsim/state.hpp"

namespace qreg {

/// Thrown when a randomized procedure exhausts its retry budget.
class RetryExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Random numbers from Hadamard-prepared registers

struct QrngResult {
  std::uint64_t value = 0;
  unsigned bits = 0;
  unsigned chunk = 0;
  unsigned rounds = 0;
};

/// H on every qubit of |0...0>: amplitude 1/sqrt(2^chunk) everywhere.
QuantumState qrng_round_state(unsigned chunk);

/// `num_bits` (<= 64) random bits from ceil(num_bits / chunk) measured
/// rounds of a `chunk`-qubit register. Round r fills bits [r*chunk, ...).
QrngResult qrng(unsigned num_bits, unsigned chunk, RandomSource& rng);

// ---------------------------------------------------------------------------
// Amplitude amplification

struct Oracle {
  unsigned num_qubits = 1;
  std::function<bool(BasisIndex)> predicate;
};

std::uint64_t count_marked(const Oracle& oracle);

/// k = max(0, round(pi / (4 theta) - 1/2)).
unsigned optimal_iterations(double theta);

struct Amplified {
  QuantumState state;
  unsigned iterations = 0;
  double theta = 0.0;
  /// sin^2((2k+1) theta)
  double predicted_success = 0.0;
  /// sqrt of the simulated probability mass on marked indices.
  double marked_amplitude = 0.0;
};

/// Runs `iterations` rounds of [phase-flip marked; reflect about `initial`]
/// (2|psi><psi| - I). theta = asin(sqrt(marked_fraction)).
Amplified amplify(const QuantumState& initial, const std::function<bool(BasisIndex)>& marked,
                  double marked_fraction, unsigned iterations);

/// As above with the optimal iteration count.
Amplified amplify(const QuantumState& initial, const std::function<bool(BasisIndex)>& marked,
                  double marked_fraction);

/// Uniform superposition, amplified for `marked_count` solutions.
Amplified grover_state(const Oracle& oracle, std::uint64_t marked_count);

struct GroverResult {
  BasisIndex index = 0;
  unsigned iterations = 0;
  double predicted_success = 0.0;
  double marked_amplitude = 0.0;
  bool found = false;
};

/// Throws std::invalid_argument unless 1 <= marked_count <= 2^n and the
/// count agrees with count_marked(oracle).
GroverResult grover_search(const Oracle& oracle, std::uint64_t marked_count, RandomSource& rng);

// ---------------------------------------------------------------------------
// Quantum Fourier transform
//
// |j> -> 2^{-m/2} sum_k exp(2 pi i j k / 2^m) |k>, where reg[0] holds the
// least significant bit of j.

std::vector<GateApplication> qft_circuit(std::span<const Qubit> reg);
std::vector<GateApplication> inverse_qft_circuit(std::span<const Qubit> reg);

QuantumState qft(const QuantumState& s);
QuantumState inverse_qft(const QuantumState& s);
QuantumState qft(const QuantumState& s, std::span<const Qubit> reg);
QuantumState inverse_qft(const QuantumState& s, std::span<const Qubit> reg);

// ---------------------------------------------------------------------------
// Period finding and factoring

inline constexpr unsigned kShorSampleRetries = 64;
inline constexpr unsigned kShorFactorRetries = 32;

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

struct ShorLayout {
  unsigned counting_qubits = 0;  // t, with 2^t >= N^2
  unsigned value_qubits = 0;     // bits to hold a value < N
  unsigned total() const noexcept { return counting_qubits + value_qubits; }
};

ShorLayout shor_layout(std::uint64_t modulus);

/// (1/sqrt(2^t)) sum_x |x>|a^x mod N>, the counting register occupying the
/// high qubits [value_qubits, total).
QuantumState shor_entangled_state(std::uint64_t a, std::uint64_t modulus);

/// Convergent denominators of num/den, stopping at the first >= bound.
std::vector<std::uint64_t> convergent_denominators(std::uint64_t num, std::uint64_t den,
                                                   std::uint64_t bound);

struct PeriodResult {
  std::uint64_t period = 0;
  unsigned samples = 0;
};

/// Multiplicative order of a modulo N, extracted from simulated
/// measurements. The returned period is minimal.
PeriodResult shor_period(std::uint64_t a, std::uint64_t modulus, RandomSource& rng);

struct FactorResult {
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  std::uint64_t base = 0;
  /// Set when the factors came from a simulated period, not a lucky gcd.
  std::optional<std::uint64_t> period;
  unsigned attempts = 0;
};

/// Nontrivial p * q = N with p <= q. N must be odd, composite and not a
/// prime power.
FactorResult shor_factor(std::uint64_t modulus, RandomSource& rng);

// ---------------------------------------------------------------------------
// Discrete-time walks on the line

struct WalkDistribution {
  unsigned steps = 0;
  /// probabilities[p + steps] is the probability of position p.
  std::vector<double> probabilities;

  double at(long position) const;
  double total() const;
  double mean() const;
  double stddev() const;
};

using Coin = std::array<Amplitude, 2>;

/// (|0> + i|1>)/sqrt(2), which gives a symmetric Hadamard walk.
Coin symmetric_coin();

/// Hadamard coin then shift (coin 0 -> -1, coin 1 -> +1), t times, from
/// position 0.
WalkDistribution quantum_walk_line(unsigned steps, const Coin& coin_init = symmetric_coin());
/// Exact symmetric binomial walk.
WalkDistribution classical_walk_line(unsigned steps);

// ---------------------------------------------------------------------------
// Associative memory

struct PatternMemory {
  unsigned pattern_length = 0;
  std::vector<BasisIndex> patterns;
  QuantumState state;
};

/// Uniform superposition over distinct equal-length bit strings.
PatternMemory qam_store(std::span<const std::string> patterns);

class NoMatchError : public std::invalid_argument {
 public:
  NoMatchError(unsigned radius, unsigned min_distance);
  unsigned min_distance() const noexcept { return min_distance_; }

 private:
  unsigned min_distance_;
};

struct QamQuery {
  std::function<bool(BasisIndex)> marked;
  std::uint64_t marked_count = 0;
};

/// Stored patterns within Hamming distance `radius` of `query`.
QamQuery qam_matches(const PatternMemory& mem, std::string_view query, unsigned radius);

/// Memory state amplified toward patterns near `query`, reflecting about the
/// memory state so unstored indices keep zero amplitude.
Amplified qam_amplify(const PatternMemory& mem, std::string_view query, unsigned radius);

struct QamResult {
  std::string pattern;
  BasisIndex index = 0;
  unsigned iterations = 0;
  double predicted_success = 0.0;
  std::uint64_t marked_count = 0;
};

QamResult qam_query(const PatternMemory& mem, std::string_view query, unsigned radius,
                    RandomSource& rng);

}  // namespace qreg
