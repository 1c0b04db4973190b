#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qreg {

using Amplitude = std::complex<double>;
/// Basis index; bit q holds the value of qubit q (qubit 0 is least significant).
using BasisIndex = std::uint64_t;
using Qubit = unsigned;

enum class Normalization { Reject, Renormalize };

/// Raised when amplitudes do not have unit norm.
class NormError : public std::invalid_argument {
 public:
  explicit NormError(double norm_squared);
  double norm_squared() const noexcept { return norm_squared_; }

 private:
  double norm_squared_;
};

/// An n-qubit register: 2^n complex amplitudes with unit norm.
///
/// States are immutable values. Every constructor verifies the amplitude
/// count, finiteness and normalization, so a QuantumState in hand always
/// satisfies the register invariants.
class QuantumState {
 public:
  static QuantumState basis(unsigned num_qubits, BasisIndex index);
  static QuantumState from_amplitudes(unsigned num_qubits, std::vector<Amplitude> amps,
                                      Normalization mode = Normalization::Reject);

  unsigned num_qubits() const noexcept { return num_qubits_; }
  std::size_t dimension() const noexcept { return amps_.size(); }
  std::span<const Amplitude> amplitudes() const noexcept { return amps_; }
  const Amplitude& operator[](BasisIndex i) const { return amps_[i]; }

  /// |c_i|^2; throws std::out_of_range for i >= 2^n.
  double probability(BasisIndex i) const;
  double norm_squared() const noexcept;

 private:
  QuantumState(unsigned n, std::vector<Amplitude> amps)
      : num_qubits_(n), amps_(std::move(amps)) {}

  unsigned num_qubits_;
  std::vector<Amplitude> amps_;
};

QuantumState basis_state(unsigned num_qubits, BasisIndex index);
QuantumState from_amplitudes(unsigned num_qubits, std::span<const Amplitude> amps,
                             Normalization mode = Normalization::Reject);

/// a ⊗ b. `a` supplies the high-order qubits: index (i_a << n_b) | i_b.
QuantumState tensor(const QuantumState& a, const QuantumState& b);

double probability(const QuantumState& s, BasisIndex i);

/// n-bit string, most significant qubit first ("10000" is index 16).
std::string to_bitstring(BasisIndex index, unsigned width);
/// Inverse of to_bitstring; throws std::invalid_argument on non-binary input.
BasisIndex from_bitstring(std::string_view bits);

}  // namespace qreg
