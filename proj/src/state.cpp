#include "qregsim/state.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "qregsim/config.hpp"

namespace qreg {

NormError::NormError(double norm_squared)
    : std::invalid_argument([&] {
        std::ostringstream os;
        os.precision(17);
        os << "amplitudes have squared norm " << norm_squared << ", expected 1 within "
           << kNormTolerance;
        return os.str();
      }()),
      norm_squared_(norm_squared) {}

QuantumState QuantumState::basis(unsigned num_qubits, BasisIndex index) {
  check_qubit_count(num_qubits);
  const BasisIndex dim = BasisIndex{1} << num_qubits;
  if (index >= dim) {
    throw std::out_of_range("basis index " + std::to_string(index) + " out of range for " +
                            std::to_string(num_qubits) + " qubits");
  }
  std::vector<Amplitude> amps(dim);
  amps[index] = 1.0;
  return QuantumState(num_qubits, std::move(amps));
}

QuantumState QuantumState::from_amplitudes(unsigned num_qubits, std::vector<Amplitude> amps,
                                           Normalization mode) {
  check_qubit_count(num_qubits);
  const std::size_t dim = std::size_t{1} << num_qubits;
  if (amps.size() != dim) {
    throw std::invalid_argument("expected " + std::to_string(dim) + " amplitudes for " +
                                std::to_string(num_qubits) + " qubits, got " +
                                std::to_string(amps.size()));
  }
  double norm2 = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    if (!std::isfinite(amps[i].real()) || !std::isfinite(amps[i].imag())) {
      throw std::invalid_argument("amplitude " + std::to_string(i) + " is not finite");
    }
    norm2 += std::norm(amps[i]);
  }
  if (mode == Normalization::Renormalize && norm2 > 0.0) {
    const double scale = 1.0 / std::sqrt(norm2);
    for (auto& a : amps) a *= scale;
    return QuantumState(num_qubits, std::move(amps));
  }
  if (std::abs(norm2 - 1.0) > kNormTolerance) throw NormError(norm2);
  return QuantumState(num_qubits, std::move(amps));
}

double QuantumState::probability(BasisIndex i) const {
  if (i >= amps_.size()) {
    throw std::out_of_range("basis index " + std::to_string(i) + " out of range for " +
                            std::to_string(num_qubits_) + " qubits");
  }
  return std::norm(amps_[i]);
}

double QuantumState::norm_squared() const noexcept {
  double sum = 0.0;
  for (const auto& a : amps_) sum += std::norm(a);
  return sum;
}

QuantumState basis_state(unsigned num_qubits, BasisIndex index) {
  return QuantumState::basis(num_qubits, index);
}

QuantumState from_amplitudes(unsigned num_qubits, std::span<const Amplitude> amps,
                             Normalization mode) {
  return QuantumState::from_amplitudes(num_qubits, std::vector<Amplitude>(amps.begin(), amps.end()),
                                       mode);
}

QuantumState tensor(const QuantumState& a, const QuantumState& b) {
  const unsigned n = a.num_qubits() + b.num_qubits();
  check_qubit_count(n);
  const auto lhs = a.amplitudes();
  const auto rhs = b.amplitudes();
  std::vector<Amplitude> out;
  out.reserve(lhs.size() * rhs.size());
  for (const auto& x : lhs) {
    for (const auto& y : rhs) out.push_back(x * y);
  }
  return QuantumState::from_amplitudes(n, std::move(out));
}

double probability(const QuantumState& s, BasisIndex i) { return s.probability(i); }

std::string to_bitstring(BasisIndex index, unsigned width) {
  std::string bits(width, '0');
  for (unsigned q = 0; q < width; ++q) {
    if ((index >> q) & 1U) bits[width - 1 - q] = '1';
  }
  return bits;
}

BasisIndex from_bitstring(std::string_view bits) {
  if (bits.empty() || bits.size() > kAbsoluteMaxQubits) {
    throw std::invalid_argument("bit string must have 1.." + std::to_string(kAbsoluteMaxQubits) +
                                " characters");
  }
  BasisIndex value = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("'" + std::string(bits) + "' is not a bit string");
    }
    value = (value << 1) | static_cast<BasisIndex>(c == '1');
  }
  return value;
}

}  // namespace qreg
