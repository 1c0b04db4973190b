#include "qregsim/measurement.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qregsim/config.hpp"

namespace qreg {
namespace {

void check_subset(const QuantumState& s, std::span<const Qubit> qubits) {
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    if (qubits[i] >= s.num_qubits()) {
      throw std::out_of_range("qubit " + std::to_string(qubits[i]) + " out of range for " +
                              std::to_string(s.num_qubits()) + " qubits");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (qubits[i] == qubits[j]) {
        throw std::invalid_argument("qubit " + std::to_string(qubits[i]) + " listed twice");
      }
    }
  }
}

// Gathers the bits of `index` at `qubits`, qubits[0] landing in the top bit.
std::size_t extract(BasisIndex index, std::span<const Qubit> qubits) {
  std::size_t a = 0;
  for (Qubit q : qubits) a = (a << 1) | ((index >> q) & 1U);
  return a;
}

struct MaskPattern {
  BasisIndex mask = 0;
  BasisIndex value = 0;
};

MaskPattern pattern_of(std::span<const Qubit> qubits, std::span<const Bit> bits) {
  if (qubits.size() != bits.size()) {
    throw std::invalid_argument("got " + std::to_string(bits.size()) + " bits for " +
                                std::to_string(qubits.size()) + " qubits");
  }
  MaskPattern p;
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    if (bits[i] > 1) throw std::invalid_argument("bit values must be 0 or 1");
    p.mask |= BasisIndex{1} << qubits[i];
    if (bits[i]) p.value |= BasisIndex{1} << qubits[i];
  }
  return p;
}

std::vector<Bit> bits_of(std::size_t assignment, std::size_t count) {
  std::vector<Bit> bits(count);
  for (std::size_t p = 0; p < count; ++p) {
    bits[p] = static_cast<Bit>((assignment >> (count - 1 - p)) & 1U);
  }
  return bits;
}

}  // namespace

double marginal(const QuantumState& s, std::span<const Qubit> qubits, std::span<const Bit> bits) {
  check_subset(s, qubits);
  const MaskPattern p = pattern_of(qubits, bits);
  const auto amps = s.amplitudes();
  double sum = 0.0;
  for (BasisIndex i = 0; i < amps.size(); ++i) {
    if ((i & p.mask) == p.value) sum += std::norm(amps[i]);
  }
  return sum;
}

std::vector<double> joint_distribution(const QuantumState& s, std::span<const Qubit> qubits) {
  check_subset(s, qubits);
  std::vector<double> dist(std::size_t{1} << qubits.size(), 0.0);
  const auto amps = s.amplitudes();
  for (BasisIndex i = 0; i < amps.size(); ++i) dist[extract(i, qubits)] += std::norm(amps[i]);
  return dist;
}

QuantumState collapse(const QuantumState& s, std::span<const Qubit> qubits,
                      std::span<const Bit> bits) {
  check_subset(s, qubits);
  const MaskPattern p = pattern_of(qubits, bits);
  const auto amps = s.amplitudes();
  std::vector<Amplitude> out(amps.size());
  double kept = 0.0;
  for (BasisIndex i = 0; i < amps.size(); ++i) {
    if ((i & p.mask) == p.value) {
      out[i] = amps[i];
      kept += std::norm(amps[i]);
    }
  }
  if (kept <= 0.0) throw std::domain_error("measurement outcome has zero probability");
  const double scale = 1.0 / std::sqrt(kept);
  for (auto& a : out) a *= scale;
  return QuantumState::from_amplitudes(s.num_qubits(), std::move(out));
}

DiscreteSampler::DiscreteSampler(std::span<const double> weights)
    : cumulative_(weights.size()), last_nonzero_(weights.size()) {
  double running = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] > 0.0) {
      running += weights[i];
      last_nonzero_ = i;
    }
    cumulative_[i] = running;
  }
  if (last_nonzero_ == weights.size()) throw std::domain_error("cannot sample from zero weights");
}

std::size_t DiscreteSampler::operator()(double u) const {
  const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  // u can land in the rounding gap above the accumulated total.
  if (it == cumulative_.end()) return last_nonzero_;
  return static_cast<std::size_t>(it - cumulative_.begin());
}

std::size_t sample_index(std::span<const double> weights, double u) {
  return DiscreteSampler(weights)(u);
}

std::pair<BasisIndex, MeasurementOutcome> measure_all(const QuantumState& s, RandomSource& rng) {
  std::vector<double> probs(s.dimension());
  const auto amps = s.amplitudes();
  for (std::size_t i = 0; i < probs.size(); ++i) probs[i] = std::norm(amps[i]);
  const BasisIndex index = sample_index(probs, rng.uniform());

  std::map<Qubit, Bit> bits;
  for (Qubit q = 0; q < s.num_qubits(); ++q) bits[q] = static_cast<Bit>((index >> q) & 1U);
  return {index, MeasurementOutcome{std::move(bits), basis_state(s.num_qubits(), index)}};
}

MeasurementOutcome measure_qubits(const QuantumState& s, std::span<const Qubit> qubits,
                                  RandomSource& rng) {
  const std::vector<double> dist = joint_distribution(s, qubits);
  const std::size_t assignment = sample_index(dist, rng.uniform());
  const std::vector<Bit> bits = bits_of(assignment, qubits.size());

  std::map<Qubit, Bit> measured;
  for (std::size_t p = 0; p < qubits.size(); ++p) measured[qubits[p]] = bits[p];
  return MeasurementOutcome{std::move(measured), collapse(s, qubits, bits)};
}

std::vector<double> schmidt_coefficients(const QuantumState& s, std::span<const Qubit> left_qubits) {
  check_subset(s, left_qubits);
  if (left_qubits.empty() || left_qubits.size() >= s.num_qubits()) {
    throw std::invalid_argument("bipartition must split the register into two nonempty parts");
  }
  std::vector<Qubit> right;
  for (Qubit q = s.num_qubits(); q-- > 0;) {
    if (std::find(left_qubits.begin(), left_qubits.end(), q) == left_qubits.end()) {
      right.push_back(q);
    }
  }
  Eigen::MatrixXcd m(Eigen::Index{1} << left_qubits.size(), Eigen::Index{1} << right.size());
  m.setZero();
  const auto amps = s.amplitudes();
  for (BasisIndex i = 0; i < amps.size(); ++i) {
    m(static_cast<Eigen::Index>(extract(i, left_qubits)),
      static_cast<Eigen::Index>(extract(i, right))) = amps[i];
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& sv = svd.singularValues();
  return std::vector<double>(sv.data(), sv.data() + sv.size());
}

bool is_product(const QuantumState& s, std::span<const Qubit> left_qubits) {
  const std::vector<double> sv = schmidt_coefficients(s, left_qubits);
  return sv.size() < 2 || sv[1] < kProductThreshold;
}

}  // namespace qreg
