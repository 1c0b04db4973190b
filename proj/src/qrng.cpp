#include "qregsim/algorithms.hpp"
#include "qregsim/config.hpp"
#include "qregsim/measurement.hpp"

namespace qreg {

QuantumState qrng_round_state(unsigned chunk) {
  check_qubit_count(chunk);
  std::vector<GateApplication> program;
  for (Qubit q = 0; q < chunk; ++q) program.push_back({Gate::hadamard(), {q}});
  return apply_all(basis_state(chunk, 0), program);
}

QrngResult qrng(unsigned num_bits, unsigned chunk, RandomSource& rng) {
  if (num_bits == 0 || num_bits > 64) {
    throw std::invalid_argument("qrng bit count must be in [1, 64], got " + std::to_string(num_bits));
  }
  const QuantumState prepared = qrng_round_state(chunk);

  QrngResult result{0, num_bits, chunk, 0};
  for (unsigned filled = 0; filled < num_bits; filled += chunk) {
    const BasisIndex sample = measure_all(prepared, rng).first;
    ++result.rounds;
    const unsigned take = std::min(chunk, num_bits - filled);
    const BasisIndex kept = take >= 64 ? sample : sample & ((BasisIndex{1} << take) - 1);
    result.value |= kept << filled;
  }
  return result;
}

}  // namespace qreg
