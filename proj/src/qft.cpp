#include <algorithm>
#include <numbers>

#include "qregsim/algorithms.hpp"

namespace qreg {

std::vector<GateApplication> qft_circuit(std::span<const Qubit> reg) {
  const std::size_t m = reg.size();
  std::vector<GateApplication> program;
  for (std::size_t i = m; i-- > 0;) {
    program.push_back({Gate::hadamard(), {reg[i]}});
    for (std::size_t l = i; l-- > 0;) {
      const double phi = std::numbers::pi / static_cast<double>(std::uint64_t{1} << (i - l));
      program.push_back({Gate::controlled_phase(phi), {reg[l], reg[i]}});
    }
  }
  for (std::size_t i = 0; i < m / 2; ++i) {
    program.push_back({Gate::exchange(), {reg[i], reg[m - 1 - i]}});
  }
  return program;
}

std::vector<GateApplication> inverse_qft_circuit(std::span<const Qubit> reg) {
  std::vector<GateApplication> program = qft_circuit(reg);
  std::reverse(program.begin(), program.end());
  for (auto& app : program) {
    if (app.gate.kind() == GateKind::ControlledPhase) {
      app.gate = Gate::controlled_phase(-app.gate.phase());
    }
  }
  return program;
}

namespace {

std::vector<Qubit> whole_register(const QuantumState& s) {
  std::vector<Qubit> reg(s.num_qubits());
  for (Qubit q = 0; q < s.num_qubits(); ++q) reg[q] = q;
  return reg;
}

}  // namespace

QuantumState qft(const QuantumState& s, std::span<const Qubit> reg) {
  return apply_all(s, qft_circuit(reg));
}

QuantumState inverse_qft(const QuantumState& s, std::span<const Qubit> reg) {
  return apply_all(s, inverse_qft_circuit(reg));
}

QuantumState qft(const QuantumState& s) { return qft(s, whole_register(s)); }

QuantumState inverse_qft(const QuantumState& s) { return inverse_qft(s, whole_register(s)); }

}  // namespace qreg
