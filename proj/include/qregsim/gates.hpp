#pragma once

#include <memory>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "qregsim/state.hpp"

namespace qreg {

enum class GateKind {
  Identity,
  Not,
  Hadamard,
  PhaseShift,
  Cnot,
  ControlledPhase,
  Exchange,
  Toffoli,
  Fredkin,
  Custom,
};

std::string_view to_string(GateKind kind) noexcept;

/// Dense 2^k x 2^k matrix, row-major. Local basis ordering matches the
/// register: the first bound qubit is the most significant local bit.
class GateMatrix {
 public:
  GateMatrix(unsigned arity, std::vector<Amplitude> entries);

  unsigned arity() const noexcept { return arity_; }
  std::size_t dimension() const noexcept { return std::size_t{1} << arity_; }
  Amplitude operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dimension() + col];
  }
  std::span<const Amplitude> entries() const noexcept { return entries_; }

  /// max_{r,c} |(U^dagger U - I)_{rc}|
  double unitarity_deviation() const;

  friend bool operator==(const GateMatrix&, const GateMatrix&) = default;

 private:
  unsigned arity_;
  std::vector<Amplitude> entries_;
};

class NonUnitaryError : public std::invalid_argument {
 public:
  explicit NonUnitaryError(double deviation);
  double deviation() const noexcept { return deviation_; }

 private:
  double deviation_;
};

class Gate {
 public:
  static Gate identity() { return Gate(GateKind::Identity); }
  static Gate not_gate() { return Gate(GateKind::Not); }
  static Gate hadamard() { return Gate(GateKind::Hadamard); }
  static Gate phase_shift(double phi) { return Gate(GateKind::PhaseShift, phi); }
  static Gate cnot() { return Gate(GateKind::Cnot); }
  static Gate controlled_phase(double phi) { return Gate(GateKind::ControlledPhase, phi); }
  static Gate exchange() { return Gate(GateKind::Exchange); }
  static Gate toffoli() { return Gate(GateKind::Toffoli); }
  static Gate fredkin() { return Gate(GateKind::Fredkin); }
  /// Validates finiteness and unitarity (kUnitaryTolerance).
  static Gate custom(GateMatrix matrix);

  GateKind kind() const noexcept { return kind_; }
  /// Phase angle in radians for PhaseShift / ControlledPhase, 0 otherwise.
  double phase() const noexcept { return phase_; }
  unsigned arity() const noexcept;
  /// Non-null only for Custom gates.
  const GateMatrix* custom_matrix() const noexcept { return custom_.get(); }

  friend bool operator==(const Gate& a, const Gate& b);

 private:
  explicit Gate(GateKind kind, double phase = 0.0) : kind_(kind), phase_(phase) {}

  GateKind kind_;
  double phase_ = 0.0;
  std::shared_ptr<const GateMatrix> custom_;
};

Gate custom_gate(unsigned arity, std::vector<Amplitude> entries);

GateMatrix matrix_of(const Gate& gate);

/// A gate bound to register qubits. Controls come first:
/// Cnot [control, target], ControlledPhase [control, target],
/// Toffoli [c1, c2, target], Fredkin [control, a, b].
struct GateApplication {
  Gate gate;
  std::vector<Qubit> targets;

  friend bool operator==(const GateApplication&, const GateApplication&) = default;
};

/// Throws std::invalid_argument (arity mismatch, duplicates) or
/// std::out_of_range (target >= num_qubits).
void validate(const GateApplication& app, unsigned num_qubits);

QuantumState apply(const QuantumState& s, const GateApplication& app);
QuantumState apply_all(const QuantumState& s, std::span<const GateApplication> program);

/// In-place kernel over a raw amplitude buffer of length 2^num_qubits.
/// `app` must already be validated.
void apply_in_place(std::span<Amplitude> amps, unsigned num_qubits, const GateApplication& app);

}  // namespace qreg
