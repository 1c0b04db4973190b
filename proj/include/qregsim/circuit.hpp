#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qregsim/gates.hpp"

namespace qreg {

/// A gate program on |0...0> followed by one terminal measurement.
struct Circuit {
  unsigned num_qubits = 1;
  std::vector<GateApplication> steps;
  /// Qubits read at the end, first listed is most significant in the
  /// outcome. std::nullopt means "measure all".
  std::optional<std::vector<Qubit>> measured;

  /// Width of a measurement outcome in bits.
  unsigned outcome_width() const;
  /// Throws if any step or measured qubit is invalid for num_qubits.
  void validate() const;

  friend bool operator==(const Circuit&, const Circuit&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Line-oriented circuit text:
///
///   qubits 2            # header, required before any gate
///   h 1
///   cnot 1 0            # controls first
///   phase 0 3.14159265  # angle operands follow the qubit operands
///   measure all         # or: measure 1 0
///
/// Mnemonics: id x h phase cnot cphase swap toffoli fredkin.
Circuit parse_circuit(std::string_view text);
Circuit parse_circuit(std::istream& in);

/// Canonical text form. Custom gates have no mnemonic and are rejected.
std::string serialize(const Circuit& c);

struct RunResult {
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  /// Number of bits in each outcome index.
  unsigned width = 0;
  std::map<BasisIndex, std::uint64_t> counts;
};

/// Final state of the gate program applied to |0...0>.
QuantumState evolve(const Circuit& c);

/// Samples `qubits` of `state` (first listed most significant) `shots`
/// times with RandomSource(seed).
RunResult sample(const QuantumState& state, std::span<const Qubit> qubits, std::uint64_t shots,
                 std::uint64_t seed);

/// Evolves once, then samples the terminal measurement `shots` times with
/// RandomSource(seed). Outcome indices follow Circuit::measured ordering.
RunResult run(const Circuit& c, std::uint64_t shots, std::uint64_t seed);

}  // namespace qreg
