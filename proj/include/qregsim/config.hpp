#pragma once

#include <stdexcept>
#include <string>

namespace qreg {

/// Default register size limit: 2^26 complex doubles is 1 GiB.
inline constexpr unsigned kDefaultMaxQubits = 26;
/// Hard limit imposed by 64-bit basis indices.
inline constexpr unsigned kAbsoluteMaxQubits = 62;

/// Tolerance on sum(|c_i|^2) = 1 for constructed and evolved states.
inline constexpr double kNormTolerance = 1e-9;
/// Per-entry tolerance on U^dagger U = I.
inline constexpr double kUnitaryTolerance = 1e-12;

/// Process-wide qubit cap. Reads QREGSIM_MAX_QUBITS on first use.
unsigned max_qubits() noexcept;
void set_max_qubits(unsigned cap);

/// Thrown when a register would exceed max_qubits().
class CapacityError : public std::length_error {
 public:
  CapacityError(unsigned requested, unsigned cap);
  unsigned requested() const noexcept { return requested_; }
  unsigned cap() const noexcept { return cap_; }

 private:
  unsigned requested_;
  unsigned cap_;
};

void check_qubit_count(unsigned n);

}  // namespace qreg
