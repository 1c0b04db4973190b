#include "qregsim/config.hpp"

#include <atomic>
#include <charconv>
#include <cstdlib>
#include <cstring>

namespace qreg {
namespace {

unsigned initial_cap() noexcept {
  const char* env = std::getenv("QREGSIM_MAX_QUBITS");
  if (env == nullptr) return kDefaultMaxQubits;
  unsigned value = 0;
  const char* end = env + std::strlen(env);
  auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec != std::errc{} || ptr != end || value == 0 || value > kAbsoluteMaxQubits) {
    return kDefaultMaxQubits;
  }
  return value;
}

std::atomic<unsigned>& cap_storage() noexcept {
  static std::atomic<unsigned> cap{initial_cap()};
  return cap;
}

}  // namespace

unsigned max_qubits() noexcept { return cap_storage().load(std::memory_order_relaxed); }

void set_max_qubits(unsigned cap) {
  if (cap == 0 || cap > kAbsoluteMaxQubits) {
    throw std::invalid_argument("qubit cap must be in [1, " + std::to_string(kAbsoluteMaxQubits) +
                                "], got " + std::to_string(cap));
  }
  cap_storage().store(cap, std::memory_order_relaxed);
}

CapacityError::CapacityError(unsigned requested, unsigned cap)
    : std::length_error("register of " + std::to_string(requested) +
                        " qubits exceeds the cap of " + std::to_string(cap)),
      requested_(requested),
      cap_(cap) {}

void check_qubit_count(unsigned n) {
  if (n == 0) throw std::invalid_argument("a register needs at least one qubit");
  if (n > max_qubits()) throw CapacityError(n, max_qubits());
}

}  // namespace qreg
