#include "qregsim/gates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "qregsim/config.hpp"

namespace qreg {

std::string_view to_string(GateKind kind) noexcept {
  switch (kind) {
    case GateKind::Identity: return "identity";
    case GateKind::Not: return "not";
    case GateKind::Hadamard: return "hadamard";
    case GateKind::PhaseShift: return "phase_shift";
    case GateKind::Cnot: return "cnot";
    case GateKind::ControlledPhase: return "controlled_phase";
    case GateKind::Exchange: return "exchange";
    case GateKind::Toffoli: return "toffoli";
    case GateKind::Fredkin: return "fredkin";
    case GateKind::Custom: return "custom";
  }
  return "unknown";
}

GateMatrix::GateMatrix(unsigned arity, std::vector<Amplitude> entries)
    : arity_(arity), entries_(std::move(entries)) {
  if (arity == 0 || arity > kAbsoluteMaxQubits / 2) {
    throw std::invalid_argument("gate arity must be positive, got " + std::to_string(arity));
  }
  const std::size_t dim = dimension();
  if (entries_.size() != dim * dim) {
    throw std::invalid_argument("arity-" + std::to_string(arity) + " gate needs " +
                                std::to_string(dim * dim) + " entries, got " +
                                std::to_string(entries_.size()));
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!std::isfinite(entries_[i].real()) || !std::isfinite(entries_[i].imag())) {
      throw std::invalid_argument("gate entry (" + std::to_string(i / dim) + ", " +
                                  std::to_string(i % dim) + ") is not finite");
    }
  }
}

double GateMatrix::unitarity_deviation() const {
  const std::size_t dim = dimension();
  double worst = 0.0;
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      Amplitude sum = 0.0;
      for (std::size_t k = 0; k < dim; ++k) sum += std::conj((*this)(k, r)) * (*this)(k, c);
      if (r == c) sum -= 1.0;
      worst = std::max(worst, std::abs(sum));
    }
  }
  return worst;
}

NonUnitaryError::NonUnitaryError(double deviation)
    : std::invalid_argument([&] {
        std::ostringstream os;
        os << "matrix is not unitary: max |U^dagger U - I| entry is " << deviation;
        return os.str();
      }()),
      deviation_(deviation) {}

Gate Gate::custom(GateMatrix matrix) {
  const double dev = matrix.unitarity_deviation();
  if (!(dev <= kUnitaryTolerance)) throw NonUnitaryError(dev);
  Gate g(GateKind::Custom);
  g.custom_ = std::make_shared<const GateMatrix>(std::move(matrix));
  return g;
}

unsigned Gate::arity() const noexcept {
  switch (kind_) {
    case GateKind::Identity:
    case GateKind::Not:
    case GateKind::Hadamard:
    case GateKind::PhaseShift:
      return 1;
    case GateKind::Cnot:
    case GateKind::ControlledPhase:
    case GateKind::Exchange:
      return 2;
    case GateKind::Toffoli:
    case GateKind::Fredkin:
      return 3;
    case GateKind::Custom:
      return custom_ ? custom_->arity() : 0;
  }
  return 0;
}

bool operator==(const Gate& a, const Gate& b) {
  if (a.kind_ != b.kind_ || a.phase_ != b.phase_) return false;
  if (a.custom_ == b.custom_) return true;
  return a.custom_ && b.custom_ && *a.custom_ == *b.custom_;
}

Gate custom_gate(unsigned arity, std::vector<Amplitude> entries) {
  return Gate::custom(GateMatrix(arity, std::move(entries)));
}

namespace {

// Permutation matrix sending local basis index c to perm[c].
GateMatrix permutation(unsigned arity, std::initializer_list<std::size_t> perm) {
  const std::size_t dim = std::size_t{1} << arity;
  std::vector<Amplitude> m(dim * dim);
  std::size_t col = 0;
  for (std::size_t row : perm) m[row * dim + col++] = 1.0;
  return GateMatrix(arity, std::move(m));
}

GateMatrix diagonal(unsigned arity, std::initializer_list<Amplitude> diag) {
  const std::size_t dim = std::size_t{1} << arity;
  std::vector<Amplitude> m(dim * dim);
  std::size_t i = 0;
  for (const auto& d : diag) {
    m[i * dim + i] = d;
    ++i;
  }
  return GateMatrix(arity, std::move(m));
}

}  // namespace

GateMatrix matrix_of(const Gate& gate) {
  switch (gate.kind()) {
    case GateKind::Identity:
      return diagonal(1, {1.0, 1.0});
    case GateKind::Not:
      return permutation(1, {1, 0});
    case GateKind::Hadamard: {
      const double h = std::numbers::sqrt2 / 2.0;
      return GateMatrix(1, {h, h, h, -h});
    }
    case GateKind::PhaseShift:
      return diagonal(1, {1.0, std::polar(1.0, gate.phase())});
    // Local index = (first bound qubit << (k-1)) | ... ; controls are the
    // high local bits.
    case GateKind::Cnot:
      return permutation(2, {0, 1, 3, 2});
    case GateKind::ControlledPhase:
      return diagonal(2, {1.0, 1.0, 1.0, std::polar(1.0, gate.phase())});
    case GateKind::Exchange:
      return permutation(2, {0, 2, 1, 3});
    case GateKind::Toffoli:
      return permutation(3, {0, 1, 2, 3, 4, 5, 7, 6});
    case GateKind::Fredkin:
      return permutation(3, {0, 1, 2, 3, 4, 6, 5, 7});
    case GateKind::Custom:
      return *gate.custom_matrix();
  }
  throw std::logic_error("unhandled gate kind");
}

void validate(const GateApplication& app, unsigned num_qubits) {
  const unsigned arity = app.gate.arity();
  if (app.targets.size() != arity) {
    throw std::invalid_argument(std::string(to_string(app.gate.kind())) + " expects " +
                                std::to_string(arity) + " qubit(s), got " +
                                std::to_string(app.targets.size()));
  }
  for (std::size_t i = 0; i < app.targets.size(); ++i) {
    if (app.targets[i] >= num_qubits) {
      throw std::out_of_range("qubit " + std::to_string(app.targets[i]) + " out of range");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (app.targets[i] == app.targets[j]) {
        throw std::invalid_argument("duplicate target qubit " + std::to_string(app.targets[i]));
      }
    }
  }
}

void apply_in_place(std::span<Amplitude> amps, unsigned num_qubits, const GateApplication& app) {
  const GateMatrix m = matrix_of(app.gate);
  const unsigned k = m.arity();
  const std::size_t dim = m.dimension();

  // offsets[l]: register bits set by local index l (targets[0] is the top local bit).
  std::vector<BasisIndex> offsets(dim, 0);
  for (std::size_t l = 0; l < dim; ++l) {
    for (unsigned p = 0; p < k; ++p) {
      if ((l >> (k - 1 - p)) & 1U) offsets[l] |= BasisIndex{1} << app.targets[p];
    }
  }
  std::vector<Qubit> sorted(app.targets.begin(), app.targets.end());
  std::sort(sorted.begin(), sorted.end());

  // Nonzero entries per row; permutation and diagonal gates touch one each.
  std::vector<std::vector<std::pair<std::size_t, Amplitude>>> rows(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      if (m(r, c) != Amplitude{}) rows[r].emplace_back(c, m(r, c));
    }
  }

  std::vector<Amplitude> block(dim);
  const BasisIndex groups = BasisIndex{1} << (num_qubits - k);
  for (BasisIndex g = 0; g < groups; ++g) {
    BasisIndex base = g;
    for (Qubit t : sorted) {
      const BasisIndex low = base & ((BasisIndex{1} << t) - 1);
      base = ((base >> t) << (t + 1)) | low;
    }
    for (std::size_t l = 0; l < dim; ++l) block[l] = amps[base | offsets[l]];
    for (std::size_t r = 0; r < dim; ++r) {
      Amplitude acc = 0.0;
      for (const auto& [c, v] : rows[r]) acc += v * block[c];
      amps[base | offsets[r]] = acc;
    }
  }
}

QuantumState apply(const QuantumState& s, const GateApplication& app) {
  validate(app, s.num_qubits());
  std::vector<Amplitude> amps(s.amplitudes().begin(), s.amplitudes().end());
  apply_in_place(amps, s.num_qubits(), app);
  return QuantumState::from_amplitudes(s.num_qubits(), std::move(amps));
}

QuantumState apply_all(const QuantumState& s, std::span<const GateApplication> program) {
  for (const auto& app : program) validate(app, s.num_qubits());
  std::vector<Amplitude> amps(s.amplitudes().begin(), s.amplitudes().end());
  for (const auto& app : program) apply_in_place(amps, s.num_qubits(), app);
  return QuantumState::from_amplitudes(s.num_qubits(), std::move(amps));
}

}  // namespace qreg
