#include "qregsim/circuit.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <iterator>
#include <sstream>

#include "qregsim/config.hpp"
#include "qregsim/measurement.hpp"
#include "qregsim/random.hpp"

namespace qreg {

unsigned Circuit::outcome_width() const {
  return measured ? static_cast<unsigned>(measured->size()) : num_qubits;
}

void Circuit::validate() const {
  check_qubit_count(num_qubits);
  for (const auto& step : steps) qreg::validate(step, num_qubits);
  if (measured) {
    if (measured->empty()) throw std::invalid_argument("measure list is empty");
    for (std::size_t i = 0; i < measured->size(); ++i) {
      if ((*measured)[i] >= num_qubits) {
        throw std::out_of_range("qubit " + std::to_string((*measured)[i]) + " out of range");
      }
      for (std::size_t j = 0; j < i; ++j) {
        if ((*measured)[i] == (*measured)[j]) {
          throw std::invalid_argument("qubit " + std::to_string((*measured)[i]) +
                                      " measured twice");
        }
      }
    }
  }
}

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

struct Mnemonic {
  std::string_view name;
  GateKind kind;
  unsigned qubits;
  bool has_phase;
};

constexpr Mnemonic kMnemonics[] = {
    {"id", GateKind::Identity, 1, false},     {"x", GateKind::Not, 1, false},
    {"h", GateKind::Hadamard, 1, false},      {"phase", GateKind::PhaseShift, 1, true},
    {"cnot", GateKind::Cnot, 2, false},       {"cphase", GateKind::ControlledPhase, 2, true},
    {"swap", GateKind::Exchange, 2, false},   {"toffoli", GateKind::Toffoli, 3, false},
    {"fredkin", GateKind::Fredkin, 3, false},
};

const Mnemonic* find_mnemonic(std::string_view name) {
  for (const auto& m : kMnemonics) {
    if (m.name == name) return &m;
  }
  return nullptr;
}

const Mnemonic& mnemonic_for(GateKind kind) {
  for (const auto& m : kMnemonics) {
    if (m.kind == kind) return m;
  }
  throw std::invalid_argument("gate kind '" + std::string(to_string(kind)) +
                              "' has no text mnemonic");
}

Gate make_gate(GateKind kind, double phase) {
  switch (kind) {
    case GateKind::Identity: return Gate::identity();
    case GateKind::Not: return Gate::not_gate();
    case GateKind::Hadamard: return Gate::hadamard();
    case GateKind::PhaseShift: return Gate::phase_shift(phase);
    case GateKind::Cnot: return Gate::cnot();
    case GateKind::ControlledPhase: return Gate::controlled_phase(phase);
    case GateKind::Exchange: return Gate::exchange();
    case GateKind::Toffoli: return Gate::toffoli();
    case GateKind::Fredkin: return Gate::fredkin();
    case GateKind::Custom: break;
  }
  throw std::logic_error("no mnemonic for custom gates");
}

std::vector<std::string_view> tokenize(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

unsigned parse_uint(std::string_view token, std::size_t line) {
  unsigned value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(token) + "'");
  }
  return value;
}

double parse_angle(std::string_view token, std::size_t line) {
  double value = 0.0;
  const char* first = token.data();
  if (!token.empty() && token.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || !std::isfinite(value)) {
    throw ParseError(line, "expected a decimal angle in radians, got '" + std::string(token) + "'");
  }
  return value;
}

Qubit parse_qubit(std::string_view token, unsigned num_qubits, std::size_t line) {
  const unsigned q = parse_uint(token, line);
  if (q >= num_qubits) throw ParseError(line, "qubit " + std::to_string(q) + " out of range");
  return q;
}

std::string format_angle(double phi) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, phi, std::chars_format::general, 17);
  return std::string(buf, ptr);
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
  Circuit c;
  bool have_header = false;
  bool have_measure = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const std::string_view head = tokens.front();

    if (head == "qubits") {
      if (have_header) throw ParseError(line_no, "duplicate 'qubits' header");
      if (tokens.size() != 2) throw ParseError(line_no, "'qubits' takes exactly one count");
      const unsigned n = parse_uint(tokens[1], line_no);
      try {
        check_qubit_count(n);
      } catch (const std::exception& e) {
        throw ParseError(line_no, e.what());
      }
      c.num_qubits = n;
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(line_no, "missing 'qubits' header before '" +
                                                    std::string(head) + "'");
    if (have_measure) throw ParseError(line_no, "statement after terminal 'measure'");

    if (head == "measure") {
      if (tokens.size() < 2) throw ParseError(line_no, "'measure' needs 'all' or qubit indices");
      have_measure = true;
      if (tokens.size() == 2 && tokens[1] == "all") continue;
      std::vector<Qubit> qubits;
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        const Qubit q = parse_qubit(tokens[i], c.num_qubits, line_no);
        if (std::find(qubits.begin(), qubits.end(), q) != qubits.end()) {
          throw ParseError(line_no, "qubit " + std::to_string(q) + " measured twice");
        }
        qubits.push_back(q);
      }
      c.measured = std::move(qubits);
      continue;
    }

    const Mnemonic* m = find_mnemonic(head);
    if (m == nullptr) throw ParseError(line_no, "unknown mnemonic '" + std::string(head) + "'");
    const std::size_t expected = 1 + m->qubits + (m->has_phase ? 1 : 0);
    if (tokens.size() != expected) {
      throw ParseError(line_no, "'" + std::string(m->name) + "' expects " +
                                    std::to_string(m->qubits) + " qubit operand(s)" +
                                    (m->has_phase ? " and an angle" : "") + ", got " +
                                    std::to_string(tokens.size() - 1) + " operand(s)");
    }
    GateApplication app{make_gate(m->kind, m->has_phase ? parse_angle(tokens.back(), line_no) : 0.0),
                        {}};
    for (unsigned i = 0; i < m->qubits; ++i) {
      const Qubit q = parse_qubit(tokens[1 + i], c.num_qubits, line_no);
      if (std::find(app.targets.begin(), app.targets.end(), q) != app.targets.end()) {
        throw ParseError(line_no, "duplicate qubit " + std::to_string(q));
      }
      app.targets.push_back(q);
    }
    c.steps.push_back(std::move(app));
  }
  if (!have_header) throw ParseError(line_no == 0 ? 1 : line_no, "missing 'qubits' header");
  return c;
}

Circuit parse_circuit(std::istream& in) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_circuit(text);
}

std::string serialize(const Circuit& c) {
  std::ostringstream os;
  os << "qubits " << c.num_qubits << '\n';
  for (const auto& step : c.steps) {
    const Mnemonic& m = mnemonic_for(step.gate.kind());
    os << m.name;
    for (Qubit q : step.targets) os << ' ' << q;
    if (m.has_phase) os << ' ' << format_angle(step.gate.phase());
    os << '\n';
  }
  if (c.measured) {
    os << "measure";
    for (Qubit q : *c.measured) os << ' ' << q;
    os << '\n';
  } else {
    os << "measure all\n";
  }
  return os.str();
}

QuantumState evolve(const Circuit& c) {
  c.validate();
  return apply_all(basis_state(c.num_qubits, 0), c.steps);
}

RunResult sample(const QuantumState& state, std::span<const Qubit> qubits, std::uint64_t shots,
                 std::uint64_t seed) {
  if (shots == 0) throw std::invalid_argument("shots must be positive");
  const DiscreteSampler sampler(joint_distribution(state, qubits));
  RandomSource rng(seed);
  RunResult result{shots, seed, static_cast<unsigned>(qubits.size()), {}};
  for (std::uint64_t s = 0; s < shots; ++s) ++result.counts[sampler(rng.uniform())];
  return result;
}

RunResult run(const Circuit& c, std::uint64_t shots, std::uint64_t seed) {
  if (shots == 0) throw std::invalid_argument("shots must be positive");
  const QuantumState final_state = evolve(c);
  std::vector<Qubit> order;
  if (c.measured) {
    order = *c.measured;
  } else {
    for (Qubit q = c.num_qubits; q-- > 0;) order.push_back(q);
  }
  return sample(final_state, order, shots, seed);
}

}  // namespace qreg
