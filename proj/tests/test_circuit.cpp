#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "qregsim/circuit.hpp"
#include "qregsim/config.hpp"

using namespace qreg;

namespace {

constexpr const char* kBell = "qubits 2\nh 1\ncnot 1 0\nmeasure all\n";

Circuit random_circuit(std::mt19937_64& gen) {
  Circuit c;
  c.num_qubits = 3 + gen() % 4;
  std::uniform_real_distribution<double> angle(-10.0, 10.0);
  const int depth = gen() % 12;
  for (int d = 0; d < depth; ++d) {
    const Gate gates[] = {Gate::identity(), Gate::not_gate(),  Gate::hadamard(),
                          Gate::phase_shift(angle(gen)), Gate::cnot(), Gate::controlled_phase(angle(gen)),
                          Gate::exchange(), Gate::toffoli(), Gate::fredkin()};
    const Gate& g = gates[gen() % 9];
    std::vector<Qubit> all(c.num_qubits);
    for (Qubit q = 0; q < c.num_qubits; ++q) all[q] = q;
    std::shuffle(all.begin(), all.end(), gen);
    c.steps.push_back({g, {all.begin(), all.begin() + g.arity()}});
  }
  if (gen() % 2) c.measured = std::vector<Qubit>{0, c.num_qubits - 1};
  return c;
}

}  // namespace

TEST(Parse, BellCircuit) {
  const Circuit c = parse_circuit(kBell);
  EXPECT_EQ(c.num_qubits, 2u);
  ASSERT_EQ(c.steps.size(), 2u);
  EXPECT_EQ(c.steps[0], (GateApplication{Gate::hadamard(), {1}}));
  EXPECT_EQ(c.steps[1], (GateApplication{Gate::cnot(), {1, 0}}));
  EXPECT_FALSE(c.measured.has_value());
}

TEST(Parse, PhaseOperandOrder) {
  const Circuit c = parse_circuit("qubits 1\nphase 0 3.14159265");
  ASSERT_EQ(c.steps.size(), 1u);
  EXPECT_EQ(c.steps[0].gate.kind(), GateKind::PhaseShift);
  EXPECT_DOUBLE_EQ(c.steps[0].gate.phase(), 3.14159265);
  EXPECT_EQ(c.steps[0].targets, std::vector<Qubit>{0});
}

TEST(Parse, CommentsBlankLinesAndPartialMeasure) {
  const Circuit c = parse_circuit(
      "# header comment\n\n  qubits 3   # trailing\n"
      "cphase 2 0 -0.5\r\n\ttoffoli 0 1 2\nmeasure 2 0\n");
  EXPECT_EQ(c.num_qubits, 3u);
  ASSERT_EQ(c.steps.size(), 2u);
  EXPECT_EQ(c.steps[0], (GateApplication{Gate::controlled_phase(-0.5), {2, 0}}));
  EXPECT_EQ(c.measured, (std::vector<Qubit>{2, 0}));
}

TEST(Parse, ReportsLineNumbers) {
  auto message = [](std::string_view text) {
    try {
      parse_circuit(text);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_EQ(message("qubits 2\nh 5"), "line 2: qubit 5 out of range");
  EXPECT_EQ(message("qubits 2\n\nfoo 1"), "line 3: unknown mnemonic 'foo'");
  EXPECT_EQ(message("h 0\n"), "line 1: missing 'qubits' header before 'h'");
  EXPECT_EQ(message("# nothing\n"), "line 2: missing 'qubits' header");
  EXPECT_NE(message("qubits 2\ncnot 1").find("line 2: 'cnot' expects 2"), std::string::npos);
  EXPECT_NE(message("qubits 2\ncnot 1 1").find("line 2: duplicate qubit 1"), std::string::npos);
  EXPECT_NE(message("qubits 2\nphase 0 abc").find("line 2:"), std::string::npos);
  EXPECT_NE(message("qubits 2\nmeasure all\nh 0").find("line 3:"), std::string::npos);
  EXPECT_NE(message("qubits 2\nqubits 3").find("line 2: duplicate"), std::string::npos);
  EXPECT_NE(message("qubits 0").find("line 1:"), std::string::npos);
  EXPECT_NE(message("qubits 99").find("line 1:"), std::string::npos);
}

TEST(Parse, FromStream) {
  std::istringstream in(kBell);
  EXPECT_EQ(parse_circuit(in), parse_circuit(kBell));
}

TEST(Serialize, BellRoundTrip) {
  EXPECT_EQ(serialize(parse_circuit(kBell)), kBell);
}

TEST(Serialize, EmptyCircuit) {
  Circuit c;
  c.num_qubits = 3;
  EXPECT_EQ(serialize(c), "qubits 3\nmeasure all\n");
}

TEST(Serialize, PhasePrecision) {
  Circuit c;
  c.num_qubits = 1;
  c.steps.push_back({Gate::phase_shift(std::numbers::pi / 4), {0}});
  const Circuit back = parse_circuit(serialize(c));
  EXPECT_NEAR(back.steps[0].gate.phase(), std::numbers::pi / 4, 1e-15);
  EXPECT_EQ(back, c);
}

TEST(Serialize, CustomGateHasNoMnemonic) {
  Circuit c;
  c.num_qubits = 1;
  c.steps.push_back({custom_gate(1, {0.0, 1.0, 1.0, 0.0}), {0}});
  EXPECT_THROW(serialize(c), std::invalid_argument);
}

TEST(SerializeProperty, RoundTripRandomCircuits) {
  std::mt19937_64 gen(21);
  for (int i = 0; i < 200; ++i) {
    const Circuit c = random_circuit(gen);
    EXPECT_EQ(parse_circuit(serialize(c)), c) << serialize(c);
  }
}

TEST(Run, BellHistogram) {
  const RunResult r = run(parse_circuit(kBell), 100000, 7);
  EXPECT_EQ(r.width, 2u);
  ASSERT_EQ(r.counts.size(), 2u);
  EXPECT_NEAR(double(r.counts.at(0)), 50000.0, 790.0);
  EXPECT_NEAR(double(r.counts.at(3)), 50000.0, 790.0);
  EXPECT_EQ(r.counts.at(0) + r.counts.at(3), 100000u);
}

TEST(Run, EmptyCircuitStaysAtZero) {
  Circuit c;
  c.num_qubits = 3;
  const RunResult r = run(c, 500, 1);
  ASSERT_EQ(r.counts.size(), 1u);
  EXPECT_EQ(r.counts.at(0), 500u);
}

TEST(Run, DeterministicForSeed) {
  const Circuit c = parse_circuit("qubits 1\nh 0\n");
  const RunResult a = run(c, 10000, 99);
  const RunResult b = run(c, 10000, 99);
  EXPECT_EQ(a.counts, b.counts);
  EXPECT_NE(a.counts, run(c, 10000, 100).counts);
}

TEST(Run, PartialMeasurementOrder) {
  // X on qubit 2 only; reading [2, 0] gives outcome "10".
  const Circuit c = parse_circuit("qubits 3\nx 2\nmeasure 2 0\n");
  const RunResult r = run(c, 10, 3);
  EXPECT_EQ(r.width, 2u);
  EXPECT_EQ(r.counts.at(0b10), 10u);
}

TEST(Run, Errors) {
  Circuit c;
  c.num_qubits = 2;
  EXPECT_THROW(run(c, 0, 1), std::invalid_argument);
  c.steps.push_back({Gate::hadamard(), {4}});
  EXPECT_THROW(run(c, 1, 1), std::out_of_range);
}

TEST(RunProperty, SupportMatchesAnalyticOutput) {
  // GHZ-style circuits: analytic support is {0, 2^n - 1}.
  for (unsigned n = 2; n <= 5; ++n) {
    std::ostringstream text;
    text << "qubits " << n << "\nh " << n - 1 << '\n';
    for (unsigned q = n - 1; q > 0; --q) text << "cnot " << q << ' ' << q - 1 << '\n';
    const RunResult r = run(parse_circuit(text.str()), 2000, n);
    for (const auto& [index, count] : r.counts) {
      EXPECT_TRUE(index == 0 || index == (BasisIndex{1} << n) - 1) << index;
    }
    std::uint64_t total = 0;
    for (const auto& [index, count] : r.counts) total += count;
    EXPECT_EQ(total, 2000u);
  }
}
