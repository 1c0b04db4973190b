#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "qregsim/config.hpp"
#include "qregsim/state.hpp"

using namespace qreg;

namespace {

const double kThird = 1.0 / std::sqrt(3.0);
const double kHalfRoot = 1.0 / std::sqrt(2.0);

QuantumState three_pattern_state() {
  std::vector<Amplitude> amps(32);
  amps[0] = amps[16] = amps[31] = kThird;
  return from_amplitudes(5, amps);
}

QuantumState random_state(unsigned n, std::mt19937_64& gen) {
  std::normal_distribution<double> normal;
  std::vector<Amplitude> amps(std::size_t{1} << n);
  for (auto& a : amps) a = {normal(gen), normal(gen)};
  return QuantumState::from_amplitudes(n, std::move(amps), Normalization::Renormalize);
}

}  // namespace

TEST(BasisState, SingleQubitZero) {
  const auto s = basis_state(1, 0);
  ASSERT_EQ(s.dimension(), 2u);
  EXPECT_EQ(s[0], Amplitude(1.0));
  EXPECT_EQ(s[1], Amplitude(0.0));
}

TEST(BasisState, ThreePatternSecondComponent) {
  const auto s = basis_state(5, 16);
  for (BasisIndex i = 0; i < 32; ++i) EXPECT_EQ(s.probability(i), i == 16 ? 1.0 : 0.0);
  EXPECT_EQ(to_bitstring(16, 5), "10000");
}

TEST(BasisState, TwoQubitsAllOnes) {
  const auto s = basis_state(2, 3);
  EXPECT_EQ(s[3], Amplitude(1.0));
  EXPECT_EQ(s[0] + s[1] + s[2], Amplitude(0.0));
}

TEST(BasisState, Errors) {
  EXPECT_THROW(basis_state(2, 4), std::out_of_range);
  EXPECT_THROW(basis_state(0, 0), std::invalid_argument);
  EXPECT_THROW(basis_state(max_qubits() + 1, 0), CapacityError);
}

TEST(BasisState, ExactProbabilitiesEverywhere) {
  for (unsigned n = 1; n <= 4; ++n)
    for (BasisIndex i = 0; i < (BasisIndex{1} << n); ++i) {
      const auto s = basis_state(n, i);
      for (BasisIndex j = 0; j < s.dimension(); ++j) EXPECT_EQ(s.probability(j), i == j ? 1.0 : 0.0);
    }
}

TEST(FromAmplitudes, ThreePatternState) {
  const auto s = three_pattern_state();
  EXPECT_EQ(s.num_qubits(), 5u);
  EXPECT_NEAR(s.norm_squared(), 1.0, 1e-15);
}

TEST(FromAmplitudes, EqualSuperposition) {
  const std::vector<Amplitude> amps{kHalfRoot, kHalfRoot};
  EXPECT_NO_THROW(from_amplitudes(1, amps));
}

TEST(FromAmplitudes, RejectsZeroNorm) {
  const std::vector<Amplitude> amps(4);
  try {
    from_amplitudes(2, amps);
    FAIL() << "expected NormError";
  } catch (const NormError& e) {
    EXPECT_EQ(e.norm_squared(), 0.0);
  }
  // Renormalization cannot rescue a zero vector either.
  EXPECT_THROW(from_amplitudes(2, amps, Normalization::Renormalize), NormError);
}

TEST(FromAmplitudes, RejectsWrongLengthAndNonFinite) {
  EXPECT_THROW(from_amplitudes(2, std::vector<Amplitude>(3)), std::invalid_argument);
  std::vector<Amplitude> amps{1.0, std::nan("")};
  EXPECT_THROW(from_amplitudes(1, amps), std::invalid_argument);
  amps = {1.0, {0.0, INFINITY}};
  EXPECT_THROW(from_amplitudes(1, amps), std::invalid_argument);
}

TEST(FromAmplitudes, RejectsSlightlyOffNormUnlessAsked) {
  const std::vector<Amplitude> amps{0.8, 0.61};
  EXPECT_THROW(from_amplitudes(1, amps), NormError);
  const auto s = from_amplitudes(1, amps, Normalization::Renormalize);
  EXPECT_NEAR(s.norm_squared(), 1.0, 1e-15);
}

TEST(FromAmplitudes, CopiesInput) {
  std::vector<Amplitude> amps{1.0, 0.0};
  const auto s = from_amplitudes(1, amps);
  amps[0] = 0.0;
  EXPECT_EQ(s[0], Amplitude(1.0));
}

TEST(Tensor, BasisProduct) {
  const auto s = tensor(basis_state(1, 0), basis_state(1, 1));
  EXPECT_EQ(s.num_qubits(), 2u);
  EXPECT_EQ(s[1], Amplitude(1.0));
}

TEST(Tensor, PlusTimesZero) {
  const std::vector<Amplitude> plus{kHalfRoot, kHalfRoot};
  const auto s = tensor(from_amplitudes(1, plus), basis_state(1, 0));
  EXPECT_DOUBLE_EQ(s[0].real(), kHalfRoot);
  EXPECT_EQ(s[1], Amplitude(0.0));
  EXPECT_DOUBLE_EQ(s[2].real(), kHalfRoot);
  EXPECT_EQ(s[3], Amplitude(0.0));
}

TEST(Tensor, ThreePatternTimesOne) {
  // Index arithmetic oracle: (i_a << 1) | 1 for i_a in {0, 16, 31}.
  std::vector<BasisIndex> expected;
  for (BasisIndex ia : {0, 16, 31}) expected.push_back((ia << 1) | 1);
  ASSERT_EQ(expected, (std::vector<BasisIndex>{1, 33, 63}));

  const auto s = tensor(three_pattern_state(), basis_state(1, 1));
  ASSERT_EQ(s.num_qubits(), 6u);
  for (BasisIndex i = 0; i < 64; ++i) {
    const bool hit = std::find(expected.begin(), expected.end(), i) != expected.end();
    EXPECT_NEAR(s[i].real(), hit ? kThird : 0.0, 1e-15) << i;
  }
}

TEST(Tensor, CapExceeded) {
  const unsigned saved = max_qubits();
  set_max_qubits(4);
  EXPECT_THROW(tensor(basis_state(2, 0), basis_state(3, 0)), CapacityError);
  set_max_qubits(saved);
}

TEST(Probability, Examples) {
  EXPECT_NEAR(probability(three_pattern_state(), 31), 1.0 / 3.0, 1e-15);
  EXPECT_EQ(probability(basis_state(3, 5), 5), 1.0);
  const std::vector<Amplitude> plus{kHalfRoot, kHalfRoot};
  EXPECT_NEAR(probability(from_amplitudes(1, plus), 0), 0.5, 1e-15);
  EXPECT_THROW(probability(basis_state(2, 0), 4), std::out_of_range);
}

TEST(TensorProperty, FactorsProbabilities) {
  std::mt19937_64 gen(11);
  for (unsigned na = 1; na <= 5; ++na)
    for (unsigned nb = 1; na + nb <= 6; ++nb) {
      const auto a = random_state(na, gen);
      const auto b = random_state(nb, gen);
      const auto ab = tensor(a, b);
      EXPECT_NEAR(ab.norm_squared(), 1.0, 1e-9);
      for (BasisIndex ia = 0; ia < a.dimension(); ++ia)
        for (BasisIndex ib = 0; ib < b.dimension(); ++ib)
          EXPECT_NEAR(ab.probability((ia << nb) | ib), a.probability(ia) * b.probability(ib), 1e-12);
    }
}

TEST(TensorProperty, Associative) {
  std::mt19937_64 gen(12);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_state(1 + trial % 2, gen);
    const auto b = random_state(1 + trial % 3, gen);
    const auto c = random_state(1, gen);
    const auto left = tensor(tensor(a, b), c);
    const auto right = tensor(a, tensor(b, c));
    ASSERT_EQ(left.dimension(), right.dimension());
    for (BasisIndex i = 0; i < left.dimension(); ++i) EXPECT_NEAR(std::abs(left[i] - right[i]), 0.0, 1e-12);
  }
}

TEST(Bitstrings, RoundTripAndErrors) {
  EXPECT_EQ(from_bitstring("11111"), 31u);
  EXPECT_EQ(to_bitstring(5, 3), "101");
  EXPECT_THROW(from_bitstring("10a"), std::invalid_argument);
  EXPECT_THROW(from_bitstring(""), std::invalid_argument);
}
