#include "rlcode/channel.hpp"
#include "rlcode/errors.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

namespace rlcode {
namespace {

using testing::matrix_of;

BinaryCode order8_code() { return BinaryCode(matrix_of({"11110000", "11001100", "10101010"})); }

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

TEST(Encode, Examples) {
  const auto c = order8_code();
  EXPECT_EQ(encode(BitVector::from_string("111"), c).to_string(), "10010110");
  EXPECT_EQ(encode(BitVector::from_string("100"), c).to_string(), "11110000");
  EXPECT_TRUE(encode(BitVector::from_string("000"), c).is_zero());
  EXPECT_THROW(encode(BitVector::from_string("11"), c), PreconditionError);
}

TEST(Decode, CleanWordsDecodeToTheirMessage) {
  const auto c = order8_code();
  const MinDistanceDecoder dec(c);
  for (std::uint64_t m = 0; m < 8; ++m) {
    const auto msg = BitVector::from_integer(3, m);
    const auto r = dec.decode(encode(msg, c));
    EXPECT_EQ(r.status, DecodeStatus::decoded);
    EXPECT_EQ(r.message, msg);
    EXPECT_EQ(r.corrected, 0U);
  }
}

TEST(Decode, SingleFlipsAreCorrectedByDistanceFour) {
  const auto c = order8_code();
  for (std::uint64_t m = 0; m < 8; ++m)
    for (std::size_t i = 0; i < 8; ++i) {
      const auto msg = BitVector::from_integer(3, m);
      auto word = encode(msg, c);
      word.flip(i);
      const auto r = decode_min_distance(word, c);
      ASSERT_EQ(r.status, DecodeStatus::decoded);
      EXPECT_EQ(r.message, msg);
      EXPECT_EQ(r.corrected, 1U);
    }
}

TEST(Decode, TiesAreReportedAsAmbiguous) {
  const BinaryCode c(matrix_of({"1100", "1010"}));
  // 1000 is at distance 1 from 0000, 1100 and 1010.
  const auto r = decode_min_distance(BitVector::from_string("1000"), c);
  EXPECT_EQ(r.status, DecodeStatus::ambiguous);
  EXPECT_EQ(r.message.size(), 0U);
  EXPECT_EQ(r.corrected, 1U);
}

TEST(Decode, Limits) {
  BitMatrix big(21, 21);
  for (std::size_t i = 0; i < 21; ++i) big.row(i).set(i);
  EXPECT_THROW(MinDistanceDecoder{BinaryCode(big)}, PreconditionError);
  EXPECT_THROW(decode_min_distance(BitVector(7), order8_code()), PreconditionError);
}

TEST(Channel, NoiselessChannelAlwaysSucceeds) {
  const auto r = run_channel(order8_code(), {Grade(0), 500, 1});
  EXPECT_EQ(r.successes, 500U);
  EXPECT_EQ(r.ambiguous + r.residual_errors, 0U);
}

TEST(Channel, OutcomesPartitionTheTrials) {
  const auto r = run_channel(order8_code(), {Grade(1, 4), 2000, 9});
  EXPECT_EQ(r.successes + r.ambiguous + r.residual_errors, r.trials);
  EXPECT_GT(r.successes, 0U);
  EXPECT_GT(r.ambiguous + r.residual_errors, 0U);
}

TEST(Channel, DeterministicInTheSeed) {
  const auto c = BinaryCode(boolean_form_matrix(4));
  const ChannelConfig cfg{Grade(1, 10), 300, 42};
  const auto a = run_channel(c, cfg).tsv();
  EXPECT_EQ(a, run_channel(c, cfg).tsv());
  EXPECT_EQ(a.rfind("# rng=mt19937_64", 0), 0U);
  EXPECT_NE(a.find("trials\tsuccesses\tambiguous\tresidual_errors\tseed\tp\n"), std::string::npos);
  EXPECT_NE(a.find("\t42\t1/10\n"), std::string::npos);
}

TEST(Channel, ConfigurationIsValidated) {
  const auto c = order8_code();
  EXPECT_THROW(run_channel(c, {Grade(1), 10, 0}), PreconditionError);
  EXPECT_THROW(run_channel(c, {Grade(-1, 2), 10, 0}), PreconditionError);
  EXPECT_THROW(run_channel(c, {Grade(1, 2), 0, 0}), PreconditionError);
}

TEST(Exhaustive, Hadamard16CorrectsThreeErrors) {
  const auto h = hadamard_from_boolean(4);
  const auto r = exhaustive_correction(h.code, 3);
  EXPECT_EQ(r.patterns, 1 + 16 + 120 + 560U);
  EXPECT_EQ(r.messages, 16U);
  EXPECT_TRUE(r.all_corrected());
}

TEST(Exhaustive, Hadamard8DoesNotCorrectAllDoubleErrors) {
  const auto r = exhaustive_correction(order8_code(), 2);
  EXPECT_FALSE(r.all_corrected());
  EXPECT_GT(r.ambiguous, 0U);
}

TEST(Exhaustive, GuaranteedRadiusHoldsForSmallCodes) {
  std::vector<BinaryCode> codes{BinaryCode(matrix_of({"1100", "1010"})),
                                BinaryCode(matrix_of({"111000000", "100100100"})), order8_code(),
                                hadamard_from_boolean(4).code};
  for (const auto& c : codes) {
    const std::size_t t = (c.d() - 1) / 2;
    const auto r = exhaustive_correction(c, t);
    std::size_t patterns = 0;
    for (std::size_t w = 0; w <= t; ++w) patterns += binomial(c.n(), w);
    EXPECT_EQ(r.patterns, patterns);
    EXPECT_TRUE(r.all_corrected()) << format_params(c.params());
  }
}

}  // namespace
}  // namespace rlcode
