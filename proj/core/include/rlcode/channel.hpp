#pragma once

#include "rlcode/codes.hpp"
#include "rlcode/grade.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rlcode {

/// Exhaustive decoding is limited to codes of this dimension.
inline constexpr std::size_t kMaxDecodeDimension = 20;

/// Pseudo-random generator used by run_channel; trial t is driven by an
/// engine seeded with seed + t.
inline constexpr std::string_view kChannelRng = "mt19937_64";

struct ChannelConfig {
  Grade flip_probability;
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;

  /// Throws PreconditionError unless 0 <= p < 1 and trials > 0.
  void validate() const;
};

/// m G over the two-element field. Throws PreconditionError when the message
/// length differs from k.
BitVector encode(const BitVector& message, const BinaryCode& code);

enum class DecodeStatus { decoded, ambiguous };

struct DecodeResult {
  DecodeStatus status = DecodeStatus::decoded;
  /// Message of the unique nearest codeword; empty when ambiguous.
  BitVector message;
  /// Hamming distance to the nearest codeword.
  std::size_t corrected = 0;
};

/// Nearest-codeword decoder over the full codebook. Ties are reported as
/// ambiguous rather than broken.
class MinDistanceDecoder {
 public:
  /// Throws PreconditionError when k exceeds kMaxDecodeDimension.
  explicit MinDistanceDecoder(const BinaryCode& code);

  DecodeResult decode(const BitVector& word) const;

 private:
  std::size_t n_ = 0;
  std::size_t k_ = 0;
  std::vector<BitVector> codebook_;  // codebook_[m] = encode(m), m read MSB first
};

DecodeResult decode_min_distance(const BitVector& word, const BinaryCode& code);

struct ChannelReport {
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  std::uint64_t ambiguous = 0;
  /// Decoded to a wrong message.
  std::uint64_t residual_errors = 0;
  std::uint64_t seed = 0;
  Grade p;

  /// `# rng=...` line, column names, then one tab-separated data row.
  std::string tsv() const;
};

/// Random messages through a binary symmetric channel with exact flip
/// probability; deterministic in the seed.
ChannelReport run_channel(const BinaryCode& code, const ChannelConfig& config);

struct ExhaustiveReport {
  std::size_t max_weight = 0;
  std::uint64_t patterns = 0;
  std::uint64_t messages = 0;
  std::uint64_t corrected = 0;
  std::uint64_t ambiguous = 0;
  std::uint64_t miscorrected = 0;

  bool all_corrected() const { return corrected == patterns * messages; }
};

/// Every message combined with every error pattern of weight <= max_weight.
ExhaustiveReport exhaustive_correction(const BinaryCode& code, std::size_t max_weight);

}  // namespace rlcode
