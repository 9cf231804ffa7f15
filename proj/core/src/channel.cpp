#include "rlcode/channel.hpp"

#include "rlcode/errors.hpp"

#include <limits>
#include <random>
#include <sstream>

namespace rlcode {

namespace {

// Uniform integer in [0, bound) by rejection, independent of the standard
// library's distribution implementation.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t rem = (max % bound + 1) % bound;  // 2^64 mod bound
  for (;;) {
    const std::uint64_t r = rng();
    if (rem == 0 || r <= max - rem) return r % bound;
  }
}

// Visits every subset of {0..n-1} of exactly `weight` elements.
template <class F>
void for_each_pattern(std::size_t n, std::size_t weight, std::vector<std::size_t>& chosen, std::size_t start, F& f) {
  if (chosen.size() == weight) {
    f(chosen);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    chosen.push_back(i);
    for_each_pattern(n, weight, chosen, i + 1, f);
    chosen.pop_back();
  }
}

}  // namespace

void ChannelConfig::validate() const {
  if (flip_probability < 0 || flip_probability >= 1) throw PreconditionError("flip probability must lie in [0,1)");
  if (trials == 0) throw PreconditionError("at least one trial is required");
}

BitVector encode(const BitVector& message, const BinaryCode& code) {
  if (message.size() != code.k()) {
    throw PreconditionError("message has " + std::to_string(message.size()) + " bits; the code needs " +
                            std::to_string(code.k()));
  }
  BitVector out(code.n());
  for (std::size_t i = 0; i < message.size(); ++i)
    if (message.get(i)) out ^= code.generator().row(i);
  return out;
}

MinDistanceDecoder::MinDistanceDecoder(const BinaryCode& code) : n_(code.n()), k_(code.k()) {
  if (k_ > kMaxDecodeDimension) {
    throw PreconditionError("dimension " + std::to_string(k_) + " exceeds the decoding cap " +
                            std::to_string(kMaxDecodeDimension));
  }
  const std::uint64_t count = std::uint64_t{1} << k_;
  codebook_.reserve(count);
  for (std::uint64_t m = 0; m < count; ++m) codebook_.push_back(encode(BitVector::from_integer(k_, m), code));
}

DecodeResult MinDistanceDecoder::decode(const BitVector& word) const {
  if (word.size() != n_) throw PreconditionError("received word has the wrong length");
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::size_t best_index = 0;
  std::size_t ties = 0;
  for (std::size_t m = 0; m < codebook_.size(); ++m) {
    const std::size_t dist = hamming_distance(word, codebook_[m]);
    if (dist < best) {
      best = dist;
      best_index = m;
      ties = 1;
    } else if (dist == best) {
      ++ties;
    }
  }
  DecodeResult r;
  r.corrected = best;
  if (ties > 1) {
    r.status = DecodeStatus::ambiguous;
    return r;
  }
  r.message = BitVector::from_integer(k_, best_index);
  return r;
}

DecodeResult decode_min_distance(const BitVector& word, const BinaryCode& code) {
  return MinDistanceDecoder(code).decode(word);
}

std::string ChannelReport::tsv() const {
  std::ostringstream os;
  os << "# rng=" << kChannelRng << " trial_seed=seed+trial\n";
  os << "trials\tsuccesses\tambiguous\tresidual_errors\tseed\tp\n";
  os << trials << '\t' << successes << '\t' << ambiguous << '\t' << residual_errors << '\t' << seed << '\t'
     << format_grade(p) << '\n';
  return os.str();
}

ChannelReport run_channel(const BinaryCode& code, const ChannelConfig& config) {
  config.validate();
  const MinDistanceDecoder decoder(code);
  const auto num = static_cast<std::uint64_t>(config.flip_probability.numerator());
  const auto den = static_cast<std::uint64_t>(config.flip_probability.denominator());

  ChannelReport report;
  report.trials = config.trials;
  report.seed = config.seed;
  report.p = config.flip_probability;
  for (std::uint64_t t = 0; t < config.trials; ++t) {
    std::mt19937_64 rng(config.seed + t);
    BitVector message(code.k());
    for (std::size_t i = 0; i < code.k(); ++i) message.set(i, (rng() & 1U) != 0);
    BitVector word = encode(message, code);
    for (std::size_t i = 0; i < code.n(); ++i)
      if (uniform_below(rng, den) < num) word.flip(i);
    const auto result = decoder.decode(word);
    if (result.status == DecodeStatus::ambiguous) {
      ++report.ambiguous;
    } else if (result.message == message) {
      ++report.successes;
    } else {
      ++report.residual_errors;
    }
  }
  return report;
}

ExhaustiveReport exhaustive_correction(const BinaryCode& code, std::size_t max_weight) {
  const MinDistanceDecoder decoder(code);
  ExhaustiveReport report;
  report.max_weight = max_weight;
  report.messages = std::uint64_t{1} << code.k();

  std::vector<BitVector> patterns;
  std::vector<std::size_t> chosen;
  auto collect = [&](const std::vector<std::size_t>& positions) {
    BitVector e(code.n());
    for (auto p : positions) e.set(p);
    patterns.push_back(std::move(e));
  };
  for (std::size_t w = 0; w <= max_weight && w <= code.n(); ++w) for_each_pattern(code.n(), w, chosen, 0, collect);
  report.patterns = patterns.size();

  for (std::uint64_t m = 0; m < report.messages; ++m) {
    const BitVector message = BitVector::from_integer(code.k(), m);
    const BitVector sent = encode(message, code);
    for (const auto& e : patterns) {
      const auto result = decoder.decode(sent ^ e);
      if (result.status == DecodeStatus::ambiguous) {
        ++report.ambiguous;
      } else if (result.message == message) {
        ++report.corrected;
      } else {
        ++report.miscorrected;
      }
    }
  }
  return report;
}

}  // namespace rlcode
