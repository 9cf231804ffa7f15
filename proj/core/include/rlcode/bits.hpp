#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rlcode {

/// Fixed-length vector over the two-element field.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t length) : length_(length), words_((length + 63) / 64, 0) {}

  /// From a string of '0'/'1'; throws ParseError on any other character.
  static BitVector from_string(std::string_view bits);
  /// The low `length` bits of `value`, most significant first: bit length-1-i
  /// of value becomes coordinate i.
  static BitVector from_integer(std::size_t length, std::uint64_t value);

  std::size_t size() const { return length_; }
  bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i, bool v = true);
  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

  std::size_t weight() const;
  bool is_zero() const;
  /// Index of the first set coordinate, if any.
  std::optional<std::size_t> first_set() const;

  BitVector& operator^=(const BitVector& o);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }

  std::string to_string() const;

  bool operator==(const BitVector&) const = default;
  /// Lexicographic on the string form.
  bool lex_less(const BitVector& o) const { return to_string() < o.to_string(); }

 private:
  std::size_t length_ = 0;
  std::vector<std::uint64_t> words_;
};

std::size_t hamming_distance(const BitVector& a, const BitVector& b);

/// Row-major matrix over the two-element field.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}
  /// Throws PreconditionError on ragged rows.
  explicit BitMatrix(std::vector<BitVector> rows);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const BitVector& row(std::size_t i) const { return rows_[i]; }
  BitVector& row(std::size_t i) { return rows_[i]; }
  const std::vector<BitVector>& row_vectors() const { return rows_; }
  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  BitVector column(std::size_t c) const;

  bool is_zero() const;

  bool operator==(const BitMatrix&) const = default;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

/// Rank by elimination, pivoting on the lowest available row index.
std::size_t gf2_rank(const BitMatrix& m);

/// Reduced row echelon form with zero rows removed.
BitMatrix gf2_rref(const BitMatrix& m);

/// A nonempty set of row indices whose rows sum to zero, if the rows are
/// dependent. The set returned is the first one found by elimination.
std::optional<std::vector<std::size_t>> gf2_dependency(const BitMatrix& m);

}  // namespace rlcode
