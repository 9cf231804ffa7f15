#include "rlcode/bits.hpp"

#include "rlcode/errors.hpp"

#include <algorithm>
#include <bit>

namespace rlcode {

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw ParseError("bit string contains '" + std::string(1, bits[i]) + "'");
    }
  }
  return v;
}

BitVector BitVector::from_integer(std::size_t length, std::uint64_t value) {
  BitVector v(length);
  for (std::size_t i = 0; i < length; ++i) {
    const std::size_t shift = length - 1 - i;
    if (shift < 64 && ((value >> shift) & 1U)) v.set(i);
  }
  return v;
}

void BitVector::set(std::size_t i, bool v) {
  const auto bit = std::uint64_t{1} << (i % 64);
  if (v) {
    words_[i / 64] |= bit;
  } else {
    words_[i / 64] &= ~bit;
  }
}

std::size_t BitVector::weight() const {
  std::size_t w = 0;
  for (auto word : words_) w += static_cast<std::size_t>(std::popcount(word));
  return w;
}

bool BitVector::is_zero() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::optional<std::size_t> BitVector::first_set() const {
  for (std::size_t k = 0; k < words_.size(); ++k)
    if (words_[k] != 0) return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
  return std::nullopt;
}

BitVector& BitVector::operator^=(const BitVector& o) {
  if (o.length_ != length_) throw PreconditionError("bit vectors of different length");
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= o.words_[k];
  return *this;
}

std::string BitVector::to_string() const {
  std::string s(length_, '0');
  for (std::size_t i = 0; i < length_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

std::size_t hamming_distance(const BitVector& a, const BitVector& b) { return (a ^ b).weight(); }

BitMatrix::BitMatrix(std::vector<BitVector> rows) : rows_(std::move(rows)) {
  cols_ = rows_.empty() ? 0 : rows_.front().size();
  for (const auto& r : rows_)
    if (r.size() != cols_) throw PreconditionError("matrix rows have different lengths");
}

BitVector BitMatrix::column(std::size_t c) const {
  BitVector v(rows());
  for (std::size_t r = 0; r < rows(); ++r) v.set(r, get(r, c));
  return v;
}

bool BitMatrix::is_zero() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const BitVector& r) { return r.is_zero(); });
}

namespace {

struct Elimination {
  std::vector<BitVector> rows;
  // combo[i]: which original rows were summed into rows[i].
  std::vector<BitVector> combo;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
};

Elimination eliminate(const BitMatrix& m, bool reduce) {
  Elimination e;
  e.rows = m.row_vectors();
  const std::size_t k = m.rows();
  for (std::size_t i = 0; i < k; ++i) {
    BitVector unit(k);
    unit.set(i);
    e.combo.push_back(unit);
  }
  for (std::size_t col = 0; col < m.cols() && e.rank < k; ++col) {
    std::size_t pivot = e.rank;
    while (pivot < k && !e.rows[pivot].get(col)) ++pivot;
    if (pivot == k) continue;
    std::swap(e.rows[pivot], e.rows[e.rank]);
    std::swap(e.combo[pivot], e.combo[e.rank]);
    for (std::size_t r = reduce ? 0 : e.rank + 1; r < k; ++r) {
      if (r != e.rank && e.rows[r].get(col)) {
        e.rows[r] ^= e.rows[e.rank];
        e.combo[r] ^= e.combo[e.rank];
      }
    }
    e.pivot_cols.push_back(col);
    ++e.rank;
  }
  return e;
}

}  // namespace

std::size_t gf2_rank(const BitMatrix& m) { return eliminate(m, false).rank; }

BitMatrix gf2_rref(const BitMatrix& m) {
  auto e = eliminate(m, true);
  e.rows.resize(e.rank);
  if (e.rows.empty()) return BitMatrix(0, m.cols());
  return BitMatrix(std::move(e.rows));
}

std::optional<std::vector<std::size_t>> gf2_dependency(const BitMatrix& m) {
  const auto e = eliminate(m, false);
  if (e.rank == m.rows()) return std::nullopt;
  // Rows past the rank are zero; their combination vectors are dependencies.
  const BitVector& combo = e.combo[e.rank];
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < combo.size(); ++i)
    if (combo.get(i)) out.push_back(i);
  return out;
}

}  // namespace rlcode
