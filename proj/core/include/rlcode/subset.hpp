#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace rlcode {

/// Largest universe the library handles; subsets are single 64-bit masks.
inline constexpr std::size_t kMaxElements = 64;

/// Elements are identified by their declared index in the universe.
enum class Element : std::uint8_t {};

constexpr Element elem(std::size_t i) { return static_cast<Element>(i); }
constexpr std::size_t idx(Element e) { return static_cast<std::size_t>(e); }

/// A subset of a universe {0, ..., n-1}; bit i set means element i belongs.
class Subset {
 public:
  Subset() = default;
  explicit Subset(std::size_t universe) : universe_(universe) {}

  static Subset from_mask(std::size_t universe, std::uint64_t mask) {
    Subset s(universe);
    s.mask_ = mask & full_mask(universe);
    return s;
  }
  static Subset full(std::size_t universe) { return from_mask(universe, ~std::uint64_t{0}); }
  static Subset singleton(std::size_t universe, Element e) {
    Subset s(universe);
    s.insert(e);
    return s;
  }

  std::size_t universe() const { return universe_; }
  std::uint64_t mask() const { return mask_; }
  std::size_t count() const { return static_cast<std::size_t>(std::popcount(mask_)); }
  bool empty() const { return mask_ == 0; }
  bool is_full() const { return mask_ == full_mask(universe_); }

  bool contains(Element e) const { return (mask_ >> idx(e)) & 1U; }
  void insert(Element e) { mask_ |= std::uint64_t{1} << idx(e); }
  void erase(Element e) { mask_ &= ~(std::uint64_t{1} << idx(e)); }

  bool is_subset_of(const Subset& other) const { return (mask_ & ~other.mask_) == 0; }

  Subset operator|(const Subset& o) const { return from_mask(universe_, mask_ | o.mask_); }
  Subset operator&(const Subset& o) const { return from_mask(universe_, mask_ & o.mask_); }
  /// Symmetric difference.
  Subset operator^(const Subset& o) const { return from_mask(universe_, mask_ ^ o.mask_); }
  Subset complement() const { return from_mask(universe_, ~mask_); }

  std::vector<Element> members() const {
    std::vector<Element> out;
    out.reserve(count());
    for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(elem(std::countr_zero(m)));
    return out;
  }

  bool operator==(const Subset&) const = default;

  static constexpr std::uint64_t full_mask(std::size_t universe) {
    return universe >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << universe) - 1;
  }

 private:
  std::size_t universe_ = 0;
  std::uint64_t mask_ = 0;
};

/// Canonical listing order: ascending cardinality, then ascending mask
/// (the first declared element is the least significant bit).
inline bool canonical_less(const Subset& a, const Subset& b) {
  if (a.count() != b.count()) return a.count() < b.count();
  return a.mask() < b.mask();
}

}  // namespace rlcode
