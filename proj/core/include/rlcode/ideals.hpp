#pragma once

#include "rlcode/algebra.hpp"

#include <span>
#include <string>
#include <vector>

namespace rlcode {

/// A crisp ideal: nonempty, downward closed, closed under boxplus.
/// Only obtainable through the functions below, so the invariant holds for
/// every instance.
class IdealSet {
 public:
  /// Throws PreconditionError when `members` is not an ideal of `l`.
  static IdealSet from(const ResiduatedLattice& l, const Subset& members);

  AlgebraId algebra() const { return algebra_; }
  const Subset& members() const { return members_; }
  std::size_t size() const { return members_.count(); }

  bool operator==(const IdealSet&) const = default;

 private:
  IdealSet(AlgebraId algebra, Subset members) : algebra_(algebra), members_(members) {}
  friend IdealSet ideal_closure(const ResiduatedLattice&, const Subset&);

  AlgebraId algebra_{};
  Subset members_;
};

/// Ideal test: downward closed and closed under boxplus. Throws
/// PreconditionError for the empty set, which is never an ideal.
bool is_ideal(const ResiduatedLattice& l, const Subset& s);

/// Least ideal containing s. Throws PreconditionError for empty s.
IdealSet ideal_closure(const ResiduatedLattice& l, const Subset& s);

enum class IdealScope {
  all,
  /// Excludes the trivial ideals {0} and the whole algebra.
  proper,
};

/// Every ideal, sorted by (cardinality, mask).
std::vector<IdealSet> enumerate_ideals(const ResiduatedLattice& l, IdealScope scope = IdealScope::all);

enum class PrimeReading {
  /// (x o y)' in P or (y o x)' in P for all x, y in P.
  as_written,
  /// The same disjunction, quantified over all x, y of the algebra.
  conventional,
};

/// Primality on the Wajsberg form. Throws PreconditionError if p does not
/// belong to w.
bool is_prime_ideal(const WajsbergAlgebra& w, const IdealSet& p, PrimeReading reading = PrimeReading::as_written);

/// Primality on an MV form: (x' + y)' in P or (y' + x)' in P.
bool is_prime_ideal_mv(const MvAlgebra& m, const Subset& p, PrimeReading reading = PrimeReading::as_written);

/// Ideal of a Wajsberg algebra read directly: theta in I, downward closed in
/// the natural order, and ~x o y in I for x, y in I.
bool is_wajsberg_ideal(const WajsbergAlgebra& w, const Subset& s);

/// MV ideal: theta in I, downward closed, closed under oplus.
bool is_mv_ideal(const MvAlgebra& m, const Subset& s);

/// Ring ideal: contains zero, closed under +, absorbs multiplication.
bool is_ring_ideal(const BooleanRingView& r, const Subset& s);

/// `{e1, e2, ...}` in declared element order.
std::string format_subset(std::span<const std::string> names, const Subset& s);

/// Bitstring with the first declared element leftmost.
std::string subset_bits(const Subset& s);

}  // namespace rlcode
