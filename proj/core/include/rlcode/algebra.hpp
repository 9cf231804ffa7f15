#pragma once

#include "rlcode/subset.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rlcode {

/// Dense n x n operation table indexed by element index.
class BinaryTable {
 public:
  BinaryTable() = default;
  explicit BinaryTable(std::size_t n, Element fill = Element{}) : n_(n), cells_(n * n, fill) {}

  std::size_t size() const { return n_; }
  Element operator()(Element x, Element y) const { return cells_[idx(x) * n_ + idx(y)]; }
  void set(Element x, Element y, Element v) { cells_[idx(x) * n_ + idx(y)] = v; }
  std::span<const Element> cells() const { return cells_; }

  bool operator==(const BinaryTable&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<Element> cells_;
};

using UnaryTable = std::vector<Element>;

/// Fingerprint of an algebra's tables; tags ideals and fuzzy subsets with
/// the algebra they were built over.
enum class AlgebraId : std::uint64_t {};

/// One violated law together with the first witnessing tuple in index order.
struct Violation {
  std::string law;
  std::vector<Element> witness;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  /// One line per violation, e.g. `adjunction: (b, b, a)`.
  std::string describe(std::span<const std::string> names) const;
};

// ---------------------------------------------------------------------------
// Raw table bundles. These carry unvalidated candidates; the validated
// algebra classes below are built from them.

struct ResiduatedTables {
  std::vector<std::string> names;
  BinaryTable join, meet, prod, impl;
  Element bottom{}, top{};

  bool operator==(const ResiduatedTables&) const = default;
};

struct WajsbergTables {
  std::vector<std::string> names;
  BinaryTable circ;
  UnaryTable neg;
  Element one{};

  bool operator==(const WajsbergTables&) const = default;
};

struct MvTables {
  std::vector<std::string> names;
  BinaryTable oplus, odot;
  UnaryTable prime;
  Element zero{};  // theta
  Element one{};   // theta'

  bool operator==(const MvTables&) const = default;
};

struct BooleanAlgebraTables {
  std::vector<std::string> names;
  BinaryTable join, meet;
  UnaryTable complement;
  Element bottom{}, top{};

  bool operator==(const BooleanAlgebraTables&) const = default;
};

struct BooleanRingView {
  std::vector<std::string> names;
  BinaryTable add, mul;
  Element zero{}, one{};

  bool operator==(const BooleanRingView&) const = default;
};

// ---------------------------------------------------------------------------
// Validation. Each function first checks structure (sizes, closure, names)
// and throws StructuralError on malformed input; axiom failures are returned
// in the report, one entry per violated law.

/// Bounded lattice, commutative monoid, adjunction, and agreement of the
/// order x <= y iff x -> y = 1 with the lattice order.
ValidationReport validate_residuated_lattice(const ResiduatedTables& t);

/// Wajsberg axioms plus partial-order laws of the natural order.
ValidationReport validate_wajsberg(const WajsbergTables& t);

/// Abelian monoid laws for (oplus, theta), the three MV axioms, and
/// consistency of odot with x odot y = (x' oplus y')'.
ValidationReport validate_mv(const MvTables& t);

/// Distributive complemented bounded lattice.
ValidationReport validate_boolean_algebra(const BooleanAlgebraTables& t);

/// Commutative unitary ring with x*x = x.
ValidationReport validate_boolean_ring(const BooleanRingView& r);

/// The unique element u with u o x = x for every x, if there is one.
std::optional<Element> find_left_identity(const BinaryTable& circ);

// ---------------------------------------------------------------------------

/// A validated finite residuated lattice. Immutable.
class ResiduatedLattice {
 public:
  /// Validates and throws AxiomError (with the report text) on failure.
  static ResiduatedLattice make(ResiduatedTables tables);

  std::size_t size() const { return t_.names.size(); }
  const std::string& name(Element e) const { return t_.names[idx(e)]; }
  const std::vector<std::string>& names() const { return t_.names; }
  std::optional<Element> find(std::string_view name) const;
  const ResiduatedTables& tables() const { return t_; }
  AlgebraId id() const { return id_; }

  Element bottom() const { return t_.bottom; }
  Element top() const { return t_.top; }
  Element join(Element x, Element y) const { return t_.join(x, y); }
  Element meet(Element x, Element y) const { return t_.meet(x, y); }
  Element prod(Element x, Element y) const { return t_.prod(x, y); }
  Element impl(Element x, Element y) const { return t_.impl(x, y); }

  bool leq(Element x, Element y) const { return t_.impl(x, y) == t_.top; }
  /// x* = x -> 0.
  Element neg(Element x) const { return neg_[idx(x)]; }
  /// x (+) y = x* -> y**.
  Element boxplus(Element x, Element y) const { return boxplus_(x, y); }
  /// x (+)' y = x* -> y. Associative only.
  Element uplus(Element x, Element y) const { return t_.impl(neg(x), y); }

  /// Every element below x.
  const Subset& down_set(Element x) const { return down_[idx(x)]; }
  Subset universe() const { return Subset::full(size()); }

 private:
  explicit ResiduatedLattice(ResiduatedTables tables);

  ResiduatedTables t_;
  AlgebraId id_{};
  UnaryTable neg_;
  BinaryTable boxplus_;
  std::vector<Subset> down_;
};

/// A validated Wajsberg algebra, together with its residuated-lattice form.
class WajsbergAlgebra {
 public:
  /// Validates and throws AxiomError on failure.
  static WajsbergAlgebra make(WajsbergTables tables);

  std::size_t size() const { return t_.names.size(); }
  const std::string& name(Element e) const { return t_.names[idx(e)]; }
  const std::vector<std::string>& names() const { return t_.names; }
  std::optional<Element> find(std::string_view name) const;
  const WajsbergTables& tables() const { return t_; }

  Element circ(Element x, Element y) const { return t_.circ(x, y); }
  Element neg(Element x) const { return t_.neg[idx(x)]; }
  Element one() const { return t_.one; }
  /// theta = negation of 1.
  Element zero() const { return neg(t_.one); }
  /// Natural order: x <= y iff x o y = 1.
  bool leq(Element x, Element y) const { return circ(x, y) == t_.one; }

  /// Residuated-lattice form: -> is o, join and meet from the natural order,
  /// x (.) y = neg(x o neg y).
  const ResiduatedLattice& lattice() const { return lattice_; }

 private:
  WajsbergAlgebra(WajsbergTables tables, ResiduatedLattice lattice)
      : t_(std::move(tables)), lattice_(std::move(lattice)) {}

  WajsbergTables t_;
  ResiduatedLattice lattice_;
};

/// A validated MV-algebra (X, oplus, ', theta) with derived odot.
class MvAlgebra {
 public:
  static MvAlgebra make(MvTables tables);

  std::size_t size() const { return t_.names.size(); }
  const std::vector<std::string>& names() const { return t_.names; }
  const MvTables& tables() const { return t_; }

  Element sum(Element x, Element y) const { return t_.oplus(x, y); }
  Element product(Element x, Element y) const { return t_.odot(x, y); }
  Element prime(Element x) const { return t_.prime[idx(x)]; }
  Element zero() const { return t_.zero; }
  Element one() const { return t_.one; }

 private:
  explicit MvAlgebra(MvTables tables) : t_(std::move(tables)) {}
  MvTables t_;
};

// ---------------------------------------------------------------------------
// Conversions

/// Builds the residuated form of a Wajsberg table set. Throws AxiomError if
/// the natural order lacks a join or meet for some pair.
ResiduatedTables residuated_tables_of(const WajsbergTables& w);

/// x o y := x -> y, negation := x*, 1 := top. Throws AxiomError if the
/// result is not a Wajsberg algebra (e.g. negation is not involutive).
WajsbergAlgebra to_wajsberg(const ResiduatedLattice& l);

/// x oplus y = neg(x) o y, x odot y = neg(x o neg(y)), theta = neg(1).
MvAlgebra wajsberg_to_mv(const WajsbergAlgebra& w);

/// x o y = x' oplus y, negation = ', one = theta'.
WajsbergAlgebra mv_to_wajsberg(const MvAlgebra& m);

/// Boolean-algebra reading of an MV-algebra: join = oplus, meet = odot,
/// complement = '. Throws PreconditionError naming the first x with
/// x oplus x != x, or on any Boolean-algebra axiom failure.
BooleanAlgebraTables boolean_algebra_of(const MvAlgebra& m);

/// x + y = (x v y) ^ d(x ^ y), x * y = x ^ y. Throws PreconditionError with
/// the witness when the input is not a Boolean algebra.
BooleanRingView boolean_ring_view(const BooleanAlgebraTables& b);

/// x v y = x + y + xy, x ^ y = xy, d x = 1 + x. Throws PreconditionError
/// when the input is not a Boolean ring.
BooleanAlgebraTables boolean_algebra_of(const BooleanRingView& r);

/// The 2^n-element Wajsberg algebra {0,1}^n with componentwise classical
/// implication. Elements are the n-bit tuples in lexicographic order, named
/// by their bit strings (first component leftmost), the all-zero tuple first.
WajsbergAlgebra product_wajsberg(std::size_t n);

}  // namespace rlcode
