#pragma once

#include "rlcode/fuzzy.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rlcode {

/// Finite set of admissible grades: strictly ascending, starting at 0 and
/// ending at 1.
class ValueGrid {
 public:
  /// Throws PreconditionError when the invariant fails.
  explicit ValueGrid(std::vector<Grade> values);

  /// grades(a) u grades(b) u {0, 1}.
  static ValueGrid covering(const FuzzySubset& a, const FuzzySubset& b);

  const std::vector<Grade>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  bool contains(const Grade& g) const;
  /// Position of g in the grid, or nullopt.
  std::optional<std::size_t> position(const Grade& g) const;

 private:
  std::vector<Grade> values_;
};

/// Candidate-count ceiling for exhaustive enumerations.
inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 20;

/// Pointwise minimum of two fuzzy ideals.
FuzzySubset fi_meet(const ResiduatedLattice& l, const FuzzySubset& a, const FuzzySubset& b);

struct JoinResult {
  FuzzySubset ideal;
  /// Set when the family was empty; `ideal` is then the constant 0.
  bool empty_family = false;
};

/// Least fuzzy ideal above every member: the closure of the pointwise sup.
JoinResult fi_join(const ResiduatedLattice& l, std::span<const FuzzySubset> family);
FuzzySubset fi_join(const ResiduatedLattice& l, const FuzzySubset& a, const FuzzySubset& b);

struct BrouwerianReport {
  bool holds = true;
  /// First element where mu ^ (v F) and v (mu ^ F_i) differ.
  std::optional<Element> discrepancy;
  Grade lhs, rhs;
};

/// Compares fi_meet(mu, fi_join(family)) with fi_join of the meets.
BrouwerianReport brouwerian_check(const ResiduatedLattice& l, const FuzzySubset& mu,
                                  std::span<const FuzzySubset> family);

/// |grid|^|L|, saturating at UINT64_MAX.
std::uint64_t grid_search_space(const ResiduatedLattice& l, const ValueGrid& grid);

/// Every fuzzy ideal taking values in the grid, in ascending grade-vector
/// order (first element most significant). Throws BudgetExceeded when the
/// search space exceeds `budget`.
std::vector<FuzzySubset> grid_fuzzy_ideals(const ResiduatedLattice& l, const ValueGrid& grid,
                                           std::uint64_t budget = kDefaultBudget);

/// Relative pseudocomplement inside the grid-valued fuzzy ideals: the join of
/// every grid fuzzy ideal mu with mu1 ^ mu <= mu2. Throws PreconditionError
/// when an argument is not a fuzzy ideal or has a grade off the grid.
FuzzySubset heyting_arrow(const ResiduatedLattice& l, const FuzzySubset& mu1, const FuzzySubset& mu2,
                          const ValueGrid& grid, std::uint64_t budget = kDefaultBudget);

/// Same, on the default grid covering both arguments.
FuzzySubset heyting_arrow(const ResiduatedLattice& l, const FuzzySubset& mu1, const FuzzySubset& mu2);

/// The sup form: pointwise maximum of the same candidate family, without
/// the closure step.
FuzzySubset heyting_arrow_pointwise_sup(const ResiduatedLattice& l, const FuzzySubset& mu1,
                                        const FuzzySubset& mu2, const ValueGrid& grid,
                                        std::uint64_t budget = kDefaultBudget);

struct LawCheck {
  std::string law;
  bool pass = true;
  std::string witness;
};

struct LawReport {
  std::vector<LawCheck> checks;
  bool budget_exceeded = false;
  std::uint64_t search_space = 0;
  std::size_t fuzzy_ideals = 0;

  bool ok() const;
  /// `PASS law` / `FAIL law witness`, one line per law.
  std::string text() const;
  /// Tab-separated `law status witness`.
  std::string tsv() const;
};

/// Enumerates every grid fuzzy ideal and checks the Heyting-algebra laws
/// (closure of meet and join, lattice laws, distributivity, bounds, and the
/// arrow adjunction) exhaustively. A search space above `budget` yields a
/// report with budget_exceeded set and no checks.
LawReport heyting_axioms_check(const ResiduatedLattice& l, const ValueGrid& grid,
                               std::uint64_t budget = kDefaultBudget);

/// `(g0, g1, ...)` in element order.
std::string format_grades(const FuzzySubset& mu);

}  // namespace rlcode
