#pragma once

#include "rlcode/algebra.hpp"
#include "rlcode/grade.hpp"

#include <vector>

namespace rlcode {

/// Total map from the universe of one algebra to exact grades in [0,1].
class FuzzySubset {
 public:
  /// Throws PreconditionError if a grade lies outside [0,1].
  FuzzySubset(AlgebraId algebra, std::vector<Grade> grades);

  static FuzzySubset constant(const ResiduatedLattice& l, Grade g);

  AlgebraId algebra() const { return algebra_; }
  std::size_t size() const { return grades_.size(); }
  const Grade& operator[](Element e) const { return grades_[idx(e)]; }
  const std::vector<Grade>& grades() const { return grades_; }

  /// Distinct grades, ascending.
  std::vector<Grade> image() const;

  /// Pointwise order mu <= nu. Throws PreconditionError across algebras.
  bool included_in(const FuzzySubset& other) const;

  bool operator==(const FuzzySubset&) const = default;

 private:
  AlgebraId algebra_{};
  std::vector<Grade> grades_;
};

/// Order-reversing, and mu(x (+)' y) >= min(mu(x), mu(y)).
bool is_fuzzy_ideal(const ResiduatedLattice& l, const FuzzySubset& mu);

enum class SplitForm {
  /// mu(y) >= min(mu(x), mu(x* (.) y))
  product,
  /// mu(y) >= min(mu(x), mu((x* -> y*)*))
  implication,
};

/// mu(0) >= mu(x) for all x, plus the chosen splitting condition.
bool is_fuzzy_ideal_alt(const ResiduatedLattice& l, const FuzzySubset& mu, SplitForm form = SplitForm::product);

/// Order-reversing, and mu(x (+) y) >= min(mu(x), mu(y)).
bool is_fuzzy_ideal_boxplus(const ResiduatedLattice& l, const FuzzySubset& mu);

enum class BoundForm {
  /// if (x (+) y) (+) z* = 1 then mu(z) >= min(mu(x), mu(y))
  unit_equation,
  /// if z <= x (+) y then mu(z) >= min(mu(x), mu(y))
  order,
};

bool is_fuzzy_ideal_bound(const ResiduatedLattice& l, const FuzzySubset& mu, BoundForm form = BoundForm::order);

/// Verdicts of every characterization; they must coincide.
struct FuzzyIdealVerdicts {
  bool definition = false;
  bool split_product = false;
  bool split_implication = false;
  bool boxplus = false;
  bool bound_unit_equation = false;
  bool bound_order = false;

  bool agree() const;
};

FuzzyIdealVerdicts fuzzy_ideal_verdicts(const ResiduatedLattice& l, const FuzzySubset& mu);

/// alpha on members of `s`, beta elsewhere. Throws PreconditionError unless
/// alpha > beta.
FuzzySubset two_level(const ResiduatedLattice& l, const Subset& s, Grade alpha, Grade beta);

/// 1 on members of `s`, 0 elsewhere. The empty set gives constant 0.
FuzzySubset characteristic(const ResiduatedLattice& l, const Subset& s);

/// Least fuzzy ideal containing mu, computed from level sets: the grade of x
/// is the largest t in image(mu) such that x lies in the ideal generated by
/// {y : mu(y) >= t}.
FuzzySubset fuzzy_closure(const ResiduatedLattice& l, const FuzzySubset& mu);

}  // namespace rlcode
