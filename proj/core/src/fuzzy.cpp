#include "rlcode/fuzzy.hpp"

#include "rlcode/errors.hpp"
#include "rlcode/ideals.hpp"

#include <algorithm>

namespace rlcode {

namespace {

void require_same(const ResiduatedLattice& l, const FuzzySubset& mu) {
  if (mu.algebra() != l.id() || mu.size() != l.size()) {
    throw PreconditionError("fuzzy subset belongs to a different algebra");
  }
}

bool order_reversing(const ResiduatedLattice& l, const FuzzySubset& mu) {
  const std::size_t n = l.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (l.leq(elem(x), elem(y)) && mu[elem(x)] < mu[elem(y)]) return false;
  return true;
}

// mu(op(x, y)) >= min(mu(x), mu(y)) for every pair.
template <class Op>
bool superadditive(const ResiduatedLattice& l, const FuzzySubset& mu, Op op) {
  const std::size_t n = l.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Element ex = elem(x), ey = elem(y);
      if (mu[op(ex, ey)] < std::min(mu[ex], mu[ey])) return false;
    }
  return true;
}

}  // namespace

FuzzySubset::FuzzySubset(AlgebraId algebra, std::vector<Grade> grades)
    : algebra_(algebra), grades_(std::move(grades)) {
  for (const auto& g : grades_)
    if (g < 0 || g > 1) throw PreconditionError("grade outside [0,1]");
}

FuzzySubset FuzzySubset::constant(const ResiduatedLattice& l, Grade g) {
  return FuzzySubset(l.id(), std::vector<Grade>(l.size(), g));
}

std::vector<Grade> FuzzySubset::image() const {
  std::vector<Grade> out = grades_;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool FuzzySubset::included_in(const FuzzySubset& other) const {
  if (algebra_ != other.algebra_ || size() != other.size()) {
    throw PreconditionError("fuzzy subsets belong to different algebras");
  }
  for (std::size_t i = 0; i < grades_.size(); ++i)
    if (grades_[i] > other.grades_[i]) return false;
  return true;
}

bool is_fuzzy_ideal(const ResiduatedLattice& l, const FuzzySubset& mu) {
  require_same(l, mu);
  return order_reversing(l, mu) && superadditive(l, mu, [&](Element x, Element y) { return l.uplus(x, y); });
}

bool is_fuzzy_ideal_alt(const ResiduatedLattice& l, const FuzzySubset& mu, SplitForm form) {
  require_same(l, mu);
  const std::size_t n = l.size();
  const Grade& at_bottom = mu[l.bottom()];
  for (std::size_t x = 0; x < n; ++x)
    if (at_bottom < mu[elem(x)]) return false;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Element ex = elem(x), ey = elem(y);
      const Element rest = form == SplitForm::product ? l.prod(l.neg(ex), ey)
                                                      : l.neg(l.impl(l.neg(ex), l.neg(ey)));
      if (mu[ey] < std::min(mu[ex], mu[rest])) return false;
    }
  }
  return true;
}

bool is_fuzzy_ideal_boxplus(const ResiduatedLattice& l, const FuzzySubset& mu) {
  require_same(l, mu);
  return order_reversing(l, mu) && superadditive(l, mu, [&](Element x, Element y) { return l.boxplus(x, y); });
}

bool is_fuzzy_ideal_bound(const ResiduatedLattice& l, const FuzzySubset& mu, BoundForm form) {
  require_same(l, mu);
  const std::size_t n = l.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Element ex = elem(x), ey = elem(y);
      const Element sum = l.boxplus(ex, ey);
      const Grade floor = std::min(mu[ex], mu[ey]);
      for (std::size_t z = 0; z < n; ++z) {
        const Element ez = elem(z);
        const bool premise =
            form == BoundForm::order ? l.leq(ez, sum) : l.boxplus(sum, l.neg(ez)) == l.top();
        if (premise && mu[ez] < floor) return false;
      }
    }
  }
  return true;
}

bool FuzzyIdealVerdicts::agree() const {
  return definition == split_product && definition == split_implication && definition == boxplus &&
         definition == bound_unit_equation && definition == bound_order;
}

FuzzyIdealVerdicts fuzzy_ideal_verdicts(const ResiduatedLattice& l, const FuzzySubset& mu) {
  FuzzyIdealVerdicts v;
  v.definition = is_fuzzy_ideal(l, mu);
  v.split_product = is_fuzzy_ideal_alt(l, mu, SplitForm::product);
  v.split_implication = is_fuzzy_ideal_alt(l, mu, SplitForm::implication);
  v.boxplus = is_fuzzy_ideal_boxplus(l, mu);
  v.bound_unit_equation = is_fuzzy_ideal_bound(l, mu, BoundForm::unit_equation);
  v.bound_order = is_fuzzy_ideal_bound(l, mu, BoundForm::order);
  return v;
}

FuzzySubset two_level(const ResiduatedLattice& l, const Subset& s, Grade alpha, Grade beta) {
  if (!(alpha > beta)) throw PreconditionError("two-level fuzzy subset needs alpha > beta");
  if (s.universe() != l.size()) throw PreconditionError("subset universe does not match the algebra");
  std::vector<Grade> grades(l.size(), beta);
  for (Element e : s.members()) grades[idx(e)] = alpha;
  return FuzzySubset(l.id(), std::move(grades));
}

FuzzySubset characteristic(const ResiduatedLattice& l, const Subset& s) {
  if (s.universe() != l.size()) throw PreconditionError("subset universe does not match the algebra");
  std::vector<Grade> grades(l.size(), Grade(0));
  for (Element e : s.members()) grades[idx(e)] = Grade(1);
  return FuzzySubset(l.id(), std::move(grades));
}

FuzzySubset fuzzy_closure(const ResiduatedLattice& l, const FuzzySubset& mu) {
  require_same(l, mu);
  const std::size_t n = l.size();
  std::vector<Grade> out(n, Grade(0));
  std::vector<bool> assigned(n, false);
  auto levels = mu.image();
  // Descending: the first level whose generated ideal reaches x is the grade.
  for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
    Subset cut(n);
    for (std::size_t x = 0; x < n; ++x)
      if (mu[elem(x)] >= *it) cut.insert(elem(x));
    const Subset reached = ideal_closure(l, cut).members();
    for (Element x : reached.members()) {
      if (!assigned[idx(x)]) {
        out[idx(x)] = *it;
        assigned[idx(x)] = true;
      }
    }
  }
  return FuzzySubset(l.id(), std::move(out));
}

}  // namespace rlcode
