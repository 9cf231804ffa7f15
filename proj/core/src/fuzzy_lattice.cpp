#include "rlcode/fuzzy_lattice.hpp"

#include "rlcode/errors.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <unordered_map>

namespace rlcode {

namespace {

void require_ideal(const ResiduatedLattice& l, const FuzzySubset& mu, const char* what) {
  if (mu.algebra() != l.id() || mu.size() != l.size()) {
    throw PreconditionError(std::string(what) + " belongs to a different algebra");
  }
  if (!is_fuzzy_ideal_boxplus(l, mu)) throw PreconditionError(std::string(what) + " is not a fuzzy ideal");
}

FuzzySubset pointwise_max(const ResiduatedLattice& l, std::span<const FuzzySubset> family) {
  std::vector<Grade> out(l.size(), Grade(0));
  for (const auto& mu : family)
    for (std::size_t x = 0; x < l.size(); ++x) out[x] = std::max(out[x], mu[elem(x)]);
  return FuzzySubset(l.id(), std::move(out));
}

// Grid ideals as vectors of grid positions.
using Levels = std::vector<std::uint8_t>;

bool levels_form_ideal(const ResiduatedLattice& l, const Levels& v) {
  const std::size_t n = l.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Element ex = elem(x), ey = elem(y);
      if (l.leq(ex, ey) && v[x] < v[y]) return false;
      if (v[idx(l.boxplus(ex, ey))] < std::min(v[x], v[y])) return false;
    }
  }
  return true;
}

std::vector<Levels> enumerate_levels(const ResiduatedLattice& l, const ValueGrid& grid, std::uint64_t budget) {
  const auto space = grid_search_space(l, grid);
  if (space > budget) {
    throw BudgetExceeded("grid search space " + std::to_string(space) + " exceeds budget " + std::to_string(budget));
  }
  const std::size_t n = l.size();
  const auto g = static_cast<std::uint8_t>(grid.size());
  std::vector<Levels> out;
  Levels v(n, 0);
  for (;;) {
    if (levels_form_ideal(l, v)) out.push_back(v);
    // Odometer with the last element least significant.
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++v[pos] < g) break;
      v[pos] = 0;
      if (pos == 0) return out;
    }
  }
}

FuzzySubset to_fuzzy(const ResiduatedLattice& l, const ValueGrid& grid, const Levels& v) {
  std::vector<Grade> grades;
  grades.reserve(v.size());
  for (auto k : v) grades.push_back(grid.values()[k]);
  return FuzzySubset(l.id(), std::move(grades));
}

void require_on_grid(const FuzzySubset& mu, const ValueGrid& grid, const char* what) {
  for (const auto& g : mu.grades())
    if (!grid.contains(g)) throw PreconditionError(std::string(what) + " has grade " + format_grade(g) + " off the grid");
}

std::vector<FuzzySubset> arrow_candidates(const ResiduatedLattice& l, const FuzzySubset& mu1,
                                          const FuzzySubset& mu2, const ValueGrid& grid, std::uint64_t budget) {
  require_ideal(l, mu1, "first argument");
  require_ideal(l, mu2, "second argument");
  require_on_grid(mu1, grid, "first argument");
  require_on_grid(mu2, grid, "second argument");
  std::vector<FuzzySubset> out;
  for (auto& mu : grid_fuzzy_ideals(l, grid, budget))
    if (fi_meet(l, mu1, mu).included_in(mu2)) out.push_back(std::move(mu));
  return out;
}

}  // namespace

// --- ValueGrid -----------------------------------------------------------------

ValueGrid::ValueGrid(std::vector<Grade> values) : values_(std::move(values)) {
  if (values_.size() < 2 || values_.front() != Grade(0) || values_.back() != Grade(1)) {
    throw PreconditionError("grid must start at 0 and end at 1");
  }
  if (values_.size() > std::numeric_limits<std::uint8_t>::max()) throw PreconditionError("grid too large");
  for (std::size_t i = 1; i < values_.size(); ++i)
    if (!(values_[i - 1] < values_[i])) throw PreconditionError("grid must be strictly ascending");
}

ValueGrid ValueGrid::covering(const FuzzySubset& a, const FuzzySubset& b) {
  std::vector<Grade> v = a.grades();
  v.insert(v.end(), b.grades().begin(), b.grades().end());
  v.push_back(Grade(0));
  v.push_back(Grade(1));
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return ValueGrid(std::move(v));
}

bool ValueGrid::contains(const Grade& g) const { return position(g).has_value(); }

std::optional<std::size_t> ValueGrid::position(const Grade& g) const {
  const auto it = std::lower_bound(values_.begin(), values_.end(), g);
  if (it == values_.end() || *it != g) return std::nullopt;
  return static_cast<std::size_t>(it - values_.begin());
}

// --- meet / join -------------------------------------------------------------------

FuzzySubset fi_meet(const ResiduatedLattice& l, const FuzzySubset& a, const FuzzySubset& b) {
  require_ideal(l, a, "first argument");
  require_ideal(l, b, "second argument");
  std::vector<Grade> out(l.size());
  for (std::size_t x = 0; x < l.size(); ++x) out[x] = std::min(a[elem(x)], b[elem(x)]);
  return FuzzySubset(l.id(), std::move(out));
}

JoinResult fi_join(const ResiduatedLattice& l, std::span<const FuzzySubset> family) {
  if (family.empty()) return {FuzzySubset::constant(l, Grade(0)), true};
  for (const auto& mu : family) require_ideal(l, mu, "family member");
  return {fuzzy_closure(l, pointwise_max(l, family)), false};
}

FuzzySubset fi_join(const ResiduatedLattice& l, const FuzzySubset& a, const FuzzySubset& b) {
  const FuzzySubset pair[] = {a, b};
  return fi_join(l, pair).ideal;
}

BrouwerianReport brouwerian_check(const ResiduatedLattice& l, const FuzzySubset& mu,
                                  std::span<const FuzzySubset> family) {
  const FuzzySubset lhs = fi_meet(l, mu, fi_join(l, family).ideal);
  std::vector<FuzzySubset> meets;
  meets.reserve(family.size());
  for (const auto& f : family) meets.push_back(fi_meet(l, mu, f));
  const FuzzySubset rhs = fi_join(l, meets).ideal;

  BrouwerianReport report;
  for (std::size_t x = 0; x < l.size(); ++x) {
    if (lhs[elem(x)] != rhs[elem(x)]) {
      report.holds = false;
      report.discrepancy = elem(x);
      report.lhs = lhs[elem(x)];
      report.rhs = rhs[elem(x)];
      break;
    }
  }
  return report;
}

// --- grid enumeration and the arrow ---------------------------------------------------

std::uint64_t grid_search_space(const ResiduatedLattice& l, const ValueGrid& grid) {
  std::uint64_t space = 1;
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (space > std::numeric_limits<std::uint64_t>::max() / grid.size()) return std::numeric_limits<std::uint64_t>::max();
    space *= grid.size();
  }
  return space;
}

std::vector<FuzzySubset> grid_fuzzy_ideals(const ResiduatedLattice& l, const ValueGrid& grid, std::uint64_t budget) {
  std::vector<FuzzySubset> out;
  for (const auto& v : enumerate_levels(l, grid, budget)) out.push_back(to_fuzzy(l, grid, v));
  return out;
}

FuzzySubset heyting_arrow(const ResiduatedLattice& l, const FuzzySubset& mu1, const FuzzySubset& mu2,
                          const ValueGrid& grid, std::uint64_t budget) {
  const auto candidates = arrow_candidates(l, mu1, mu2, grid, budget);
  return fi_join(l, candidates).ideal;
}

FuzzySubset heyting_arrow(const ResiduatedLattice& l, const FuzzySubset& mu1, const FuzzySubset& mu2) {
  return heyting_arrow(l, mu1, mu2, ValueGrid::covering(mu1, mu2));
}

FuzzySubset heyting_arrow_pointwise_sup(const ResiduatedLattice& l, const FuzzySubset& mu1,
                                        const FuzzySubset& mu2, const ValueGrid& grid, std::uint64_t budget) {
  const auto candidates = arrow_candidates(l, mu1, mu2, grid, budget);
  return pointwise_max(l, candidates);
}

// --- exhaustive Heyting check ---------------------------------------------------------------

bool LawReport::ok() const {
  return !budget_exceeded && std::all_of(checks.begin(), checks.end(), [](const LawCheck& c) { return c.pass; });
}

std::string LawReport::text() const {
  std::ostringstream os;
  if (budget_exceeded) os << "FAIL budget exceeded: search space " << search_space << "\n";
  for (const auto& c : checks) {
    os << (c.pass ? "PASS " : "FAIL ") << c.law;
    if (!c.pass) os << " " << c.witness;
    os << "\n";
  }
  return os.str();
}

std::string LawReport::tsv() const {
  std::ostringstream os;
  if (budget_exceeded) os << "budget\tFAIL\tsearch space " << search_space << "\n";
  for (const auto& c : checks) os << c.law << "\t" << (c.pass ? "PASS" : "FAIL") << "\t" << c.witness << "\n";
  return os.str();
}

std::string format_grades(const FuzzySubset& mu) {
  std::string out = "(";
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (i) out += ", ";
    out += format_grade(mu.grades()[i]);
  }
  return out + ")";
}

LawReport heyting_axioms_check(const ResiduatedLattice& l, const ValueGrid& grid, std::uint64_t budget) {
  LawReport report;
  report.search_space = grid_search_space(l, grid);
  if (report.search_space > budget) {
    report.budget_exceeded = true;
    return report;
  }
  const auto ideals = grid_fuzzy_ideals(l, grid, budget);
  const std::size_t m = ideals.size();
  report.fuzzy_ideals = m;

  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < m; ++i) index.emplace(format_grades(ideals[i]), i);
  auto lookup = [&](const FuzzySubset& mu) -> std::optional<std::size_t> {
    const auto it = index.find(format_grades(mu));
    if (it == index.end()) return std::nullopt;
    return it->second;
  };

  // Checks are handed out by reference, so the vector must never reallocate.
  constexpr std::size_t kLaws = 10;
  report.checks.reserve(kLaws);
  auto law = [&](std::string name) -> LawCheck& {
    if (report.checks.size() == kLaws) throw InvariantError("law table overflow");
    report.checks.push_back({std::move(name), true, ""});
    return report.checks.back();
  };
  auto fail = [&](LawCheck& c, std::initializer_list<std::size_t> who) {
    if (!c.pass) return;
    c.pass = false;
    for (auto i : who) c.witness += (c.witness.empty() ? "" : " ") + format_grades(ideals[i]);
  };

  // Operation tables over indices into `ideals`.
  std::vector<std::size_t> meet(m * m), join(m * m);
  std::vector<bool> le(m * m);
  auto& meet_closed = law("meet of grid fuzzy ideals is a grid fuzzy ideal");
  auto& join_closed = law("join of grid fuzzy ideals is a grid fuzzy ideal");
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      le[i * m + j] = ideals[i].included_in(ideals[j]);
      const auto mi = lookup(fi_meet(l, ideals[i], ideals[j]));
      const auto ji = lookup(fi_join(l, ideals[i], ideals[j]));
      if (!mi) fail(meet_closed, {i, j});
      if (!ji) fail(join_closed, {i, j});
      meet[i * m + j] = mi.value_or(0);
      join[i * m + j] = ji.value_or(0);
    }
  }
  if (!meet_closed.pass || !join_closed.pass) return report;

  const auto bottom = lookup(FuzzySubset::constant(l, Grade(0)));
  const auto top = lookup(FuzzySubset::constant(l, Grade(1)));
  auto& bounds = law("constant 0 is least and constant 1 is greatest");
  if (!bottom || !top) {
    bounds.pass = false;
    bounds.witness = "constant map missing";
  } else {
    for (std::size_t i = 0; i < m; ++i)
      if (!le[*bottom * m + i] || !le[i * m + *top]) fail(bounds, {i});
  }

  auto& comm = law("meet and join commutative");
  auto& absorb = law("absorption");
  auto& order = law("meet agrees with the pointwise order");
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (meet[i * m + j] != meet[j * m + i] || join[i * m + j] != join[j * m + i]) fail(comm, {i, j});
      if (join[i * m + meet[i * m + j]] != i || meet[i * m + join[i * m + j]] != i) fail(absorb, {i, j});
      if ((meet[i * m + j] == i) != le[i * m + j]) fail(order, {i, j});
    }
  }

  // Arrow: greatest k with meet(i, k) <= j, accumulated through join.
  std::vector<std::size_t> arrow(m * m);
  auto& arrow_max = law("arrow is the greatest admissible grid fuzzy ideal");
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      std::size_t acc = *bottom;
      for (std::size_t k = 0; k < m; ++k)
        if (le[meet[i * m + k] * m + j]) acc = join[acc * m + k];
      arrow[i * m + j] = acc;
      if (!le[meet[i * m + acc] * m + j]) fail(arrow_max, {i, j});
    }
  }

  auto& assoc = law("meet and join associative");
  auto& distrib = law("meet distributes over join");
  auto& adjunction = law("adjunction mu1 ^ mu <= mu2 iff mu <= mu1 => mu2");
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k) {
        if (meet[meet[i * m + j] * m + k] != meet[i * m + meet[j * m + k]] ||
            join[join[i * m + j] * m + k] != join[i * m + join[j * m + k]]) {
          fail(assoc, {i, j, k});
        }
        if (meet[i * m + join[j * m + k]] != join[meet[i * m + j] * m + meet[i * m + k]]) fail(distrib, {i, j, k});
        // i = mu1, j = mu2, k = mu
        if (le[meet[i * m + k] * m + j] != le[k * m + arrow[i * m + j]]) fail(adjunction, {i, j, k});
      }
    }
  }
  return report;
}

}  // namespace rlcode
