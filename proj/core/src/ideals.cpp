#include "rlcode/ideals.hpp"

#include "rlcode/errors.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace rlcode {

namespace {

Subset downward(const ResiduatedLattice& l, const Subset& s) {
  Subset out(l.size());
  for (Element x : s.members()) out = out | l.down_set(x);
  return out;
}

}  // namespace

IdealSet IdealSet::from(const ResiduatedLattice& l, const Subset& members) {
  if (members.universe() != l.size()) throw PreconditionError("subset universe does not match the algebra");
  if (!is_ideal(l, members)) throw PreconditionError("subset is not an ideal");
  return ideal_closure(l, members);
}

bool is_ideal(const ResiduatedLattice& l, const Subset& s) {
  if (s.empty()) throw PreconditionError("the empty set is never an ideal");
  if (downward(l, s) != s) return false;
  const auto members = s.members();
  for (Element i : members)
    for (Element j : members)
      if (!s.contains(l.boxplus(i, j))) return false;
  return true;
}

IdealSet ideal_closure(const ResiduatedLattice& l, const Subset& s) {
  if (s.empty()) throw PreconditionError("closure of the empty set is undefined");
  Subset current = downward(l, s);
  for (;;) {
    Subset next = current;
    const auto members = current.members();
    for (Element i : members)
      for (Element j : members) next.insert(l.boxplus(i, j));
    next = downward(l, next);
    if (next == current) break;
    current = next;
  }
  return IdealSet(l.id(), current);
}

std::vector<IdealSet> enumerate_ideals(const ResiduatedLattice& l, IdealScope scope) {
  const std::size_t n = l.size();
  std::unordered_set<std::uint64_t> seen;
  std::vector<IdealSet> found;
  std::deque<IdealSet> frontier;

  auto visit = [&](IdealSet ideal) {
    if (seen.insert(ideal.members().mask()).second) {
      found.push_back(ideal);
      frontier.push_back(std::move(ideal));
    }
  };
  visit(ideal_closure(l, Subset::singleton(n, l.bottom())));
  while (!frontier.empty()) {
    const IdealSet current = frontier.front();
    frontier.pop_front();
    for (std::size_t x = 0; x < n; ++x) {
      if (current.members().contains(elem(x))) continue;
      Subset grown = current.members();
      grown.insert(elem(x));
      visit(ideal_closure(l, grown));
    }
  }

  if (scope == IdealScope::proper) {
    std::erase_if(found, [&](const IdealSet& i) { return i.size() == 1 || i.members().is_full(); });
  }
  std::sort(found.begin(), found.end(),
            [](const IdealSet& a, const IdealSet& b) { return canonical_less(a.members(), b.members()); });
  return found;
}

bool is_prime_ideal(const WajsbergAlgebra& w, const IdealSet& p, PrimeReading reading) {
  if (p.algebra() != w.lattice().id()) throw PreconditionError("ideal belongs to a different algebra");
  const Subset& s = p.members();
  const auto range = reading == PrimeReading::as_written ? s.members() : Subset::full(w.size()).members();
  for (Element x : range)
    for (Element y : range)
      if (!s.contains(w.neg(w.circ(x, y))) && !s.contains(w.neg(w.circ(y, x)))) return false;
  return true;
}

bool is_prime_ideal_mv(const MvAlgebra& m, const Subset& p, PrimeReading reading) {
  const auto range = reading == PrimeReading::as_written ? p.members() : Subset::full(m.size()).members();
  for (Element x : range)
    for (Element y : range)
      if (!p.contains(m.prime(m.sum(m.prime(x), y))) && !p.contains(m.prime(m.sum(m.prime(y), x)))) return false;
  return true;
}

bool is_wajsberg_ideal(const WajsbergAlgebra& w, const Subset& s) {
  if (!s.contains(w.zero())) return false;
  const auto members = s.members();
  for (Element x : members) {
    for (std::size_t y = 0; y < w.size(); ++y)
      if (w.leq(elem(y), x) && !s.contains(elem(y))) return false;
    for (Element y : members)
      if (!s.contains(w.circ(w.neg(x), y))) return false;
  }
  return true;
}

bool is_mv_ideal(const MvAlgebra& m, const Subset& s) {
  if (!s.contains(m.zero())) return false;
  auto le = [&](Element x, Element y) { return m.sum(m.prime(x), y) == m.one(); };
  const auto members = s.members();
  for (Element x : members) {
    for (std::size_t y = 0; y < m.size(); ++y)
      if (le(elem(y), x) && !s.contains(elem(y))) return false;
    for (Element y : members)
      if (!s.contains(m.sum(x, y))) return false;
  }
  return true;
}

bool is_ring_ideal(const BooleanRingView& r, const Subset& s) {
  if (!s.contains(r.zero)) return false;
  const auto members = s.members();
  for (Element x : members) {
    for (Element y : members)
      if (!s.contains(r.add(x, y))) return false;
    for (std::size_t k = 0; k < r.names.size(); ++k)
      if (!s.contains(r.mul(elem(k), x))) return false;
  }
  return true;
}

std::string format_subset(std::span<const std::string> names, const Subset& s) {
  std::string out = "{";
  bool first = true;
  for (Element e : s.members()) {
    if (!first) out += ", ";
    out += names[idx(e)];
    first = false;
  }
  return out + "}";
}

std::string subset_bits(const Subset& s) {
  std::string out(s.universe(), '0');
  for (Element e : s.members()) out[idx(e)] = '1';
  return out;
}

}  // namespace rlcode
