#include "rlcode/algebra.hpp"

#include "rlcode/errors.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace rlcode {

namespace {

// --- structural checks ------------------------------------------------------

void check_names(const std::vector<std::string>& names) {
  if (names.size() < 2) throw StructuralError("universe needs at least 2 elements");
  if (names.size() > kMaxElements) {
    throw StructuralError("universe has " + std::to_string(names.size()) + " elements; at most " +
                          std::to_string(kMaxElements) + " are supported");
  }
  std::unordered_set<std::string> seen;
  for (const auto& nm : names) {
    if (nm.empty()) throw StructuralError("empty element name");
    if (std::any_of(nm.begin(), nm.end(), [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == ','; })) {
      throw StructuralError("element name '" + nm + "' contains a separator");
    }
    if (!seen.insert(nm).second) throw StructuralError("duplicate element name '" + nm + "'");
  }
}

void check_element(Element e, std::size_t n, const char* what) {
  if (idx(e) >= n) throw StructuralError(std::string(what) + " refers to an element outside the universe");
}

void check_table(const BinaryTable& t, std::size_t n, const char* what) {
  if (t.size() != n) throw StructuralError(std::string(what) + " table has the wrong dimension");
  for (Element v : t.cells()) check_element(v, n, what);
}

void check_unary(const UnaryTable& t, std::size_t n, const char* what) {
  if (t.size() != n) throw StructuralError(std::string(what) + " table has the wrong length");
  for (Element v : t) check_element(v, n, what);
}

// --- law bookkeeping ----------------------------------------------------------

// Records the first failing instance of each named law.
class LawLog {
 public:
  explicit LawLog(ValidationReport& report) : report_(report) {}

  void check(const char* law, bool holds, std::initializer_list<Element> witness) {
    if (holds) return;
    for (const auto& v : report_.violations)
      if (v.law == law) return;
    report_.violations.push_back({law, std::vector<Element>(witness)});
  }

 private:
  ValidationReport& report_;
};

template <class F>
void for_each_single(std::size_t n, F&& f) {
  for (std::size_t x = 0; x < n; ++x) f(elem(x));
}

template <class F>
void for_each_pair(std::size_t n, F&& f) {
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) f(elem(x), elem(y));
}

template <class F>
void for_each_triple(std::size_t n, F&& f) {
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) f(elem(x), elem(y), elem(z));
}

void check_lattice_laws(LawLog& log, std::size_t n, const BinaryTable& join, const BinaryTable& meet,
                        Element bottom, Element top) {
  for_each_single(n, [&](Element x) {
    log.check("bottom is least", join(bottom, x) == x, {x});
    log.check("top is greatest", join(x, top) == top, {x});
  });
  for_each_pair(n, [&](Element x, Element y) {
    log.check("join commutative", join(x, y) == join(y, x), {x, y});
    log.check("meet commutative", meet(x, y) == meet(y, x), {x, y});
    log.check("join absorption", join(x, meet(x, y)) == x, {x, y});
    log.check("meet absorption", meet(x, join(x, y)) == x, {x, y});
  });
  for_each_triple(n, [&](Element x, Element y, Element z) {
    log.check("join associative", join(join(x, y), z) == join(x, join(y, z)), {x, y, z});
    log.check("meet associative", meet(meet(x, y), z) == meet(x, meet(y, z)), {x, y, z});
  });
}

std::uint64_t fnv1a(std::uint64_t h, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) {
    h ^= (v >> (8 * i)) & 0xFFU;
    h *= 0x100000001b3ULL;
  }
  return h;
}

AlgebraId fingerprint(const ResiduatedTables& t) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  h = fnv1a(h, t.names.size());
  for (const auto& nm : t.names)
    for (char c : nm) h = fnv1a(h, static_cast<unsigned char>(c));
  for (const BinaryTable* tab : {&t.join, &t.meet, &t.prod, &t.impl})
    for (Element e : tab->cells()) h = fnv1a(h, idx(e));
  h = fnv1a(h, idx(t.bottom));
  h = fnv1a(h, idx(t.top));
  return AlgebraId{h};
}

std::optional<Element> find_name(const std::vector<std::string>& names, std::string_view name) {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return elem(i);
  return std::nullopt;
}

}  // namespace

std::string ValidationReport::describe(std::span<const std::string> names) const {
  std::ostringstream os;
  for (const auto& v : violations) {
    os << v.law << ": (";
    for (std::size_t i = 0; i < v.witness.size(); ++i) {
      if (i) os << ", ";
      const auto k = idx(v.witness[i]);
      os << (k < names.size() ? names[k] : std::to_string(k));
    }
    os << ")\n";
  }
  return os.str();
}

// --- validation ---------------------------------------------------------------

ValidationReport validate_residuated_lattice(const ResiduatedTables& t) {
  check_names(t.names);
  const std::size_t n = t.names.size();
  check_table(t.join, n, "join");
  check_table(t.meet, n, "meet");
  check_table(t.prod, n, "prod");
  check_table(t.impl, n, "impl");
  check_element(t.bottom, n, "bottom");
  check_element(t.top, n, "top");

  ValidationReport report;
  LawLog log(report);
  check_lattice_laws(log, n, t.join, t.meet, t.bottom, t.top);

  auto le = [&](Element x, Element y) { return t.meet(x, y) == x; };
  for_each_single(n, [&](Element x) { log.check("prod identity", t.prod(x, t.top) == x, {x}); });
  for_each_pair(n, [&](Element x, Element y) {
    log.check("prod commutative", t.prod(x, y) == t.prod(y, x), {x, y});
    log.check("order coincidence", (t.impl(x, y) == t.top) == le(x, y), {x, y});
  });
  for_each_triple(n, [&](Element x, Element y, Element z) {
    log.check("prod associative", t.prod(t.prod(x, y), z) == t.prod(x, t.prod(y, z)), {x, y, z});
    log.check("adjunction", le(t.prod(x, z), y) == le(x, t.impl(z, y)), {x, y, z});
  });
  return report;
}

ValidationReport validate_wajsberg(const WajsbergTables& t) {
  check_names(t.names);
  const std::size_t n = t.names.size();
  check_table(t.circ, n, "circ");
  check_unary(t.neg, n, "neg");
  check_element(t.one, n, "one");

  ValidationReport report;
  LawLog log(report);
  const auto& c = t.circ;
  const Element one = t.one;
  auto neg = [&](Element x) { return t.neg[idx(x)]; };
  auto le = [&](Element x, Element y) { return c(x, y) == one; };

  for_each_single(n, [&](Element x) {
    log.check("1 o x = x", c(one, x) == x, {x});
    log.check("natural order reflexive", le(x, x), {x});
  });
  for_each_pair(n, [&](Element x, Element y) {
    log.check("(x o y) o y = (y o x) o x", c(c(x, y), y) == c(c(y, x), x), {x, y});
    log.check("(~x o ~y) o (y o x) = 1", c(c(neg(x), neg(y)), c(y, x)) == one, {x, y});
    log.check("natural order antisymmetric", !(le(x, y) && le(y, x) && x != y), {x, y});
  });
  for_each_triple(n, [&](Element x, Element y, Element z) {
    log.check("(x o y) o ((y o z) o (x o z)) = 1", c(c(x, y), c(c(y, z), c(x, z))) == one, {x, y, z});
    log.check("natural order transitive", !(le(x, y) && le(y, z)) || le(x, z), {x, y, z});
  });
  return report;
}

ValidationReport validate_mv(const MvTables& t) {
  check_names(t.names);
  const std::size_t n = t.names.size();
  check_table(t.oplus, n, "oplus");
  check_table(t.odot, n, "odot");
  check_unary(t.prime, n, "prime");
  check_element(t.zero, n, "zero");
  check_element(t.one, n, "one");

  ValidationReport report;
  LawLog log(report);
  const auto& s = t.oplus;
  auto p = [&](Element x) { return t.prime[idx(x)]; };
  const Element theta_prime = p(t.zero);

  log.check("one = theta'", t.one == theta_prime, {});
  for_each_single(n, [&](Element x) {
    log.check("oplus identity theta", s(x, t.zero) == x, {x});
    log.check("x'' = x", p(p(x)) == x, {x});
    log.check("x + theta' = theta'", s(x, theta_prime) == theta_prime, {x});
  });
  for_each_pair(n, [&](Element x, Element y) {
    log.check("oplus commutative", s(x, y) == s(y, x), {x, y});
    log.check("(x' + y)' + y = (y' + x)' + x", s(p(s(p(x), y)), y) == s(p(s(p(y), x)), x), {x, y});
    log.check("odot = (x' + y')'", t.odot(x, y) == p(s(p(x), p(y))), {x, y});
  });
  for_each_triple(n, [&](Element x, Element y, Element z) {
    log.check("oplus associative", s(s(x, y), z) == s(x, s(y, z)), {x, y, z});
  });
  return report;
}

ValidationReport validate_boolean_algebra(const BooleanAlgebraTables& t) {
  check_names(t.names);
  const std::size_t n = t.names.size();
  check_table(t.join, n, "join");
  check_table(t.meet, n, "meet");
  check_unary(t.complement, n, "complement");
  check_element(t.bottom, n, "bottom");
  check_element(t.top, n, "top");

  ValidationReport report;
  LawLog log(report);
  check_lattice_laws(log, n, t.join, t.meet, t.bottom, t.top);
  for_each_single(n, [&](Element x) {
    const Element cx = t.complement[idx(x)];
    log.check("x v dx = 1", t.join(x, cx) == t.top, {x});
    log.check("x ^ dx = 0", t.meet(x, cx) == t.bottom, {x});
  });
  for_each_triple(n, [&](Element x, Element y, Element z) {
    log.check("distributive", t.meet(x, t.join(y, z)) == t.join(t.meet(x, y), t.meet(x, z)), {x, y, z});
  });
  return report;
}

ValidationReport validate_boolean_ring(const BooleanRingView& r) {
  check_names(r.names);
  const std::size_t n = r.names.size();
  check_table(r.add, n, "add");
  check_table(r.mul, n, "mul");
  check_element(r.zero, n, "zero");
  check_element(r.one, n, "one");

  ValidationReport report;
  LawLog log(report);
  for_each_single(n, [&](Element x) {
    log.check("additive identity", r.add(x, r.zero) == x, {x});
    log.check("multiplicative identity", r.mul(x, r.one) == x, {x});
    log.check("idempotent x*x = x", r.mul(x, x) == x, {x});
    bool has_inverse = false;
    for_each_single(n, [&](Element y) { has_inverse = has_inverse || r.add(x, y) == r.zero; });
    log.check("additive inverse", has_inverse, {x});
  });
  for_each_pair(n, [&](Element x, Element y) {
    log.check("add commutative", r.add(x, y) == r.add(y, x), {x, y});
    log.check("mul commutative", r.mul(x, y) == r.mul(y, x), {x, y});
  });
  for_each_triple(n, [&](Element x, Element y, Element z) {
    log.check("add associative", r.add(r.add(x, y), z) == r.add(x, r.add(y, z)), {x, y, z});
    log.check("mul associative", r.mul(r.mul(x, y), z) == r.mul(x, r.mul(y, z)), {x, y, z});
    log.check("distributive", r.mul(x, r.add(y, z)) == r.add(r.mul(x, y), r.mul(x, z)), {x, y, z});
  });
  return report;
}

std::optional<Element> find_left_identity(const BinaryTable& circ) {
  const std::size_t n = circ.size();
  std::optional<Element> found;
  for (std::size_t u = 0; u < n; ++u) {
    bool identity = true;
    for (std::size_t x = 0; x < n && identity; ++x) identity = circ(elem(u), elem(x)) == elem(x);
    if (!identity) continue;
    if (found) return std::nullopt;
    found = elem(u);
  }
  return found;
}

// --- ResiduatedLattice ------------------------------------------------------------

ResiduatedLattice ResiduatedLattice::make(ResiduatedTables tables) {
  const auto report = validate_residuated_lattice(tables);
  if (!report.ok()) throw AxiomError("not a residuated lattice:\n" + report.describe(tables.names));
  return ResiduatedLattice(std::move(tables));
}

ResiduatedLattice::ResiduatedLattice(ResiduatedTables tables) : t_(std::move(tables)) {
  const std::size_t n = t_.names.size();
  id_ = fingerprint(t_);
  neg_.resize(n);
  for (std::size_t x = 0; x < n; ++x) neg_[x] = t_.impl(elem(x), t_.bottom);
  boxplus_ = BinaryTable(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      boxplus_.set(elem(x), elem(y), t_.impl(neg_[x], neg_[idx(neg_[y])]));
  down_.assign(n, Subset(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (leq(elem(y), elem(x))) down_[x].insert(elem(y));
}

std::optional<Element> ResiduatedLattice::find(std::string_view name) const { return find_name(t_.names, name); }

// --- WajsbergAlgebra -------------------------------------------------------------

ResiduatedTables residuated_tables_of(const WajsbergTables& w) {
  const std::size_t n = w.names.size();
  auto le = [&](std::size_t x, std::size_t y) { return w.circ(elem(x), elem(y)) == w.one; };

  // Least upper bound (or greatest lower bound when `upper` is false).
  auto bound = [&](std::size_t x, std::size_t y, bool upper) -> Element {
    auto below = [&](std::size_t a, std::size_t b) { return upper ? le(a, b) : le(b, a); };
    for (std::size_t z = 0; z < n; ++z) {
      if (!below(x, z) || !below(y, z)) continue;
      bool least = true;
      for (std::size_t u = 0; u < n && least; ++u)
        if (below(x, u) && below(y, u)) least = below(z, u);
      if (least) return elem(z);
    }
    throw AxiomError(std::string("natural order has no ") + (upper ? "join" : "meet") + " for (" + w.names[x] +
                     ", " + w.names[y] + ")");
  };

  ResiduatedTables r;
  r.names = w.names;
  r.join = BinaryTable(n);
  r.meet = BinaryTable(n);
  r.prod = BinaryTable(n);
  r.impl = w.circ;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Element ex = elem(x), ey = elem(y);
      r.join.set(ex, ey, bound(x, y, true));
      r.meet.set(ex, ey, bound(x, y, false));
      r.prod.set(ex, ey, w.neg[idx(w.circ(ex, w.neg[y]))]);
    }
  }
  r.bottom = w.neg[idx(w.one)];
  r.top = w.one;
  return r;
}

WajsbergAlgebra WajsbergAlgebra::make(WajsbergTables tables) {
  const auto report = validate_wajsberg(tables);
  if (!report.ok()) throw AxiomError("not a Wajsberg algebra:\n" + report.describe(tables.names));
  auto lattice = ResiduatedLattice::make(residuated_tables_of(tables));
  return WajsbergAlgebra(std::move(tables), std::move(lattice));
}

std::optional<Element> WajsbergAlgebra::find(std::string_view name) const { return find_name(t_.names, name); }

MvAlgebra MvAlgebra::make(MvTables tables) {
  const auto report = validate_mv(tables);
  if (!report.ok()) throw AxiomError("not an MV-algebra:\n" + report.describe(tables.names));
  return MvAlgebra(std::move(tables));
}

// --- conversions -------------------------------------------------------------------

WajsbergAlgebra to_wajsberg(const ResiduatedLattice& l) {
  const std::size_t n = l.size();
  WajsbergTables w;
  w.names = l.names();
  w.circ = l.tables().impl;
  w.neg.resize(n);
  for (std::size_t x = 0; x < n; ++x) w.neg[x] = l.neg(elem(x));
  w.one = l.top();
  return WajsbergAlgebra::make(std::move(w));
}

MvAlgebra wajsberg_to_mv(const WajsbergAlgebra& w) {
  const std::size_t n = w.size();
  MvTables m;
  m.names = w.names();
  m.oplus = BinaryTable(n);
  m.odot = BinaryTable(n);
  m.prime = w.tables().neg;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Element ex = elem(x), ey = elem(y);
      m.oplus.set(ex, ey, w.circ(w.neg(ex), ey));
      m.odot.set(ex, ey, w.neg(w.circ(ex, w.neg(ey))));
    }
  }
  m.zero = w.zero();
  m.one = w.one();
  return MvAlgebra::make(std::move(m));
}

WajsbergAlgebra mv_to_wajsberg(const MvAlgebra& m) {
  const std::size_t n = m.size();
  WajsbergTables w;
  w.names = m.names();
  w.circ = BinaryTable(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) w.circ.set(elem(x), elem(y), m.sum(m.prime(elem(x)), elem(y)));
  w.neg = m.tables().prime;
  w.one = m.prime(m.zero());
  return WajsbergAlgebra::make(std::move(w));
}

BooleanAlgebraTables boolean_algebra_of(const MvAlgebra& m) {
  for (std::size_t x = 0; x < m.size(); ++x) {
    if (m.sum(elem(x), elem(x)) != elem(x)) {
      throw PreconditionError("MV-algebra is not Boolean: " + m.names()[x] + " + " + m.names()[x] +
                              " != " + m.names()[x]);
    }
  }
  BooleanAlgebraTables b;
  b.names = m.names();
  b.join = m.tables().oplus;
  b.meet = m.tables().odot;
  b.complement = m.tables().prime;
  b.bottom = m.zero();
  b.top = m.one();
  const auto report = validate_boolean_algebra(b);
  if (!report.ok()) throw PreconditionError("not a Boolean algebra:\n" + report.describe(b.names));
  return b;
}

BooleanRingView boolean_ring_view(const BooleanAlgebraTables& b) {
  const auto report = validate_boolean_algebra(b);
  if (!report.ok()) throw PreconditionError("not a Boolean algebra:\n" + report.describe(b.names));
  const std::size_t n = b.names.size();
  BooleanRingView r;
  r.names = b.names;
  r.add = BinaryTable(n);
  r.mul = b.meet;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Element ex = elem(x), ey = elem(y);
      r.add.set(ex, ey, b.meet(b.join(ex, ey), b.complement[idx(b.meet(ex, ey))]));
    }
  }
  r.zero = b.bottom;
  r.one = b.top;
  return r;
}

BooleanAlgebraTables boolean_algebra_of(const BooleanRingView& r) {
  const auto report = validate_boolean_ring(r);
  if (!report.ok()) throw PreconditionError("not a Boolean ring:\n" + report.describe(r.names));
  const std::size_t n = r.names.size();
  BooleanAlgebraTables b;
  b.names = r.names;
  b.join = BinaryTable(n);
  b.meet = r.mul;
  b.complement.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    const Element ex = elem(x);
    b.complement[x] = r.add(r.one, ex);
    for (std::size_t y = 0; y < n; ++y) {
      const Element ey = elem(y);
      b.join.set(ex, ey, r.add(r.add(ex, ey), r.mul(ex, ey)));
    }
  }
  b.bottom = r.zero;
  b.top = r.one;
  return b;
}

WajsbergAlgebra product_wajsberg(std::size_t n) {
  if (n == 0) throw PreconditionError("product algebra needs n >= 1");
  if ((std::size_t{1} << n) > kMaxElements) {
    throw PreconditionError("product algebra of " + std::to_string(n) + " factors exceeds " +
                            std::to_string(kMaxElements) + " elements");
  }
  const std::size_t size = std::size_t{1} << n;
  const std::size_t all = size - 1;
  WajsbergTables w;
  w.names.reserve(size);
  for (std::size_t i = 0; i < size; ++i) {
    std::string bits(n, '0');
    for (std::size_t k = 0; k < n; ++k)
      if ((i >> (n - 1 - k)) & 1U) bits[k] = '1';
    w.names.push_back(std::move(bits));
  }
  // Componentwise 0o0=1, 0o1=1, 1o0=0, 1o1=1, i.e. (not a) or b per bit.
  w.circ = BinaryTable(size);
  w.neg.resize(size);
  for (std::size_t i = 0; i < size; ++i) {
    w.neg[i] = elem(~i & all);
    for (std::size_t j = 0; j < size; ++j) w.circ.set(elem(i), elem(j), elem((~i | j) & all));
  }
  w.one = elem(all);
  return WajsbergAlgebra::make(std::move(w));
}

}  // namespace rlcode
