#include "rlcode/codes.hpp"

#include "rlcode/errors.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <sstream>

namespace rlcode {

namespace {

// Minimum weight over the nonzero span of independent rows, by Gray code.
std::size_t min_span_weight(const std::vector<BitVector>& basis) {
  const std::size_t k = basis.size();
  BitVector acc(basis.front().size());
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::uint64_t step = 1; step < (std::uint64_t{1} << k); ++step) {
    acc ^= basis[static_cast<std::size_t>(std::countr_zero(step))];
    best = std::min(best, acc.weight());
  }
  return best;
}

std::string join_indices(const std::vector<std::size_t>& v) {
  std::string out;
  for (auto i : v) out += (out.empty() ? "" : ", ") + std::to_string(i + 1);
  return out;
}

}  // namespace

Codeword codeword(const Subset& b) {
  Codeword c(b.universe());
  for (Element e : b.members()) c.set(idx(e));
  return c;
}

Codeword codeword(const ResiduatedLattice& l, std::span<const Element> members) {
  Subset s(l.size());
  for (Element e : members) {
    if (idx(e) >= l.size()) throw PreconditionError("element outside the universe");
    s.insert(e);
  }
  return codeword(s);
}

Subset sym_diff(const Subset& a, const Subset& b) {
  if (a.universe() != b.universe()) throw PreconditionError("subsets of different universes");
  return a ^ b;
}

IdentityReport char_identity_check(std::span<const Subset> family) {
  IdentityReport report;
  if (family.empty()) return report;
  const std::size_t n = family.front().universe();
  const std::size_t m = family.size();
  if (m > 20) throw PreconditionError("identity check supports at most 20 sets");
  for (const auto& s : family)
    if (s.universe() != n) throw PreconditionError("subsets of different universes");

  auto fail = [&](std::string what) {
    if (report.ok) {
      report.ok = false;
      report.failure = std::move(what);
    }
  };

  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const Subset& a = family[i];
      const Subset& b = family[j];
      const Subset d = sym_diff(a, b);
      if (d.empty() != (a == b)) fail("indicator of A^B vanishes iff A = B, sets " + std::to_string(i + 1) + "," + std::to_string(j + 1));
      for (std::size_t x = 0; x < n; ++x) {
        const std::int64_t ma = a.contains(elem(x)), mb = b.contains(elem(x));
        const std::int64_t lhs = d.contains(elem(x));
        if (lhs != ma + mb - 2 * ma * mb) {
          fail("pairwise identity at element " + std::to_string(x) + ", sets " + std::to_string(i + 1) + "," +
               std::to_string(j + 1));
        }
      }
    }
  }

  Subset total(n);
  for (const auto& s : family) total = total ^ s;
  for (std::size_t x = 0; x < n; ++x) {
    std::int64_t rhs = 0;
    for (std::uint64_t t = 1; t < (std::uint64_t{1} << m); ++t) {
      std::int64_t product = 1;
      for (std::size_t i = 0; i < m && product != 0; ++i)
        if ((t >> i) & 1U) product *= family[i].contains(elem(x)) ? 1 : 0;
      const int size = std::popcount(t);
      const std::int64_t coeff = (size % 2 == 1 ? 1 : -1) * (std::int64_t{1} << (size - 1));
      rhs += coeff * product;
    }
    if (rhs != static_cast<std::int64_t>(total.contains(elem(x)))) {
      fail("n-ary identity at element " + std::to_string(x));
    }
  }
  return report;
}

bool xor_law_check(const IdealSet& i, const IdealSet& j) {
  if (i.algebra() != j.algebra()) throw PreconditionError("ideals of different algebras");
  return codeword(sym_diff(i.members(), j.members())) == (codeword(i.members()) ^ codeword(j.members()));
}

std::string format_params(const CodeParams& p) {
  std::ostringstream os;
  os << "[" << p.n << "," << p.k << "," << p.d << "]_2 rate=" << p.rate.numerator() << "/" << p.rate.denominator();
  return os.str();
}

CodeParams code_params(const BitMatrix& m) {
  if (m.rows() == 0 || m.is_zero()) throw PreconditionError("code parameters need a nonzero matrix");
  const BitMatrix basis = gf2_rref(m);
  if (basis.rows() > kMaxSpanDimension) {
    throw PreconditionError("dimension " + std::to_string(basis.rows()) + " exceeds the enumeration cap " +
                            std::to_string(kMaxSpanDimension));
  }
  CodeParams p;
  p.n = m.cols();
  p.k = basis.rows();
  p.d = min_span_weight(basis.row_vectors());
  p.rate = boost::rational<std::int64_t>(static_cast<std::int64_t>(p.k), static_cast<std::int64_t>(p.n));
  return p;
}

BinaryCode::BinaryCode(BitMatrix generator) : generator_(std::move(generator)) {
  if (auto dep = gf2_dependency(generator_)) {
    throw PreconditionError("generator rows are dependent: rows " + join_indices(*dep) + " sum to zero");
  }
  params_ = code_params(generator_);
}

std::vector<IdealSet> generator_order(std::vector<IdealSet> ideals) {
  std::sort(ideals.begin(), ideals.end(), [](const IdealSet& a, const IdealSet& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.members().mask() < b.members().mask();
  });
  return ideals;
}

BinaryCode generator_matrix(std::span<const IdealSet> ideals) {
  if (ideals.empty()) throw PreconditionError("generator matrix needs at least one ideal");
  std::vector<BitVector> rows;
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    if (ideals[i].algebra() != ideals.front().algebra()) throw PreconditionError("ideals of different algebras");
    for (std::size_t j = 0; j < i; ++j)
      if (ideals[j] == ideals[i]) {
        throw PreconditionError("duplicate ideal at rows " + std::to_string(j + 1) + " and " + std::to_string(i + 1));
      }
    rows.push_back(codeword(ideals[i].members()));
  }
  BitMatrix m(std::move(rows));
  if (auto dep = gf2_dependency(m)) {
    throw InvariantError("ideal codewords are linearly dependent: rows " + join_indices(*dep) + " sum to zero");
  }
  return BinaryCode(std::move(m));
}

bool is_hadamard_type(const CodeParams& p) {
  if (p.k < 2 || p.k >= 63) return false;
  return p.n == (std::size_t{1} << p.k) && p.d == (std::size_t{1} << (p.k - 1));
}

BitMatrix boolean_form_matrix(std::size_t n) {
  if (n < 2 || n > 24) throw PreconditionError("Boolean form needs 2 <= n <= 24");
  const std::size_t cols = std::size_t{1} << n;
  BitMatrix m(n, cols);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t block = std::size_t{1} << (n - 1 - i);
    for (std::size_t c = 0; c < cols; ++c)
      if (((c / block) % 2) == 0) m.row(i).set(c);
  }
  return m;
}

bool row_equivalent(const BitMatrix& a, const BitMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw PreconditionError("row equivalence needs equal dimensions");
  return gf2_rref(a) == gf2_rref(b);
}

bool columns_all_bitvectors(const BitMatrix& m) {
  const std::size_t t = m.rows();
  if (t == 0 || t >= 32 || m.cols() != (std::size_t{1} << t)) return false;
  std::vector<bool> seen(m.cols(), false);
  for (std::size_t c = 0; c < m.cols(); ++c) {
    std::size_t value = 0;
    for (std::size_t r = 0; r < t; ++r) value = (value << 1) | (m.get(r, c) ? 1U : 0U);
    if (seen[value]) return false;
    seen[value] = true;
  }
  return true;
}

HadamardConstruction hadamard_from_boolean(std::size_t n) {
  if (n < 2) throw PreconditionError("Hadamard construction needs n >= 2");
  auto algebra = product_wajsberg(n);
  const std::size_t half = std::size_t{1} << (n - 1);
  std::vector<IdealSet> ideals;
  for (auto& i : enumerate_ideals(algebra.lattice()))
    if (i.size() == half) ideals.push_back(std::move(i));
  if (ideals.size() != n) {
    throw InvariantError("expected " + std::to_string(n) + " ideals of cardinality " + std::to_string(half) +
                         ", found " + std::to_string(ideals.size()));
  }
  ideals = generator_order(std::move(ideals));
  BinaryCode code = generator_matrix(ideals);
  const CodeParams expected{std::size_t{1} << n, n, half,
                            boost::rational<std::int64_t>(static_cast<std::int64_t>(n), std::int64_t{1} << n)};
  if (code.params() != expected) {
    throw InvariantError("Hadamard construction produced " + format_params(code.params()) + ", expected " +
                         format_params(expected));
  }
  return {std::move(algebra), std::move(ideals), std::move(code)};
}

BooleanConstruction boolean_from_matrix(const BitMatrix& m) {
  const std::size_t n = m.rows();
  if (n < 2) throw PreconditionError("Boolean form needs at least 2 rows");
  if (n > 6 || m.cols() != (std::size_t{1} << n)) {
    throw PreconditionError("matrix with " + std::to_string(n) + " rows must have " +
                            (n <= 6 ? std::to_string(std::size_t{1} << n) : std::string("at most 64")) + " columns");
  }
  const BitMatrix pattern = boolean_form_matrix(n);
  for (std::size_t i = 0; i < n; ++i)
    if (m.row(i) != pattern.row(i)) throw PreconditionError("row " + std::to_string(i + 1) + " is not in Boolean form");

  auto algebra = product_wajsberg(n);
  const auto& lattice = algebra.lattice();
  const std::size_t all = (std::size_t{1} << n) - 1;
  std::vector<IdealSet> ideals;
  for (std::size_t i = 0; i < n; ++i) {
    // Component i (first component most significant) is zero, the rest one.
    const Element maximal = elem(all & ~(std::size_t{1} << (n - 1 - i)));
    ideals.push_back(ideal_closure(lattice, Subset::singleton(lattice.size(), maximal)));
    if (codeword(ideals.back().members()) != m.row(i)) {
      throw InvariantError("ideal generated by " + lattice.name(maximal) + " does not reproduce row " +
                           std::to_string(i + 1));
    }
  }
  return {std::move(algebra), std::move(ideals)};
}

EvenIdealCode even_ideal_code(const ResiduatedLattice& l) {
  auto ideals = enumerate_ideals(l, IdealScope::proper);
  if (ideals.empty() || ideals.size() % 2 != 0) {
    throw PreconditionError("algebra has " + std::to_string(ideals.size()) +
                            " proper ideals; an even, nonzero number is required");
  }
  ideals = generator_order(std::move(ideals));
  BinaryCode code = generator_matrix(ideals);
  const bool at_least_3 = code.d() >= 3;
  return {std::move(ideals), std::move(code), at_least_3};
}

}  // namespace rlcode
