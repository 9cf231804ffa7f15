#include "support.hpp"

#include "rlcode/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#ifndef RLCODE_FIXTURE_DIR
#error "RLCODE_FIXTURE_DIR must be defined"
#endif

namespace rlcode::testing {

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string t; is >> t;) out.push_back(t);
  return out;
}

Element index_of(const std::vector<std::string>& names, const std::string& n) {
  const auto it = std::find(names.begin(), names.end(), n);
  if (it == names.end()) throw std::logic_error("no element " + n);
  return elem(static_cast<std::size_t>(it - names.begin()));
}

BinaryTable table_from_rows(const std::vector<std::string>& names, const std::vector<std::string>& rows) {
  BinaryTable t(names.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto cells = split_ws(rows[r]);
    for (std::size_t c = 0; c < cells.size(); ++c) t.set(elem(r), elem(c), index_of(names, cells[c]));
  }
  return t;
}

Fixture fixture_from(const std::string& name, const std::string& file) {
  auto loaded = build_algebra(load_fixture(file));
  return Fixture{name, std::move(loaded.wajsberg), std::move(loaded.lattice)};
}

bool oracle_leq(const ResiduatedTables& t, Element x, Element y) { return t.impl(x, y) == t.top; }

bool oracle_is_fuzzy_ideal(const ResiduatedTables& t, const std::vector<Grade>& g) {
  const std::size_t n = t.names.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (oracle_leq(t, elem(x), elem(y)) && g[x] < g[y]) return false;
      const Element u = t.impl(t.impl(elem(x), t.bottom), elem(y));
      if (g[idx(u)] < std::min(g[x], g[y])) return false;
    }
  return true;
}

}  // namespace

WajsbergTables wajsberg_from_rows(const std::vector<std::string>& names, const std::vector<std::string>& rows,
                                  const std::string& neg) {
  WajsbergTables w;
  w.names = names;
  w.circ = table_from_rows(names, rows);
  for (const auto& e : split_ws(neg)) w.neg.push_back(index_of(names, e));
  w.one = index_of(names, "1");
  return w;
}

WajsbergTables order4_table() {
  return wajsberg_from_rows({"0", "a", "b", "1"},
                            {
                                "1 1 1 1",
                                "b 1 b 1",
                                "a a 1 1",
                                "0 a b 1",
                            },
                            "1 b a 0");
}

WajsbergTables order8_table() {
  return wajsberg_from_rows({"0", "a", "b", "c", "d", "e", "f", "1"},
                            {
                                "1 1 1 1 1 1 1 1",
                                "f 1 f 1 f 1 f 1",
                                "e e 1 1 e e 1 1",
                                "d e f 1 d e f 1",
                                "c c c c 1 1 1 1",
                                "b c b c f 1 f 1",
                                "a a c c e e 1 1",
                                "0 a b c d e f 1",
                            },
                            "1 f e d c b a 0");
}

WajsbergTables printed_order9() {
  return wajsberg_from_rows({"0", "a", "b", "c", "d", "e", "f", "g", "1"},
                            {
                                "1 1 1 1 1 1 1 1 1",
                                "g 1 1 g 1 1 g 1 1",
                                "f g 1 f g 1 f g 1",
                                "e e e 1 1 1 1 1 1",
                                "d e e g 1 1 g 1 1",
                                "c d e f g 1 f g 1",
                                "b a b e e e 1 1 1",
                                "a b b d e e g 1 1",
                                "0 a b c d e f g 1",
                            },
                            "1 g f e d c b a 0");
}

WajsbergTables order9_repaired() {
  auto w = printed_order9();
  w.circ.set(index_of(w.names, "f"), index_of(w.names, "a"), index_of(w.names, "b"));
  return w;
}

ResiduatedTables godel3() {
  ResiduatedTables r;
  r.names = {"0", "h", "1"};
  r.join = table_from_rows(r.names, {"0 h 1", "h h 1", "1 1 1"});
  r.meet = table_from_rows(r.names, {"0 0 0", "0 h h", "0 h 1"});
  r.prod = r.meet;
  r.impl = table_from_rows(r.names, {"1 1 1", "0 1 1", "0 h 1"});
  r.bottom = elem(0);
  r.top = elem(2);
  return r;
}

std::string fixture_path(const std::string& file) { return std::string(RLCODE_FIXTURE_DIR) + "/" + file; }

AlgebraDocument load_fixture(const std::string& file) { return parse_algebra(read_text_file(fixture_path(file))); }

std::vector<Fixture> wajsberg_fixtures() {
  std::vector<Fixture> out;
  out.push_back(fixture_from("order4", "order4.wal"));
  out.push_back(fixture_from("order8", "order8.wal"));
  out.push_back(fixture_from("order9", "order9.wal"));
  return out;
}

std::vector<Fixture> all_fixtures() {
  auto out = wajsberg_fixtures();
  out.push_back(fixture_from("godel3", "godel3.rl"));
  return out;
}

Subset subset_of(const ResiduatedLattice& l, const std::vector<std::string>& names) {
  Subset s(l.size());
  for (const auto& n : names) s.insert(index_of(l.names(), n));
  return s;
}

BitMatrix matrix_of(const std::vector<std::string>& rows) {
  std::vector<BitVector> out;
  for (const auto& r : rows) out.push_back(BitVector::from_string(r));
  return BitMatrix(std::move(out));
}

FuzzySubset fuzzy_of(const ResiduatedLattice& l, const std::vector<Grade>& grades) {
  return FuzzySubset(l.id(), grades);
}

Grade random_grade(Rng& rng) {
  const std::int64_t den = std::uniform_int_distribution<std::int64_t>(1, 12)(rng);
  const std::int64_t num = std::uniform_int_distribution<std::int64_t>(0, den)(rng);
  return Grade(num, den);
}

FuzzySubset random_fuzzy(const ResiduatedLattice& l, Rng& rng, std::size_t max_image) {
  const std::size_t size = std::uniform_int_distribution<std::size_t>(1, max_image)(rng);
  std::vector<Grade> image;
  for (std::size_t i = 0; i < size; ++i) image.push_back(random_grade(rng));
  std::uniform_int_distribution<std::size_t> pick(0, image.size() - 1);
  std::vector<Grade> g(l.size());
  for (auto& x : g) x = image[pick(rng)];
  return FuzzySubset(l.id(), std::move(g));
}

FuzzySubset random_fuzzy_ideal(const ResiduatedLattice& l, Rng& rng, std::size_t max_image) {
  return fuzzy_closure(l, random_fuzzy(l, rng, max_image));
}

FuzzySubset random_mixed_fuzzy(const ResiduatedLattice& l, Rng& rng) {
  switch (rng() % 3) {
    case 0:
      return random_fuzzy(l, rng);
    case 1:
      return random_fuzzy_ideal(l, rng);
    default: {
      auto g = random_fuzzy_ideal(l, rng).grades();
      g[rng() % g.size()] = random_grade(rng);
      return FuzzySubset(l.id(), std::move(g));
    }
  }
}

Element oracle_boxplus(const ResiduatedTables& t, Element x, Element y) {
  auto star = [&](Element e) { return t.impl(e, t.bottom); };
  return t.impl(star(x), star(star(y)));
}

std::vector<Subset> oracle_ideals(const ResiduatedLattice& l) {
  const auto& t = l.tables();
  const std::size_t n = l.size();
  if (n > 16) throw std::logic_error("subset scan limited to 16 elements");
  std::vector<Subset> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    const Subset s = Subset::from_mask(n, mask);
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (!s.contains(elem(i))) continue;
      for (std::size_t x = 0; x < n && ok; ++x)
        if (oracle_leq(t, elem(x), elem(i)) && !s.contains(elem(x))) ok = false;
      for (std::size_t j = 0; j < n && ok; ++j)
        if (s.contains(elem(j)) && !s.contains(oracle_boxplus(t, elem(i), elem(j)))) ok = false;
    }
    if (ok) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

FuzzySubset oracle_closure(const ResiduatedLattice& l, const FuzzySubset& mu) {
  const auto& t = l.tables();
  const std::size_t n = l.size();
  const auto image = mu.image();
  auto rank = [&](const Grade& g) {
    return static_cast<std::size_t>(std::lower_bound(image.begin(), image.end(), g) - image.begin());
  };
  // best[s] = largest min over decompositions whose sum is s.
  std::vector<std::optional<Grade>> best(n);
  std::vector<char> seen(n * n * image.size() * (n + 1), 0);

  // Multisets as nondecreasing index sequences x_start <= ...; state after
  // choosing `depth` terms with running sum s and running minimum m.
  auto visit = [&](auto&& self, std::size_t start, Element s, const Grade& m, std::size_t depth) -> void {
    auto& b = best[idx(s)];
    if (!b || *b < m) b = m;
    if (depth == n) return;
    for (std::size_t x = start; x < n; ++x) {
      const Element next = oracle_boxplus(t, s, elem(x));
      const Grade nm = std::min(m, mu[elem(x)]);
      const std::size_t key = ((x * n + idx(next)) * image.size() + rank(nm)) * (n + 1) + depth + 1;
      if (seen[key]) continue;
      seen[key] = 1;
      self(self, x, next, nm, depth + 1);
    }
  };
  for (std::size_t x = 0; x < n; ++x) visit(visit, x, elem(x), mu[elem(x)], 1);

  std::vector<Grade> out(n, Grade(0));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t s = 0; s < n; ++s)
      if (best[s] && oracle_leq(t, elem(x), elem(s))) out[x] = std::max(out[x], *best[s]);
  return FuzzySubset(l.id(), std::move(out));
}

std::vector<FuzzySubset> oracle_fuzzy_ideals(const ResiduatedLattice& l, const std::vector<Grade>& values) {
  const std::size_t n = l.size();
  std::vector<std::size_t> digits(n, 0);
  std::vector<FuzzySubset> out;
  for (;;) {
    std::vector<Grade> g(n);
    for (std::size_t i = 0; i < n; ++i) g[i] = values[digits[i]];
    if (oracle_is_fuzzy_ideal(l.tables(), g)) out.emplace_back(l.id(), std::move(g));
    std::size_t pos = 0;
    while (pos < n && ++digits[pos] == values.size()) digits[pos++] = 0;
    if (pos == n) break;
  }
  return out;
}

std::size_t oracle_min_distance(const BitMatrix& generator) {
  const std::size_t k = generator.rows();
  std::vector<BitVector> words;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << k); ++m) {
    BitVector w(generator.cols());
    for (std::size_t i = 0; i < k; ++i)
      if ((m >> i) & 1U) w ^= generator.row(i);
    words.push_back(std::move(w));
  }
  std::size_t best = generator.cols() + 1;
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j)
      if (words[i] != words[j]) best = std::min(best, hamming_distance(words[i], words[j]));
  return best;
}

bool oracle_isomorphic(const WajsbergTables& a, const WajsbergTables& b) {
  const std::size_t n = a.names.size();
  if (b.names.size() != n) return false;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    auto f = [&](Element e) { return elem(p[idx(e)]); };
    bool ok = f(a.one) == b.one;
    for (std::size_t x = 0; x < n && ok; ++x) {
      ok = f(a.neg[x]) == b.neg[p[x]];
      for (std::size_t y = 0; y < n && ok; ++y) ok = f(a.circ(elem(x), elem(y))) == b.circ(elem(p[x]), elem(p[y]));
    }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

}  // namespace rlcode::testing
