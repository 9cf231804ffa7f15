#pragma once

#include "rlcode/algebra.hpp"
#include "rlcode/bits.hpp"
#include "rlcode/fuzzy.hpp"
#include "rlcode/io.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace rlcode::testing {

// Reference tables, one string per row, entries separated by
// single spaces. These are kept in code so the shipped fixture files can be
// checked against them.
WajsbergTables order4_table();
WajsbergTables order8_table();
WajsbergTables printed_order9();
/// The order-9 table with its one inconsistent cell (f o a) repaired.
WajsbergTables order9_repaired();
/// Three-element Goedel chain, a residuated lattice that is not MV.
ResiduatedTables godel3();

WajsbergTables wajsberg_from_rows(const std::vector<std::string>& names, const std::vector<std::string>& rows,
                                  const std::string& neg);

std::string fixture_path(const std::string& file);
AlgebraDocument load_fixture(const std::string& file);

struct Fixture {
  std::string name;
  std::optional<WajsbergAlgebra> wajsberg;
  ResiduatedLattice lattice;
};

/// order4, order8, order9 (Wajsberg) and godel3.
std::vector<Fixture> all_fixtures();
/// order4, order8, order9 only.
std::vector<Fixture> wajsberg_fixtures();

Subset subset_of(const ResiduatedLattice& l, const std::vector<std::string>& names);
BitMatrix matrix_of(const std::vector<std::string>& rows);
FuzzySubset fuzzy_of(const ResiduatedLattice& l, const std::vector<Grade>& grades);

using Rng = std::mt19937_64;

/// Grade with denominator at most 12.
Grade random_grade(Rng& rng);
/// Grades drawn from a random image of at most `max_image` values.
FuzzySubset random_fuzzy(const ResiduatedLattice& l, Rng& rng, std::size_t max_image = 4);
/// Mix of arbitrary maps, fuzzy ideals and one-point perturbations of fuzzy
/// ideals, so both verdicts are well represented.
FuzzySubset random_mixed_fuzzy(const ResiduatedLattice& l, Rng& rng);
/// Random fuzzy ideal: closure of a random map.
FuzzySubset random_fuzzy_ideal(const ResiduatedLattice& l, Rng& rng, std::size_t max_image = 4);

// ---- oracles, written independently of the library's algorithms ----

/// x (+) y recomputed from the implication table.
Element oracle_boxplus(const ResiduatedTables& t, Element x, Element y);

/// Every ideal by scanning all 2^n subsets against the definition.
std::vector<Subset> oracle_ideals(const ResiduatedLattice& l);

/// sup{ min(mu(x1),...,mu(xk)) : x <= x1 (+) ... (+) xk, 1 <= k <= |L| },
/// over multisets of elements.
FuzzySubset oracle_closure(const ResiduatedLattice& l, const FuzzySubset& mu);

/// Every fuzzy ideal with grades in `values`, by brute force over all maps.
std::vector<FuzzySubset> oracle_fuzzy_ideals(const ResiduatedLattice& l, const std::vector<Grade>& values);

/// Minimum distance between distinct codewords of the row space.
std::size_t oracle_min_distance(const BitMatrix& generator);

/// Searches all bijections for an isomorphism of Wajsberg tables.
bool oracle_isomorphic(const WajsbergTables& a, const WajsbergTables& b);

}  // namespace rlcode::testing
