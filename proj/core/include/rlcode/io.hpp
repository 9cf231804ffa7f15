#pragma once

#include "rlcode/algebra.hpp"
#include "rlcode/bits.hpp"
#include "rlcode/fuzzy.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace rlcode {

// Algebra files
//
//   # comment
//   elements: 0 a b 1
//   kind: wajsberg
//   circ:
//   1 1 1 1
//   b 1 b 1
//   a a 1 1
//   0 a b 1
//   neg: 1 b a 0
//
// For `kind: residuated` the blocks are join:, meet:, prod:, impl: plus the
// lines `bottom: e` and `top: e`. A Wajsberg file may name its unit with
// `one: e`; otherwise the unit is taken to be x o x for the first element.
// `elements:` must come first. Unknown names, ragged rows, repeated or missing
// sections are ParseErrors.

using AlgebraDocument = std::variant<WajsbergTables, ResiduatedTables>;

AlgebraDocument parse_algebra(std::string_view text);
std::string serialize_algebra(const AlgebraDocument& doc);

/// A validated algebra from a document. `wajsberg` is set for Wajsberg
/// documents; `lattice` is always the residuated form.
struct LoadedAlgebra {
  std::optional<WajsbergAlgebra> wajsberg;
  ResiduatedLattice lattice;
};

/// Throws AxiomError when the declared kind's axioms fail.
LoadedAlgebra build_algebra(const AlgebraDocument& doc);

// Fuzzy-subset files: one `element = grade` line per element, grades as
// integers or p/q in [0,1]. Every element must appear exactly once.

FuzzySubset parse_fuzzy(const ResiduatedLattice& l, std::string_view text);
std::string serialize_fuzzy(const ResiduatedLattice& l, const FuzzySubset& mu);

// Matrix files: one row per line of '0'/'1' characters; lines starting with
// '#' (such as `# rows=k cols=n`) and blank lines are ignored.

BitMatrix parse_matrix(std::string_view text);
std::string serialize_matrix(const BitMatrix& m, bool header = false);

/// Whole file as a string; throws ParseError if it cannot be read.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace rlcode
