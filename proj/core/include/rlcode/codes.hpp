#pragma once

#include "rlcode/algebra.hpp"
#include "rlcode/bits.hpp"
#include "rlcode/ideals.hpp"

#include <boost/rational.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace rlcode {

/// Indicator vector of a subset; coordinate i is the i-th declared element.
using Codeword = BitVector;

/// Largest dimension for which minimum distance is computed by enumerating
/// the whole span.
inline constexpr std::size_t kMaxSpanDimension = 24;

Codeword codeword(const Subset& b);

/// Codeword of an explicit element list. Throws PreconditionError for an
/// element outside the universe of `l`.
Codeword codeword(const ResiduatedLattice& l, std::span<const Element> members);

Subset sym_diff(const Subset& a, const Subset& b);

struct IdentityReport {
  bool ok = true;
  /// First failing identity and where, empty when ok.
  std::string failure;
};

/// Characteristic-function identities for a family of subsets of one
/// universe, evaluated pointwise with integer arithmetic:
///   mu_{A^B} = 0 iff A = B                       (every pair)
///   mu_{A^B} = mu_A + mu_B - 2 mu_A mu_B          (every pair)
///   mu_{A1^...^Am} = sum over nonempty T of (-2)^{|T|-1} prod_{i in T} mu_Ai
IdentityReport char_identity_check(std::span<const Subset> family);

/// codeword(I ^ J) == codeword(I) xor codeword(J).
bool xor_law_check(const IdealSet& i, const IdealSet& j);

struct CodeParams {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t d = 0;
  boost::rational<std::int64_t> rate;

  bool operator==(const CodeParams&) const = default;
};

/// `[n,k,d]_2 rate=p/q`
std::string format_params(const CodeParams& p);

/// n = |span|: rank by elimination, d by enumerating the 2^k - 1 nonzero
/// codewords of the row space. Throws PreconditionError for a zero matrix
/// or k above kMaxSpanDimension.
CodeParams code_params(const BitMatrix& m);

/// Linear code given by a generator matrix with independent rows.
class BinaryCode {
 public:
  /// Throws PreconditionError when the rows are dependent.
  explicit BinaryCode(BitMatrix generator);

  const BitMatrix& generator() const { return generator_; }
  const CodeParams& params() const { return params_; }
  std::size_t n() const { return params_.n; }
  std::size_t k() const { return params_.k; }
  std::size_t d() const { return params_.d; }

 private:
  BitMatrix generator_;
  CodeParams params_;
};

/// Generator rows in the default order: descending cardinality, then
/// ascending mask.
std::vector<IdealSet> generator_order(std::vector<IdealSet> ideals);

/// Matrix whose rows are the codewords of `ideals`, in the given order.
/// Throws PreconditionError for an empty list, mixed algebras or duplicate
/// ideals, and InvariantError naming a zero-sum set of rows if the codewords
/// are dependent.
BinaryCode generator_matrix(std::span<const IdealSet> ideals);

/// n = 2^t, k = t, d = 2^(t-1) for some t >= 2.
bool is_hadamard_type(const CodeParams& p);

/// n x 2^n matrix; row i (from 1) repeats 2^(n-i) ones then 2^(n-i) zeros.
/// Requires 2 <= n <= 24.
BitMatrix boolean_form_matrix(std::size_t n);

/// Same row space. Throws PreconditionError on differing dimensions.
bool row_equivalent(const BitMatrix& a, const BitMatrix& b);

/// t x 2^t and every t-bit column occurs exactly once.
bool columns_all_bitvectors(const BitMatrix& m);

struct HadamardConstruction {
  WajsbergAlgebra algebra;
  std::vector<IdealSet> ideals;
  BinaryCode code;
};

/// Product algebra of order 2^n, its n ideals of cardinality 2^(n-1), and the
/// code they generate. Requires 2 <= n <= 6. Throws InvariantError if the
/// ideal count or the code parameters differ from (2^n, n, 2^(n-1)).
HadamardConstruction hadamard_from_boolean(std::size_t n);

struct BooleanConstruction {
  WajsbergAlgebra algebra;
  /// ideals[i] is generated by the maximal element with a zero in component i.
  std::vector<IdealSet> ideals;
};

/// Inverse construction from a matrix in Boolean form. Throws
/// PreconditionError naming the first row that breaks the pattern.
BooleanConstruction boolean_from_matrix(const BitMatrix& m);

struct EvenIdealCode {
  std::vector<IdealSet> ideals;
  BinaryCode code;
  bool distance_at_least_3 = false;
};

/// Code of all proper ideals, in generator order. Throws PreconditionError
/// when the number of proper ideals is odd or zero.
EvenIdealCode even_ideal_code(const ResiduatedLattice& l);

}  // namespace rlcode
