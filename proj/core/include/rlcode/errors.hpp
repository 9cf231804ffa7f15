#pragma once

#include <stdexcept>
#include <string>

namespace rlcode {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input (algebra, fuzzy-subset or matrix files).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Operation tables that are not total or not closed over the universe.
/// Kept apart from axiom failures, which are reported, not thrown.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Tables are well formed but violate the axioms of the requested kind.
class AxiomError : public Error {
 public:
  using Error::Error;
};

/// A caller-side precondition was violated (empty set, alpha <= beta, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed its configured search budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A mathematical invariant that must hold did not. Surfacing one of these
/// means either a bug or a counterexample to a stated result.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace rlcode
