#pragma once

#include <stdexcept>
#include <string>

namespace graverlift {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Incompatible vector/matrix dimensions.
class DimensionError : public Error {
public:
  explicit DimensionError(const std::string& what) : Error(what) {}
};

/// Block-matrix specification violates its invariants.
class InvalidSpec : public Error {
public:
  explicit InvalidSpec(const std::string& what) : Error(what) {}
};

/// A configured resource cap was hit. Never a silent wrong answer:
/// the computation aborts instead of truncating.
class BudgetExceeded : public Error {
public:
  explicit BudgetExceeded(const std::string& what) : Error(what) {}
};

/// A relation cannot be brought into the shape the lifting step needs.
class NotCanonicalizable : public Error {
public:
  explicit NotCanonicalizable(const std::string& what) : Error(what) {}
};

/// Lift requested although the certificate has a failed condition.
class ConditionsFailed : public Error {
public:
  explicit ConditionsFailed(const std::string& what) : Error(what) {}
};

/// No circuit of support size >= 3 exists, so no cyclic base relation.
class NoCircuitOfSupport3 : public Error {
public:
  explicit NoCircuitOfSupport3(const std::string& what) : Error(what) {}
};

/// Malformed input file or document.
class ParseError : public Error {
public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

/// An internal consistency check failed; indicates a bug or formula misuse.
class InternalError : public Error {
public:
  explicit InternalError(const std::string& what) : Error(what) {}
};

}  // namespace graverlift
