#pragma once

#include <stdexcept>
#include <string>

namespace qbg {

/// Malformed textual input (permutations, matrices, shift sequences).
class ParseError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A request exceeds the sizes this library is willing to materialize.
class ResourceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Randomized construction gave up after its retry budget.
class SamplingError : public std::runtime_error {
public:
  SamplingError(const std::string& what, int column)
      : std::runtime_error(what), column_(column) {}
  int column() const { return column_; }

private:
  int column_;
};

/// A statement that should be a theorem failed; this is a bug.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace qbg
