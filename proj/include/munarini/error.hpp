#pragma once

#include <stdexcept>
#include <string>

namespace munarini {

// Malformed input: bad symbols, bad labels, unparsable text.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Parameters outside the range where an object is defined (e.g. Pi_{n,1}).
class UnsupportedParameter : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An internal identity that must hold did not. Always a bug or a
// counterexample worth reporting.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A vertex triple whose coordinatewise majority is not a vertex.
class MedianClosureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace munarini
