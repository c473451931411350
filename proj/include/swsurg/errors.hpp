#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace swsurg {

// Malformed arguments: length mismatches, zero vectors where a nonzero one is
// required, odd values where parity is forced.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The inputs are well formed but a theorem hypothesis (genus, extremality,
// simple type, matching pairings) does not hold.
class HypothesisNotMet : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Cases outside what the engine computes (negative self-intersection,
// non-primitive surfaces, higher homology of symmetric products).
class Unsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two independent computations of the same quantity disagreed.
class InternalConsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<std::string> failures);

  const std::vector<std::string>& failures() const noexcept { return failures_; }

 private:
  std::vector<std::string> failures_;
};

// `location` is "byte N" for syntax errors or a JSON pointer for schema errors.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::string location);

  const std::string& location() const noexcept { return location_; }

 private:
  std::string location_;
};

}  // namespace swsurg
