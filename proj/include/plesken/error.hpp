#pragma once

#include <stdexcept>
#include <string>

namespace plesken {

/// Malformed input: bad permutation, zero polynomial, dimension mismatch, ...
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured size cap (group order, field order) was exceeded.
class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Request outside the supported theory, e.g. characteristic 2.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace plesken
