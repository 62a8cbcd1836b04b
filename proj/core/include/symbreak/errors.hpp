#pragma once

#include <stdexcept>
#include <string>

namespace symbreak {

class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input: bad vertex ids, self-loops, parse failures, bad parameters.
class InputError : public Error {
public:
  explicit InputError(const std::string& what) : Error(what) {}
};

// A configured resource cap (vertex count, group size, time budget) was hit.
class CapExceeded : public Error {
public:
  explicit CapExceeded(const std::string& what) : Error(what) {}
};

// A construction or theorem hypothesis is not met for the given input.
class Inapplicable : public Error {
public:
  explicit Inapplicable(const std::string& what) : Error(what) {}
};

// A proved bound disagrees with an exact value. Treated as fatal.
class InvariantViolation : public Error {
public:
  explicit InvariantViolation(const std::string& what) : Error(what) {}
};

}  // namespace symbreak
