#pragma once

#include <stdexcept>
#include <string>

namespace gwloc {

// Bad user input: malformed files, schema violations, fans that fail validation.
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Arithmetic misuse: division by the zero function, evaluation at a pole.
class ArithmeticError : public std::runtime_error {
public:
  explicit ArithmeticError(const std::string& what) : std::runtime_error(what) {}
};

// A structural invariant the engine relies on was breached; indicates a bug
// or inconsistent input that slipped past validation.
class InternalError : public std::logic_error {
public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

inline void require(bool cond, const std::string& message) {
  if (!cond) throw InternalError(message);
}

}  // namespace gwloc
