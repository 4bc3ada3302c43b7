#ifndef ODESEP_ERRORS_HPP
#define ODESEP_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace odesep {

// Syntax error while parsing an equation string. `offset` is the byte
// position in the source where parsing failed.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Unbound symbol or arithmetic domain violation during evaluation.
class EvalError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Model construction / role declaration problem.
class ModelError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Numerical integration failure; carries the time at which it happened.
class SolveError : public std::runtime_error {
 public:
  SolveError(const std::string& what, double time)
      : std::runtime_error(what + " (at t=" + std::to_string(time) + ")"),
        time_(time) {}
  double time() const { return time_; }

 private:
  double time_;
};

// Estimation-stage failure (singular systems, optimizer breakdown, ...).
class FitError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace odesep

#endif  // ODESEP_ERRORS_HPP
