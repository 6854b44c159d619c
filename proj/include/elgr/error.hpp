#ifndef ELGR_ERROR_HPP
#define ELGR_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace elgr {

/// Base of all domain errors raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed ontology, concept or axiom text.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// The ontology does not entail the target consequence.
class NotEntailed : public Error {
 public:
  using Error::Error;
};

/// The static part alone already entails the target; no repair exists.
class StaticEntails : public Error {
 public:
  using Error::Error;
};

/// A bounded search (weakening BFS, hitting-set tree) ran out of nodes.
class SearchBudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A replacement axiom failed the weakening or non-entailment condition.
class StrategyViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace elgr

#endif  // ELGR_ERROR_HPP
