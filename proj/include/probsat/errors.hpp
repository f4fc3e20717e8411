#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace probsat {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnboundVariable : public Error {
 public:
  explicit UnboundVariable(std::uint32_t var)
      : Error("variable x" + std::to_string(var) + " has no binding"), var_(var) {}
  std::uint32_t var() const noexcept { return var_; }

 private:
  std::uint32_t var_;
};

class ConflictingBinding : public Error {
 public:
  explicit ConflictingBinding(std::uint32_t var)
      : Error("variable x" + std::to_string(var) + " is already bound to the opposite value") {}
};

// Arithmetic errors below signal a logic error in a caller, never bad input.
class NegativeResult : public Error {
 public:
  NegativeResult() : Error("dyadic subtraction would go below zero") {}
};

class OutOfRange : public Error {
 public:
  OutOfRange() : Error("dyadic value exceeds one") {}
};

class TooManyVariables : public Error {
 public:
  TooManyVariables(std::size_t count, std::size_t limit)
      : Error("truth table over " + std::to_string(count) + " variables exceeds the oracle limit of " +
              std::to_string(limit) + " (set PROBSAT_ORACLE_LIMIT to raise it)"),
        limit_(limit) {}
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t limit_;
};

class ConditionOnContradiction : public Error {
 public:
  ConditionOnContradiction() : Error("cannot condition on a formula with no satisfying assignment") {}
};

class ClauseLimitExceeded : public Error {
 public:
  ClauseLimitExceeded(std::size_t count, std::size_t limit)
      : Error("formula has " + std::to_string(count) + " clauses, more than the limit of " +
              std::to_string(limit) + " (raise it with --max-clauses)") {}
};

class InvalidParams : public Error {
 public:
  using Error::Error;
};

}  // namespace probsat
