#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace orthokit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An element id outside the lattice universe, or a name the lattice lacks.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed term, wff, lattice file, law file or derivation file.
///
/// `position` is a 0-based character offset for single-line inputs and a
/// 1-based line number for files; `line()` is nonzero only for the latter.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position, std::size_t line = 0)
      : Error(format(message, position, line)), message_(message), position_(position), line_(line) {}

  const std::string& message() const noexcept { return message_; }
  std::size_t position() const noexcept { return position_; }
  std::size_t line() const noexcept { return line_; }

 private:
  static std::string format(const std::string& message, std::size_t position, std::size_t line) {
    if (line != 0) return "line " + std::to_string(line) + ": " + message;
    return message + " at position " + std::to_string(position);
  }

  std::string message_;
  std::size_t position_;
  std::size_t line_;
};

/// An exhaustive search would need more evaluations than the caller allowed.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::size_t universe, std::size_t arity, std::uint64_t budget)
      : Error(std::to_string(universe) + "^" + std::to_string(arity) +
              " assignments exceed the evaluation budget of " + std::to_string(budget)),
        universe_(universe), arity_(arity), budget_(budget) {}

  std::size_t universe() const noexcept { return universe_; }
  std::size_t arity() const noexcept { return arity_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::size_t universe_;
  std::size_t arity_;
  std::uint64_t budget_;
};

/// Lookup of a built-in lattice, a catalog law or an axiom that does not exist.
class UnknownName : public Error {
 public:
  using Error::Error;
};

/// A caller broke an operation's precondition (e.g. a certificate that does
/// not conclude the requested equivalence).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The inclusion hierarchy between classes was violated; always a bug or a
/// structurally broken input.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace orthokit
