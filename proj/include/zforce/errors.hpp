#pragma once

#include <stdexcept>
#include <string>

namespace zforce {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed digraph text / DOT input.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// An operation that is only defined for loopless digraphs received one with loops.
class LoopModeError : public Error {
 public:
  using Error::Error;
};

/// Input does not belong to the digraph family a closed form requires.
class FamilyMismatch : public Error {
 public:
  using Error::Error;
};

/// Exhaustive search refused because the digraph is larger than the configured bound.
class BoundExceeded : public Error {
 public:
  BoundExceeded(std::size_t n, std::size_t bound)
      : Error("digraph has " + std::to_string(n) + " vertices; enumeration bound is " +
              std::to_string(bound)) {}
};

/// The failed zero forcing number does not exist (loop rule with Z = 0).
class UndefinedMetric : public Error {
 public:
  using Error::Error;
};

}  // namespace zforce
