#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace closed_graph {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class InvalidLabeling : public Error {
public:
  using Error::Error;
};

/// Vertex, layer index or other argument outside its admissible range.
class DomainError : public Error {
public:
  using Error::Error;
};

/// An input violates the hypotheses an operation relies on.
class PreconditionError : public Error {
public:
  using Error::Error;
};

class NotConnected : public PreconditionError {
public:
  NotConnected() : PreconditionError("graph is not connected") {}
  explicit NotConnected(const std::string &what) : PreconditionError(what) {}
};

class NotClosed : public PreconditionError {
public:
  NotClosed() : PreconditionError("graph has no closed labeling") {}
};

class OracleLimit : public Error {
public:
  OracleLimit(std::size_t n, std::size_t bound)
      : Error("brute-force oracle refuses n = " + std::to_string(n) +
              " (bound " + std::to_string(bound) + ")") {}
};

class ExchangeabilityError : public Error {
public:
  using Error::Error;
};

class InvalidSequence : public Error {
public:
  using Error::Error;
};

/// A vertex with b_s = 0 has no forward link interval.
class EmptyLink : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  ParseError(std::size_t line, const std::string &message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

} // namespace closed_graph
