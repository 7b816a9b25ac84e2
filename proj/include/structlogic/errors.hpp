#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace structlogic {

// Base for all domain errors raised by the toolkit. The CLI maps these to
// exit code 1; anything else escaping is a bug.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class InvalidPair : public Error {
public:
  explicit InvalidPair(const std::string& what) : Error(what) {}
};

class UnboundVariable : public Error {
public:
  explicit UnboundVariable(const std::string& name)
      : Error("unbound variable: " + name), name_(name) {}
  const std::string& name() const { return name_; }

private:
  std::string name_;
};

class CapacityExceeded : public Error {
public:
  explicit CapacityExceeded(const std::string& what) : Error(what) {}
};

// Lexical or syntactic failure; position is a 0-based character offset.
class ParseError : public Error {
public:
  ParseError(std::size_t position, const std::string& message)
      : Error(message + " (at offset " + std::to_string(position) + ")"),
        position_(position),
        message_(message) {}
  std::size_t position() const { return position_; }
  const std::string& message() const { return message_; }

private:
  std::size_t position_;
  std::string message_;
};

class CompileError : public Error {
public:
  explicit CompileError(const std::string& what) : Error(what) {}
};

class VertexNotFound : public Error {
public:
  explicit VertexNotFound(const std::string& name)
      : Error("vertex not found: " + name) {}
};

class BothRailsReachable : public Error {
public:
  explicit BothRailsReachable(const std::string& what) : Error(what) {}
};

class NeitherRailReachable : public Error {
public:
  explicit NeitherRailReachable(const std::string& what) : Error(what) {}
};

class AmbiguousOutput : public Error {
public:
  explicit AmbiguousOutput(const std::string& what) : Error(what) {}
};

class DarkOutput : public Error {
public:
  explicit DarkOutput(const std::string& what) : Error(what) {}
};

class DimensionMismatch : public Error {
public:
  explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

// Malformed netlist / grid text files.
class FormatError : public Error {
public:
  explicit FormatError(const std::string& what) : Error(what) {}
};

}  // namespace structlogic
