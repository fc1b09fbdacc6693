#ifndef BREDON_ERRORS_HPP
#define BREDON_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bredon {

// Base class for every error raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Group construction.
struct ClosureExceedsCap : Error {
  explicit ClosureExceedsCap(const std::string& msg) : Error(msg) {}
};
struct NonInvertibleGenerator : Error {
  explicit NonInvertibleGenerator(const std::string& msg) : Error(msg) {}
};

// Character theory / coefficient systems.
struct CapExceeded : Error {
  explicit CapExceeded(const std::string& msg) : Error(msg) {}
};
struct NonInjectiveHomomorphism : Error {
  explicit NonInjectiveHomomorphism(const std::string& msg) : Error(msg) {}
};
struct NotVirtualCharacter : Error {
  explicit NotVirtualCharacter(const std::string& msg) : Error(msg) {}
};
struct MissingExtensionData : Error {
  explicit MissingExtensionData(const std::string& msg) : Error(msg) {}
};
struct ExtensionMismatch : Error {
  explicit ExtensionMismatch(const std::string& msg) : Error(msg) {}
};

// Complex ingestion and assembly.
struct ParseError : Error {
  std::size_t line;
  ParseError(std::size_t line_, const std::string& msg)
      : Error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};
struct UnknownGroup : ParseError {
  UnknownGroup(std::size_t line, const std::string& msg) : ParseError(line, msg) {}
};
struct UnknownCell : ParseError {
  UnknownCell(std::size_t line, const std::string& msg) : ParseError(line, msg) {}
};
struct BadHomomorphism : ParseError {
  BadHomomorphism(std::size_t line, const std::string& msg) : ParseError(line, msg) {}
};
struct DimensionMismatch : ParseError {
  DimensionMismatch(std::size_t line, const std::string& msg) : ParseError(line, msg) {}
};

struct NotAComplex : Error {
  explicit NotAComplex(const std::string& msg) : Error(msg) {}
};
struct ConditionDViolated : Error {
  explicit ConditionDViolated(const std::string& msg) : Error(msg) {}
};

}  // namespace bredon

#endif
