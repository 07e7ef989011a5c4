#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace satkit {

// Base of every error thrown by the library. `kind()` is a stable
// machine-readable tag also used by the CLI in failed task payloads.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define SATKIT_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                       \
   public:                                                          \
    explicit Name(const std::string& message) : Error(#Name, message) {} \
  };

SATKIT_DEFINE_ERROR(CyclicGraph)
SATKIT_DEFINE_ERROR(UnknownObject)
SATKIT_DEFINE_ERROR(UnknownReference)
SATKIT_DEFINE_ERROR(ValidationError)
SATKIT_DEFINE_ERROR(EndpointMismatch)
SATKIT_DEFINE_ERROR(SourceMismatch)
SATKIT_DEFINE_ERROR(UnknownTriple)
SATKIT_DEFINE_ERROR(IllDefined)
SATKIT_DEFINE_ERROR(NotADiagramMorphism)
SATKIT_DEFINE_ERROR(InfiniteGroup)
SATKIT_DEFINE_ERROR(EnumerationLimit)

#undef SATKIT_DEFINE_ERROR

// Errors raised while reading a DSL file. They always carry a
// 1-based position; `kind()` is SyntaxError or the kind of the validation
// that failed.
class ParseError : public Error {
 public:
  ParseError(std::string kind, std::size_t line, std::size_t column, const std::string& message)
      : Error(std::move(kind), std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        detail_(message) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  // The message without kind and position.
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string detail_;
};

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

}  // namespace satkit
