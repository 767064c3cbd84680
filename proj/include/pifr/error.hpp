#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pifr {

enum class ErrorKind {
  InvalidArgument,
  UnknownAttribute,
  ValueOutsideDomain,
  DuplicateTuple,
  ValueOutOfRange,
  SchemeMismatch,
  DomainConflict,
  NotTotal,
  NotConsistent,
  SpaceTooLarge,
  ParseError,
  FormatError,
  UnboundIdentifier,
  TypeMismatch,
  DuplicateIdentifier,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `module()` names the component that
/// detected it ("core", "algebra", "query", "io", ...).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string module, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& module() const noexcept { return module_; }

 private:
  ErrorKind kind_;
  std::string module_;
};

/// Syntax error in query or formula text. Positions are 1-based.
class ParseError : public Error {
 public:
  ParseError(int line, int column, std::vector<std::string> expected, std::string found);

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }
  const std::string& found() const noexcept { return found_; }

 private:
  int line_;
  int column_;
  std::vector<std::string> expected_;
  std::string found_;
};

[[noreturn]] void fail(ErrorKind kind, std::string module, const std::string& message);

}  // namespace pifr
