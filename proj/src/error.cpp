#include "pifr/error.hpp"

namespace pifr {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::UnknownAttribute: return "UnknownAttribute";
    case ErrorKind::ValueOutsideDomain: return "ValueOutsideDomain";
    case ErrorKind::DuplicateTuple: return "DuplicateTuple";
    case ErrorKind::ValueOutOfRange: return "ValueOutOfRange";
    case ErrorKind::SchemeMismatch: return "SchemeMismatch";
    case ErrorKind::DomainConflict: return "DomainConflict";
    case ErrorKind::NotTotal: return "NotTotal";
    case ErrorKind::NotConsistent: return "NotConsistent";
    case ErrorKind::SpaceTooLarge: return "SpaceTooLarge";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::FormatError: return "FormatError";
    case ErrorKind::UnboundIdentifier: return "UnboundIdentifier";
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::DuplicateIdentifier: return "DuplicateIdentifier";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, std::string module, const std::string& message)
    : std::runtime_error(module + ": " + std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      module_(std::move(module)) {}

namespace {

std::string describe(int line, int column, const std::vector<std::string>& expected,
                     const std::string& found) {
  std::string msg = std::to_string(line) + ":" + std::to_string(column) + ": expected ";
  if (expected.size() == 1) {
    msg += expected.front();
  } else {
    msg += "one of {";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) msg += ", ";
      msg += expected[i];
    }
    msg += "}";
  }
  return msg + ", found " + found;
}

}  // namespace

ParseError::ParseError(int line, int column, std::vector<std::string> expected, std::string found)
    : Error(ErrorKind::ParseError, "query", describe(line, column, expected, found)),
      line_(line),
      column_(column),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

void fail(ErrorKind kind, std::string module, const std::string& message) {
  throw Error(kind, std::move(module), message);
}

}  // namespace pifr
