#ifndef PDX_ERRORS_HPP
#define PDX_ERRORS_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include "pdx/universe.hpp"

namespace pdx {

enum class ErrorKind {
  ParseError,
  UnknownIdentifier,
  UnboundVariable,
  TypeMismatch,
  RuleViolation,
  UniverseInconsistency,
  PositivityViolation,
  EliminationRestriction,
  DuplicateName,
  NoOpenSection,
  ManifestError,
};

std::string error_kind_name(ErrorKind kind);
std::optional<ErrorKind> error_kind_from_name(const std::string& name);

// Thrown by the kernel and the front end; caught per declaration so that a
// rejection is recorded and checking continues with the next sentence.
struct CheckError : std::runtime_error {
  ErrorKind kind;
  std::string detail;                           // human-readable message
  std::optional<InconsistencyReport> cycle;     // for UniverseInconsistency
  std::string decl;                             // innermost enclosing declaration
  std::string file;
  int line = 0;

  CheckError(ErrorKind k, std::string message)
      : std::runtime_error(message), kind(k), detail(std::move(message)) {}
};

}  // namespace pdx

#endif
