#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace atm {

enum class Severity : std::uint8_t { Error, Warning, Info };

std::string_view to_string(Severity severity);

/// One finding from parsing, validation, or linting. Errors block analysis;
/// warnings and infos do not.
struct Diagnostic {
  Severity severity = Severity::Error;
  std::string code;
  std::string message;
  std::string location;  // slash-separated path into the source document

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

std::string format(const Diagnostic& diagnostic);

bool has_errors(const std::vector<Diagnostic>& diagnostics);

/// Sorts by (location, code, message) so diagnostic output is order-stable.
void sort_diagnostics(std::vector<Diagnostic>& diagnostics);

/// Base class for engine errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A document could not be parsed or resolved; carries every finding.
struct ParseError : Error {
  explicit ParseError(std::vector<Diagnostic> diags);
  std::vector<Diagnostic> diagnostics;
};

/// A caller violated an operation's precondition (unknown id, out-of-scope
/// attack, and the like).
struct InputError : Error {
  using Error::Error;
};

}  // namespace atm
