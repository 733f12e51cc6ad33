#include "atm/diagnostics.hpp"

#include <algorithm>
#include <tuple>

namespace atm {

std::string_view to_string(Severity severity) {
  switch (severity) {
    case Severity::Error: return "error";
    case Severity::Warning: return "warning";
    case Severity::Info: return "info";
  }
  return "error";
}

std::string format(const Diagnostic& d) {
  std::string out(to_string(d.severity));
  out += "[";
  out += d.code;
  out += "]";
  if (!d.location.empty()) {
    out += " at ";
    out += d.location;
  }
  out += ": ";
  out += d.message;
  return out;
}

bool has_errors(const std::vector<Diagnostic>& diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::Error; });
}

void sort_diagnostics(std::vector<Diagnostic>& diagnostics) {
  std::sort(diagnostics.begin(), diagnostics.end(),
            [](const Diagnostic& a, const Diagnostic& b) {
              return std::tie(a.location, a.code, a.message) <
                     std::tie(b.location, b.code, b.message);
            });
}

namespace {
std::string summarize(const std::vector<Diagnostic>& diags) {
  if (diags.empty()) return "document error";
  std::string out = format(diags.front());
  if (diags.size() > 1) {
    out += " (+" + std::to_string(diags.size() - 1) + " more)";
  }
  return out;
}
}  // namespace

ParseError::ParseError(std::vector<Diagnostic> diags)
    : Error(summarize(diags)), diagnostics(std::move(diags)) {}

}  // namespace atm
