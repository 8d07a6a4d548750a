#pragma once

#include <stdexcept>
#include <string>

namespace curvsym {

// Stable error codes, surfaced verbatim by the CLI and the file parser.
enum class errc {
  syntax,
  duplicate_entry,
  unknown_coordinate,
  dimension_mismatch,
  zero_denominator,
  pole_at_point,
  degenerate_metric,
  chart_mismatch,
  invalid_slot,
  not_brinkmann,
  bad_spec,
  domain,
};

inline const char* errc_name(errc c) {
  switch (c) {
  case errc::syntax: return "syntax";
  case errc::duplicate_entry: return "duplicate-entry";
  case errc::unknown_coordinate: return "unknown-coordinate";
  case errc::dimension_mismatch: return "dimension-mismatch";
  case errc::zero_denominator: return "zero-denominator";
  case errc::pole_at_point: return "pole-at-point";
  case errc::degenerate_metric: return "degenerate-metric";
  case errc::chart_mismatch: return "chart-mismatch";
  case errc::invalid_slot: return "invalid-slot";
  case errc::not_brinkmann: return "not-brinkmann";
  case errc::bad_spec: return "bad-spec";
  case errc::domain: return "domain";
  }
  return "unknown";
}

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  errc code() const { return code_; }

private:
  errc code_;
};

// Parse errors carry a source position (1-based line and column).
class ParseError : public Error {
public:
  ParseError(errc code, int line, int column, const std::string& what)
      : Error(code, what + " (line " + std::to_string(line) + ", column " +
                        std::to_string(column) + ")"),
        line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

} // namespace curvsym
