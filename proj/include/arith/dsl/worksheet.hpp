#pragma once

// Worksheet files: one exercise per line.
//
//   # comment
//   exercise NAME : FORMULA
//   exercise NAME in [LO..HI] : FORMULA
//
// The optional interval replaces the default domain for the exercise's
// free variables. '#' starts a comment anywhere on a line; blank lines
// are ignored. A formula that fails to parse is kept as an error entry
// so the remaining exercises still run.

#include "arith/dsl/ast.hpp"
#include "arith/dsl/check.hpp"
#include "arith/dsl/parser.hpp"

#include <optional>
#include <regex>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace arith::dsl {

// A structural problem with the file itself (malformed line, duplicate name).
class WorksheetError : public std::runtime_error {
public:
  WorksheetError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

// Per-exercise failure. Positions are relative to the worksheet file.
struct ExerciseError {
  ErrorKind kind = ErrorKind::Syntax;
  int line = 0;
  int column = 0;
  std::string message;

  bool is_evaluation_error() const { return kind == ErrorKind::Domain; }
  std::string text() const {
    return std::to_string(line) + ":" + std::to_string(column) + ": " + std::string(to_string(kind)) + ": " + message;
  }

  friend bool operator==(const ExerciseError&, const ExerciseError&) = default;
};

struct Exercise {
  std::string name;
  int line = 0;
  std::string source;
  int source_offset = 0;  // column of the formula text within its line, 0-based
  std::optional<Domain> domain;
  std::variant<Formula, ExerciseError> statement;
};

struct Worksheet {
  std::vector<Exercise> exercises;
};

struct ExerciseOutcome {
  std::string name;
  std::variant<CheckResult, ExerciseError> result;
};

namespace detail {

inline ExerciseError relocate(const SourceError& e, int line, int column_offset) {
  return {e.kind(), line + e.span().line - 1, e.span().line == 1 ? e.span().column + column_offset : e.span().column,
          e.message()};
}

}  // namespace detail

inline Worksheet parse_worksheet(std::string_view text) {
  static const std::regex header(R"(^\s*exercise\s+([A-Za-z_][A-Za-z0-9_]*)\s*(?:in\s*\[\s*(-?[0-9]+)\s*\.\.\s*(-?[0-9]+)\s*\]\s*)?:)");
  Worksheet ws;
  std::set<std::string> names;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t") == std::string::npos) continue;

    std::smatch m;
    if (!std::regex_search(line, m, header))
      throw WorksheetError(line_no, "expected 'exercise NAME [in [LO..HI]] : FORMULA'");
    Exercise ex;
    ex.name = m[1].str();
    ex.line = line_no;
    if (!names.insert(ex.name).second) throw WorksheetError(line_no, "duplicate exercise name '" + ex.name + "'");
    if (m[2].matched) {
      Domain d{parse_int(m[2].str()), parse_int(m[3].str())};
      if (d.lo > d.hi) throw WorksheetError(line_no, "empty domain [" + d.lo.str() + ".." + d.hi.str() + "]");
      ex.domain = std::move(d);
    }
    const auto offset = static_cast<int>(m.position(0) + m.length(0));
    ex.source = line.substr(static_cast<std::size_t>(offset));
    ex.source_offset = offset;
    try {
      ex.statement = parse_formula(ex.source);
    } catch (const ParseError& e) {
      ex.statement = detail::relocate(e, line_no, offset);
    }
    ws.exercises.push_back(std::move(ex));
  }
  return ws;
}

inline std::vector<ExerciseOutcome> run_worksheet(const Worksheet& ws, const Domain& defaults = {}) {
  std::vector<ExerciseOutcome> outcomes;
  for (const Exercise& ex : ws.exercises) {
    ExerciseOutcome outcome{ex.name, ExerciseError{}};
    if (const auto* error = std::get_if<ExerciseError>(&ex.statement)) {
      outcome.result = *error;
    } else {
      try {
        outcome.result = bounded_check(std::get<Formula>(ex.statement), ex.domain.value_or(defaults));
      } catch (const SourceError& e) {
        outcome.result = detail::relocate(e, ex.line, ex.source_offset);
      }
    }
    outcomes.push_back(std::move(outcome));
  }
  return outcomes;
}

}  // namespace arith::dsl
