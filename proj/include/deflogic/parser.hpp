#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "deflogic/literal.hpp"
#include "deflogic/theory.hpp"

namespace deflogic {

// 1-based position in the input plus the offending text.
struct SourceSpan {
  int line = 1;
  int column = 1;
  std::string excerpt;
  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

struct Diagnostic {
  SourceSpan span;
  std::string message;
  std::string to_string() const;
};

// Every failed parse throws this, carrying one diagnostic per bad line.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(std::vector<Diagnostic> diagnostics);
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

enum class TheoryFormat { records, listing, automatic };

struct ParseOptions {
  // Rewrite p(-x) to -p(x) for single-argument literals.
  bool normalize_negated_args = false;
};

// `[-]pred` or `[-]pred(arg, ...)`. Uppercase or underscore-initial tokens
// are rejected as variables. `line` and `column` locate text in a larger
// input for error spans.
Literal parse_literal(std::string_view text, const ParseOptions& options = {}, int line = 1,
                      int column = 1);

// Comma-separated literals at parenthesis depth zero. Empty input gives {}.
std::vector<Literal> parse_literal_list(std::string_view text, const ParseOptions& options = {},
                                        int line = 1, int column = 1);

// `cl(label, hrd|def, [prereqs], consequent, [w1, w2]).`, optionally with a
// leading integer id argument: `cl(7, label, ...)`. Without one the clause
// gets `default_id`.
Clause parse_clause_record(std::string_view text, ClauseId default_id = 1,
                           const ParseOptions& options = {}, int line = 1);

// `<id> p=<a>,<b> <hrd|def> : <prereq>, ..., -> <consequent> [# label]`
Clause parse_listing_line(std::string_view text, const ParseOptions& options = {}, int line = 1);

// Skips blank lines and lines starting with `%` or `#`. Collects every line
// error before throwing.
DefaultTheory parse_theory(std::string_view text, TheoryFormat format = TheoryFormat::automatic,
                           const ParseOptions& options = {});

// LF-terminated lines with canonical spacing. Listing output for an empty
// theory is the empty string.
std::string serialize_theory(const DefaultTheory& t, TheoryFormat format);
std::string serialize_clause(const Clause& c, TheoryFormat format, ClauseId previous_id = 0);

TheoryFormat parse_format_name(std::string_view name);

}  // namespace deflogic
