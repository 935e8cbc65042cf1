#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "deflogic/decision.hpp"
#include "deflogic/engine.hpp"
#include "deflogic/literal.hpp"
#include "deflogic/theory.hpp"

namespace deflogic {

struct ReportExtension {
  std::vector<Literal> literals;  // canonical order
  std::vector<ClauseId> defaults_used;
  friend bool operator==(const ReportExtension&, const ReportExtension&) = default;
};

struct ReportSelection {
  std::size_t index = 0;  // into Report::extensions
  Score score;
  std::size_t goal_hits = 0;
  std::size_t goal_misses = 0;
  friend bool operator==(const ReportSelection&, const ReportSelection&) = default;
};

// Outcome of one reasoning cycle. A failed cycle carries only `error`.
struct Report {
  std::vector<ReportExtension> extensions;
  RunStats stats;
  std::size_t facts = 0;              // snapshot facts injected
  std::size_t instanced_clauses = 0;  // theory clauses + injected facts
  std::optional<ReportSelection> selection;
  std::optional<std::string> error;
  friend bool operator==(const Report&, const Report&) = default;
};

enum class ReportFormat { text, json };

ReportExtension to_report_extension(const Extension& e);

// Text: one "EXTENSION : TRUE LITERALS : ... ; DEFAULTS USED : [...]" line per
// extension, an optional "SELECTED" line, then the stats trailer
// "N inferences, S CPU seconds, L Lips". JSON: a single document.
std::string format_report(const Report& r, ReportFormat format);

// Inverse of the JSON format. Throws std::invalid_argument on malformed input.
Report parse_report_json(std::string_view text);

// Facts | Extensions | Instanced clauses | CPU | Lips, one row per report.
std::string print_stats_table(std::span<const Report> reports);

}  // namespace deflogic
