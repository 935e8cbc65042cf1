#pragma once

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <stop_token>
#include <string>
#include <string_view>
#include <vector>

#include "deflogic/decision.hpp"
#include "deflogic/parser.hpp"
#include "deflogic/report.hpp"
#include "deflogic/theory.hpp"

namespace deflogic {

struct FactSnapshot {
  std::vector<Literal> facts;  // duplicates removed, first occurrence kept
  std::chrono::steady_clock::time_point timestamp;
  std::string source;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunOptions {
  ParseOptions parse;
  ScoringOptions scoring;
  // Predicate renames applied to theory, facts and goal, e.g. g -> glider.
  std::map<std::string, std::string> aliases;
};

struct LoopOptions {
  // Unset: one cycle per snapshot line. Set: one cycle per tick on the
  // newest snapshot seen so far; intermediate snapshots may be skipped.
  std::optional<std::chrono::milliseconds> interval;
  // 0 = unbounded.
  std::size_t max_cycles = 0;
};

// One literal per line, `#` or `%` comment lines.
FactSnapshot parse_facts(std::string_view text, std::string source = "stdin",
                         const ParseOptions& options = {});

// One snapshot on one line: comma-separated literals.
FactSnapshot parse_snapshot_line(std::string_view line, int line_no = 1,
                                 std::string source = "stdin", const ParseOptions& options = {});

Literal apply_aliases(Literal l, const std::map<std::string, std::string>& aliases);
DefaultTheory apply_aliases(const DefaultTheory& t, const std::map<std::string, std::string>& aliases);

std::string read_file(const std::filesystem::path& path);
DefaultTheory load_theory(const std::filesystem::path& path, const RunOptions& options = {});
Goal load_goal(const std::filesystem::path& path, const RunOptions& options = {});
FactSnapshot load_facts(const std::filesystem::path& path, const RunOptions& options = {});

// The snapshot facts join W as hard facts with fresh ids above the theory's
// maximum id.
DefaultTheory inject_facts(const DefaultTheory& t, const std::vector<Literal>& facts);

// Enumerates extensions of t + snapshot and, with a goal, selects one.
// Throws InconsistentKnowledge.
Report run_snapshot(const DefaultTheory& t, const FactSnapshot& snapshot, const Goal* goal,
                    const RunOptions& options = {});

// Loads the files and runs one cycle. Throws IoError, ParseError,
// InconsistentKnowledge.
Report run_once(const std::filesystem::path& theory_path,
                const std::optional<std::filesystem::path>& facts_path,
                const std::optional<std::filesystem::path>& goal_path,
                const RunOptions& options = {});

Report error_report(std::string message);

// Runs cycles over the snapshot stream until end of stream, max_cycles or a
// stop request. A failing cycle emits an error report and the loop goes on.
// Returns the number of reports emitted. Throws std::invalid_argument for a
// non-positive interval.
std::size_t run_loop(const DefaultTheory& t, std::istream& snapshots, const Goal* goal,
                     const RunOptions& options, const LoopOptions& loop,
                     const std::function<void(const Report&)>& emit, std::stop_token stop = {});

}  // namespace deflogic
