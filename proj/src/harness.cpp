#include "deflogic/harness.hpp"

#include <atomic>
#include <condition_variable>
#include <memory>
#include <fstream>
#include <istream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "deflogic/engine.hpp"

namespace deflogic {

namespace {

bool skippable(std::string_view line, std::string_view comment_chars) {
  auto b = line.find_first_not_of(" \t\r");
  return b == std::string_view::npos || comment_chars.find(line[b]) != std::string_view::npos;
}

void dedupe(std::vector<Literal>& facts) {
  std::set<Literal> seen;
  std::vector<Literal> out;
  for (auto& f : facts)
    if (seen.insert(f).second) out.push_back(std::move(f));
  facts = std::move(out);
}

}  // namespace

FactSnapshot parse_facts(std::string_view text, std::string source, const ParseOptions& options) {
  FactSnapshot s{{}, std::chrono::steady_clock::now(), std::move(source)};
  std::vector<Diagnostic> errors;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    auto line = text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (skippable(line, "#%")) continue;
    try {
      s.facts.push_back(parse_literal(line, options, line_no));
    } catch (const ParseError& e) {
      errors.insert(errors.end(), e.diagnostics().begin(), e.diagnostics().end());
    }
  }
  if (!errors.empty()) throw ParseError(std::move(errors));
  dedupe(s.facts);
  return s;
}

FactSnapshot parse_snapshot_line(std::string_view line, int line_no, std::string source,
                                 const ParseOptions& options) {
  FactSnapshot s{parse_literal_list(line, options, line_no), std::chrono::steady_clock::now(),
                 std::move(source)};
  dedupe(s.facts);
  return s;
}

Literal apply_aliases(Literal l, const std::map<std::string, std::string>& aliases) {
  if (auto it = aliases.find(l.predicate); it != aliases.end()) l.predicate = it->second;
  return l;
}

DefaultTheory apply_aliases(const DefaultTheory& t, const std::map<std::string, std::string>& aliases) {
  if (aliases.empty()) return t;
  std::vector<Clause> clauses = t.clauses();
  for (auto& c : clauses) {
    for (auto& p : c.prerequisites) p = apply_aliases(std::move(p), aliases);
    c.consequent = apply_aliases(std::move(c.consequent), aliases);
  }
  return build_theory(std::move(clauses));
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

DefaultTheory load_theory(const std::filesystem::path& path, const RunOptions& options) {
  return apply_aliases(parse_theory(read_file(path), TheoryFormat::automatic, options.parse),
                       options.aliases);
}

Goal load_goal(const std::filesystem::path& path, const RunOptions& options) {
  Goal g = parse_goal(read_file(path), path.stem().string(), options.parse);
  Goal out{g.name, {}, {}};
  for (const auto& l : g.required) out.required.insert(apply_aliases(l, options.aliases));
  for (const auto& l : g.forbidden) out.forbidden.insert(apply_aliases(l, options.aliases));
  validate_goal(out);
  return out;
}

FactSnapshot load_facts(const std::filesystem::path& path, const RunOptions& options) {
  FactSnapshot s = parse_facts(read_file(path), path.string(), options.parse);
  for (auto& f : s.facts) f = apply_aliases(std::move(f), options.aliases);
  dedupe(s.facts);
  return s;
}

DefaultTheory inject_facts(const DefaultTheory& t, const std::vector<Literal>& facts) {
  std::vector<Clause> clauses = t.clauses();
  ClauseId next = t.max_id();
  for (const auto& f : facts) {
    Clause c;
    c.id = ++next;
    c.label = "snapshot fact";
    c.kind = ClauseKind::hard;
    c.consequent = f;
    clauses.push_back(std::move(c));
  }
  return build_theory(std::move(clauses));
}

Report run_snapshot(const DefaultTheory& t, const FactSnapshot& snapshot, const Goal* goal,
                    const RunOptions& options) {
  DefaultTheory merged = inject_facts(t, snapshot.facts);
  EnumerationResult result = compute_extensions(merged);

  Report r;
  r.stats = result.stats;
  r.facts = snapshot.facts.size();
  r.instanced_clauses = merged.clauses().size();
  for (const auto& e : result.extensions) r.extensions.push_back(to_report_extension(e));
  if (goal && !result.extensions.empty()) {
    auto ranked = rank_extensions(result.extensions, merged, *goal, options.scoring);
    auto i = select_index(ranked);
    r.selection = ReportSelection{i, ranked[i].score, ranked[i].goal_hits, ranked[i].goal_misses};
  }
  return r;
}

Report run_once(const std::filesystem::path& theory_path,
                const std::optional<std::filesystem::path>& facts_path,
                const std::optional<std::filesystem::path>& goal_path, const RunOptions& options) {
  DefaultTheory t = load_theory(theory_path, options);
  FactSnapshot s = facts_path ? load_facts(*facts_path, options)
                              : FactSnapshot{{}, std::chrono::steady_clock::now(), "none"};
  std::optional<Goal> goal;
  if (goal_path) goal = load_goal(*goal_path, options);
  return run_snapshot(t, s, goal ? &*goal : nullptr, options);
}

Report error_report(std::string message) {
  Report r;
  r.error = std::move(message);
  return r;
}

namespace {

Report run_cycle(const DefaultTheory& t, std::string_view line, int line_no, const Goal* goal,
                 const RunOptions& options) {
  try {
    FactSnapshot s = parse_snapshot_line(line, line_no, "stream", options.parse);
    for (auto& f : s.facts) f = apply_aliases(std::move(f), options.aliases);
    return run_snapshot(t, s, goal, options);
  } catch (const std::exception& e) {
    return error_report("snapshot at line " + std::to_string(line_no) + ": " + e.what());
  }
}

struct LatestSnapshot {
  std::mutex mutex;
  std::condition_variable changed;
  std::optional<std::string> line;
  int line_no = 0;
  bool end_of_stream = false;
  std::atomic<bool> abandoned{false};
};

}  // namespace

std::size_t run_loop(const DefaultTheory& t, std::istream& snapshots, const Goal* goal,
                     const RunOptions& options, const LoopOptions& loop,
                     const std::function<void(const Report&)>& emit, std::stop_token stop) {
  if (loop.interval && loop.interval->count() <= 0)
    throw std::invalid_argument("loop interval must be positive");

  std::size_t emitted = 0;
  auto budget_left = [&] { return loop.max_cycles == 0 || emitted < loop.max_cycles; };

  if (!loop.interval) {
    std::string line;
    int line_no = 0;
    while (budget_left() && !stop.stop_requested() && std::getline(snapshots, line)) {
      ++line_no;
      if (skippable(line, "#%")) continue;
      emit(run_cycle(t, line, line_no, goal, options));
      ++emitted;
    }
    return emitted;
  }

  // Latest-value semantics: the reader overwrites, each tick consumes the
  // newest line.
  auto latest = std::make_shared<LatestSnapshot>();
  std::thread reader([latest, &snapshots] {
    std::string line;
    int line_no = 0;
    while (!latest->abandoned && std::getline(snapshots, line)) {
      ++line_no;
      if (skippable(line, "#%")) continue;
      std::lock_guard lock(latest->mutex);
      latest->line = line;
      latest->line_no = line_no;
      latest->changed.notify_all();
    }
    std::lock_guard lock(latest->mutex);
    latest->end_of_stream = true;
    latest->changed.notify_all();
  });

  int last_run = 0;
  while (budget_left() && !stop.stop_requested()) {
    std::string line;
    int line_no = 0;
    {
      std::unique_lock lock(latest->mutex);
      auto drained = [&] { return latest->end_of_stream && latest->line_no == last_run; };
      latest->changed.wait_for(lock, *loop.interval, drained);
      if (drained()) break;
      if (!latest->line) continue;
      line = *latest->line;
      line_no = latest->line_no;
    }
    emit(run_cycle(t, line, line_no, goal, options));
    ++emitted;
    last_run = line_no;
  }

  // A reader blocked on an interactive stream cannot be joined; give it a
  // moment to finish and otherwise let it go.
  latest->abandoned = true;
  bool finished = false;
  {
    std::unique_lock lock(latest->mutex);
    finished = latest->changed.wait_for(lock, std::chrono::milliseconds(200),
                                        [&] { return latest->end_of_stream; });
  }
  if (finished)
    reader.join();
  else
    reader.detach();
  return emitted;
}

}  // namespace deflogic
