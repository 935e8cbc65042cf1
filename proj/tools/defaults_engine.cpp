// Command-line front end for the default-logic engine.
//
//   defaults-engine solve --theory T [--facts F] [--goal G] [--format text|json]
//                         [--all] [--stats] [--oracle-check N]
//   defaults-engine loop  --theory T --facts-stream F|- [--interval MS] ...
//   defaults-engine fmt   --in T --to records|listing
//
// Exit codes: 0 ran (and selected, when a goal is given), 1 ran without a
// goal-satisfying extension, 2 input error, 3 oracle disagreement.

#include <csignal>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <stop_token>

#include "CLI11.hpp"
#include "deflogic/engine.hpp"
#include "deflogic/harness.hpp"
#include "deflogic/parser.hpp"
#include "deflogic/report.hpp"

namespace {

using namespace deflogic;

constexpr int kExitSelected = 0;
constexpr int kExitNoGoal = 1;
constexpr int kExitInputError = 2;
constexpr int kExitOracleMismatch = 3;

std::stop_source g_stop;

extern "C" void on_interrupt(int) { g_stop.request_stop(); }

void install_interrupt_handler() {
  struct sigaction sa {};
  sa.sa_handler = on_interrupt;
  sigemptyset(&sa.sa_mask);
  sa.sa_flags = 0;  // no SA_RESTART: a blocking read returns and the loop ends
  sigaction(SIGINT, &sa, nullptr);
  sigaction(SIGTERM, &sa, nullptr);
}

struct CommonOptions {
  std::string theory;
  std::optional<std::string> goal;
  std::string format = "text";
  std::vector<std::string> aliases;
  bool normalize = false;
  bool no_timing = false;
};

void add_common(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--theory", o.theory, "Rule base (records or listing format)")->required();
  cmd->add_option("--goal", o.goal, "Goal file: require/forbid lines");
  cmd->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--alias", o.aliases, "Predicate alias FROM=TO, e.g. g=glider");
  cmd->add_flag("--normalize-negation", o.normalize, "Read p(-x) as -p(x)");
  cmd->add_flag("--no-timing", o.no_timing, "Zero the timing fields for byte-stable output");
}

RunOptions make_run_options(const CommonOptions& o) {
  RunOptions r;
  r.parse.normalize_negated_args = o.normalize;
  for (const auto& a : o.aliases) {
    auto eq = a.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == a.size())
      throw std::invalid_argument("alias must look like FROM=TO: " + a);
    r.aliases[a.substr(0, eq)] = a.substr(eq + 1);
  }
  return r;
}

ReportFormat report_format(const CommonOptions& o) {
  return o.format == "json" ? ReportFormat::json : ReportFormat::text;
}

int outcome(const Report& r, bool has_goal) {
  if (r.error) return kExitInputError;
  if (r.extensions.empty()) return kExitNoGoal;
  if (!has_goal) return kExitSelected;
  bool ok = r.selection && r.selection->goal_misses == 0 && !r.selection->score.is_excluded();
  return ok ? kExitSelected : kExitNoGoal;
}

int run_solve(const CommonOptions& o, const std::optional<std::string>& facts, bool all, bool stats,
              std::optional<std::size_t> oracle_bound) {
  RunOptions ro = make_run_options(o);
  DefaultTheory theory = load_theory(o.theory, ro);
  FactSnapshot snapshot = facts ? load_facts(*facts, ro)
                                : FactSnapshot{{}, std::chrono::steady_clock::now(), "none"};
  std::optional<Goal> goal;
  if (o.goal) goal = load_goal(*o.goal, ro);

  Report report = run_snapshot(theory, snapshot, goal ? &*goal : nullptr, ro);
  if (o.no_timing) report.stats.elapsed_seconds = 0.0;

  Report shown = report;
  if (report.selection && !all) {
    shown.extensions = {report.extensions[report.selection->index]};
    shown.selection->index = 0;
  }
  std::cout << format_report(shown, report_format(o));
  if (stats) std::cout << print_stats_table(std::span<const Report>(&report, 1));

  if (oracle_bound) {
    DefaultTheory merged = inject_facts(theory, snapshot.facts);
    std::set<LiteralSet> engine_sets;
    for (const auto& e : report.extensions) engine_sets.emplace(e.literals.begin(), e.literals.end());
    auto oracle = oracle_extensions(merged, *oracle_bound);
    std::set<LiteralSet> oracle_sets(oracle.begin(), oracle.end());
    if (engine_sets != oracle_sets) {
      std::cerr << "oracle check: DISAGREE (engine " << engine_sets.size() << ", oracle "
                << oracle_sets.size() << " extensions)\n";
      return kExitOracleMismatch;
    }
    std::cerr << "oracle check: agree on " << oracle_sets.size() << " extension(s)\n";
  }
  return outcome(report, goal.has_value());
}

int run_loop_command(const CommonOptions& o, const std::string& stream_path,
                     std::optional<long> interval_ms, std::size_t max_cycles) {
  RunOptions ro = make_run_options(o);
  DefaultTheory theory = load_theory(o.theory, ro);
  std::optional<Goal> goal;
  if (o.goal) goal = load_goal(*o.goal, ro);

  LoopOptions lo;
  if (interval_ms) {
    if (*interval_ms <= 0) throw CLI::ValidationError("--interval", "must be a positive number of ms");
    lo.interval = std::chrono::milliseconds(*interval_ms);
  }
  lo.max_cycles = max_cycles;

  std::ifstream file;
  std::istream* in = &std::cin;
  if (stream_path != "-") {
    file.open(stream_path);
    if (!file) throw IoError("cannot open " + stream_path);
    in = &file;
  }

  install_interrupt_handler();
  auto fmt = report_format(o);
  run_loop(
      theory, *in, goal ? &*goal : nullptr, ro, lo,
      [&](const Report& r) {
        Report shown = r;
        if (o.no_timing) shown.stats.elapsed_seconds = 0.0;
        std::cout << format_report(shown, fmt) << std::flush;
      },
      g_stop.get_token());
  return kExitSelected;
}

int run_fmt(const std::string& in, const std::string& to, bool normalize) {
  ParseOptions po;
  po.normalize_negated_args = normalize;
  DefaultTheory t = parse_theory(read_file(in), TheoryFormat::automatic, po);
  std::cout << serialize_theory(t, parse_format_name(to));
  return kExitSelected;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app("Default-logic extension engine for weighted normal-default rule bases.");
  app.require_subcommand(1);

  CommonOptions solve_opts;
  std::optional<std::string> facts;
  bool all = false, stats = false;
  std::optional<std::size_t> oracle_bound;
  auto* solve = app.add_subcommand("solve", "Enumerate extensions for one fact snapshot");
  add_common(solve, solve_opts);
  solve->add_option("--facts", facts, "Facts file, one literal per line");
  solve->add_flag("--all", all, "Print every extension even when a goal selects one");
  solve->add_flag("--stats", stats, "Append the facts/extensions/clauses/CPU/Lips table");
  solve->add_option("--oracle-check", oracle_bound,
                    "Cross-check against brute-force enumeration with this many defaults at most");

  CommonOptions loop_opts;
  std::string stream_path;
  std::optional<long> interval_ms;
  std::size_t max_cycles = 0;
  auto* loop = app.add_subcommand("loop", "Recompute extensions for every incoming snapshot");
  add_common(loop, loop_opts);
  loop->add_option("--facts-stream", stream_path, "Snapshot lines (comma-separated literals), or -")
      ->required();
  loop->add_option("--interval", interval_ms, "Recompute on the newest snapshot every MS ms");
  loop->add_option("--max-cycles", max_cycles, "Stop after this many reports (0 = unbounded)");

  std::string fmt_in, fmt_to;
  bool fmt_normalize = false;
  auto* fmt = app.add_subcommand("fmt", "Re-serialize a rule base");
  fmt->add_option("--in", fmt_in, "Input rule base")->required();
  fmt->add_option("--to", fmt_to, "Output format")
      ->required()
      ->check(CLI::IsMember({"records", "listing"}));
  fmt->add_flag("--normalize-negation", fmt_normalize, "Read p(-x) as -p(x)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInputError;
  }

  try {
    if (*solve) return run_solve(solve_opts, facts, all, stats, oracle_bound);
    if (*loop) return run_loop_command(loop_opts, stream_path, interval_ms, max_cycles);
    return run_fmt(fmt_in, fmt_to, fmt_normalize);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
  } catch (const ParseError& e) {
    for (const auto& d : e.diagnostics()) std::cerr << "parse error: " << d.to_string() << "\n";
  } catch (const InconsistentKnowledge& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const OracleBoundExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kExitInputError;
}
