#include "deflogic/report.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "deflogic/parser.hpp"
#include "json.hpp"

namespace deflogic {

using nlohmann::json;

ReportExtension to_report_extension(const Extension& e) {
  return ReportExtension{{e.literals.begin(), e.literals.end()}, e.generating_defaults};
}

namespace {

std::string fixed3(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string stats_trailer(const RunStats& s) {
  return std::to_string(s.inferences) + " inferences, " + fixed3(s.elapsed_seconds) +
         " CPU seconds, " + std::to_string(std::llround(s.lips())) + " Lips";
}

std::string id_list(const std::vector<ClauseId>& ids) {
  std::string out = "[";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(ids[i]);
  }
  return out + "]";
}

std::string format_text(const Report& r) {
  if (r.error) return "ERROR : " + *r.error + "\n";
  std::string out;
  for (const auto& e : r.extensions) {
    out += "EXTENSION : TRUE LITERALS : ";
    for (std::size_t i = 0; i < e.literals.size(); ++i) {
      if (i) out += ", ";
      out += e.literals[i].to_string();
    }
    out += " ; DEFAULTS USED : " + id_list(e.defaults_used) + "\n";
  }
  if (r.selection) {
    const auto& s = *r.selection;
    out += "SELECTED : EXTENSION " + std::to_string(s.index) + " ; SCORE : " + s.score.to_string() +
           " ; GOAL : " + std::to_string(s.goal_hits) + "/" +
           std::to_string(s.goal_hits + s.goal_misses) + "\n";
  }
  out += stats_trailer(r.stats) + "\n";
  return out;
}

json to_json(const Report& r) {
  json j;
  j["extensions"] = json::array();
  for (const auto& e : r.extensions) {
    json lits = json::array();
    for (const auto& l : e.literals) lits.push_back(l.to_string());
    j["extensions"].push_back({{"literals", lits}, {"defaults_used", e.defaults_used}});
  }
  j["stats"] = {{"inferences", r.stats.inferences},
                {"elapsed_seconds", r.stats.elapsed_seconds},
                {"lips", r.stats.lips()}};
  j["facts"] = r.facts;
  j["instanced_clauses"] = r.instanced_clauses;
  if (r.selection) {
    j["selection"] = {{"index", r.selection->index},
                      {"score", r.selection->score.to_string()},
                      {"goal_hits", r.selection->goal_hits},
                      {"goal_misses", r.selection->goal_misses}};
  } else {
    j["selection"] = nullptr;
  }
  j["error"] = r.error ? json(*r.error) : json(nullptr);
  return j;
}

}  // namespace

std::string format_report(const Report& r, ReportFormat format) {
  if (format == ReportFormat::text) return format_text(r);
  return to_json(r).dump() + "\n";
}

Report parse_report_json(std::string_view text) {
  try {
    json j = json::parse(text);
    Report r;
    for (const auto& e : j.at("extensions")) {
      ReportExtension re;
      for (const auto& l : e.at("literals")) re.literals.push_back(parse_literal(l.get<std::string>()));
      re.defaults_used = e.at("defaults_used").get<std::vector<ClauseId>>();
      r.extensions.push_back(std::move(re));
    }
    r.stats.inferences = j.at("stats").at("inferences").get<std::uint64_t>();
    r.stats.elapsed_seconds = j.at("stats").at("elapsed_seconds").get<double>();
    r.facts = j.at("facts").get<std::size_t>();
    r.instanced_clauses = j.at("instanced_clauses").get<std::size_t>();
    if (const auto& s = j.at("selection"); !s.is_null()) {
      ReportSelection sel;
      sel.index = s.at("index").get<std::size_t>();
      sel.score = Score::parse(s.at("score").get<std::string>());
      sel.goal_hits = s.at("goal_hits").get<std::size_t>();
      sel.goal_misses = s.at("goal_misses").get<std::size_t>();
      if (sel.index >= r.extensions.size()) throw std::invalid_argument("selection index out of range");
      r.selection = sel;
    }
    if (const auto& e = j.at("error"); !e.is_null()) r.error = e.get<std::string>();
    return r;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed report JSON: ") + e.what());
  } catch (const ParseError& e) {
    throw std::invalid_argument(std::string("malformed literal in report JSON: ") + e.what());
  }
}

std::string print_stats_table(std::span<const Report> reports) {
  std::string out;
  char buf[160];
  std::snprintf(buf, sizeof buf, "%6s | %10s | %17s | %8s | %12s\n", "Facts", "Extensions",
                "Instanced clauses", "CPU", "Lips");
  out += buf;
  for (const auto& r : reports) {
    std::snprintf(buf, sizeof buf, "%6zu | %10zu | %17zu | %7ss | %12lld\n", r.facts,
                  r.extensions.size(), r.instanced_clauses, fixed3(r.stats.elapsed_seconds).c_str(),
                  static_cast<long long>(std::llround(r.stats.lips())));
    out += buf;
  }
  return out;
}

}  // namespace deflogic
