#include "deflogic/decision.hpp"

#include <stdexcept>

namespace deflogic {

void validate_goal(const Goal& g) {
  for (const auto& l : g.required)
    if (g.forbidden.contains(l))
      throw std::invalid_argument("goal literal " + l.to_string() + " is both required and forbidden");
  if (const Literal* p = find_complementary_pair(g.required))
    throw std::invalid_argument("goal requires both " + p->to_string() + " and " +
                                complement(*p).to_string());
}

Goal parse_goal(std::string_view text, std::string name, const ParseOptions& options) {
  Goal g;
  g.name = std::move(name);
  std::vector<Diagnostic> errors;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    auto line = text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    std::size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string_view::npos || line[b] == '#') continue;
    auto body = line.substr(b);
    auto sp = body.find_first_of(" \t");
    auto keyword = body.substr(0, sp);
    if (keyword != "require" && keyword != "forbid") {
      errors.push_back({SourceSpan{line_no, static_cast<int>(b) + 1, std::string(keyword)},
                        "expected 'require' or 'forbid'"});
      continue;
    }
    if (sp == std::string_view::npos) {
      errors.push_back({SourceSpan{line_no, static_cast<int>(b) + 1, std::string(body)},
                        "missing literal"});
      continue;
    }
    try {
      Literal l = parse_literal(body.substr(sp), options, line_no, static_cast<int>(b + sp) + 1);
      (keyword == "require" ? g.required : g.forbidden).insert(std::move(l));
    } catch (const ParseError& e) {
      errors.insert(errors.end(), e.diagnostics().begin(), e.diagnostics().end());
    }
  }
  if (!errors.empty()) throw ParseError(std::move(errors));
  validate_goal(g);
  return g;
}

std::string Score::to_string() const { return excluded_ ? "-inf" : value_.to_string(); }

Score Score::parse(std::string_view text) {
  if (text == "-inf") return excluded();
  auto r = Rational::parse(text);
  if (!r) throw std::invalid_argument("bad score '" + std::string(text) + "'");
  return Score(*r);
}

std::strong_ordering operator<=>(const Score& a, const Score& b) {
  if (a.excluded_ || b.excluded_) return b.excluded_ <=> a.excluded_;
  return a.value_ <=> b.value_;
}

RankedExtension score_extension(const Extension& e, const DefaultTheory& t, const Goal& g,
                                const ScoringOptions& options) {
  RankedExtension r;
  r.extension = e;
  for (const auto& l : g.required) (e.literals.contains(l) ? r.goal_hits : r.goal_misses)++;

  bool forbidden = false;
  for (const auto& l : g.forbidden) forbidden = forbidden || e.literals.contains(l);
  if (forbidden) {
    r.score = Score::excluded();
    return r;
  }

  Rational total;
  for (auto id : e.generating_defaults)
    if (const Clause* c = t.find(id)) total += c->weight.primary;
  auto balance = static_cast<std::int64_t>(r.goal_hits) - static_cast<std::int64_t>(r.goal_misses);
  total += Rational(balance) * options.goal_bonus;
  r.score = Score(total);
  return r;
}

std::vector<RankedExtension> rank_extensions(std::span<const Extension> extensions,
                                             const DefaultTheory& t, const Goal& g,
                                             const ScoringOptions& options) {
  std::vector<RankedExtension> out;
  out.reserve(extensions.size());
  for (const auto& e : extensions) out.push_back(score_extension(e, t, g, options));
  return out;
}

std::size_t select_index(std::span<const RankedExtension> ranked) {
  if (ranked.empty()) throw std::invalid_argument("no extensions to select from");
  auto better = [](const RankedExtension& a, const RankedExtension& b) {
    if (a.score != b.score) return a.score > b.score;
    auto na = a.extension.generating_defaults.size(), nb = b.extension.generating_defaults.size();
    if (na != nb) return na < nb;
    return to_string(a.extension.literals) < to_string(b.extension.literals);
  };
  std::size_t best = 0;
  for (std::size_t i = 1; i < ranked.size(); ++i)
    if (better(ranked[i], ranked[best])) best = i;
  return best;
}

const RankedExtension& select_extension(std::span<const RankedExtension> ranked) {
  return ranked[select_index(ranked)];
}

}  // namespace deflogic
