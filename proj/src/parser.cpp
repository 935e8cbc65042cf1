#include "deflogic/parser.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <optional>

namespace deflogic {

std::string Diagnostic::to_string() const {
  return "line " + std::to_string(span.line) + ", column " + std::to_string(span.column) + ": " +
         message + (span.excerpt.empty() ? "" : " near '" + span.excerpt + "'");
}

namespace {

std::string join_diagnostics(const std::vector<Diagnostic>& ds) {
  std::string out;
  for (const auto& d : ds) {
    if (!out.empty()) out += '\n';
    out += d.to_string();
  }
  return out;
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

// Offset-preserving trim: returns the trimmed view and how many leading
// characters were dropped.
std::string_view trim(std::string_view s, int* dropped = nullptr) {
  std::size_t b = 0;
  while (b < s.size() && is_space(s[b])) ++b;
  std::size_t e = s.size();
  while (e > b && is_space(s[e - 1])) --e;
  if (dropped) *dropped = static_cast<int>(b);
  return s.substr(b, e - b);
}

[[noreturn]] void fail(int line, int column, std::string_view excerpt, std::string message) {
  throw ParseError({Diagnostic{SourceSpan{line, column, std::string(excerpt)}, std::move(message)}});
}

bool looks_like_variable(std::string_view token) {
  if (!token.empty() && token.front() == '-') token.remove_prefix(1);
  return !token.empty() && (std::isupper(static_cast<unsigned char>(token.front())) || token.front() == '_');
}

// Typeset quotes become straight quotes: ``x'' and “x” -> "x", ‘x’ -> 'x'.
std::string normalize_quotes(std::string_view in) {
  std::string out;
  out.reserve(in.size());
  bool backtick_open = false;
  for (std::size_t i = 0; i < in.size(); ++i) {
    auto rest = in.substr(i);
    if (rest.starts_with("``")) {
      out += '"';
      backtick_open = true;
      ++i;
    } else if (backtick_open && rest.starts_with("''")) {
      out += '"';
      backtick_open = false;
      ++i;
    } else if (rest.starts_with("\xE2\x80\x9C") || rest.starts_with("\xE2\x80\x9D")) {
      out += '"';
      i += 2;
    } else if (rest.starts_with("\xE2\x80\x98") || rest.starts_with("\xE2\x80\x99")) {
      out += '\'';
      i += 2;
    } else {
      out += in[i];
    }
  }
  return out;
}

struct Piece {
  std::string_view text;
  int column;  // 1-based column of text[0]
};

// Splits on commas at bracket depth zero, outside quotes.
std::optional<std::vector<Piece>> split_top_level(std::string_view s, int column) {
  std::vector<Piece> out;
  int depth = 0;
  char quote = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (quote) {
      if (c == '\\') ++i;
      else if (c == quote) quote = 0;
      continue;
    }
    if (c == '"' || c == '\'') quote = c;
    else if (c == '(' || c == '[') ++depth;
    else if (c == ')' || c == ']') {
      if (--depth < 0) return std::nullopt;
    } else if (c == ',' && depth == 0) {
      out.push_back({s.substr(start, i - start), column + static_cast<int>(start)});
      start = i + 1;
    }
  }
  if (depth != 0 || quote) return std::nullopt;
  out.push_back({s.substr(start), column + static_cast<int>(start)});
  return out;
}

ClauseKind parse_kind(std::string_view token, int line, int column) {
  if (token == "hrd") return ClauseKind::hard;
  if (token == "def") return ClauseKind::default_rule;
  fail(line, column, token, "unknown clause kind '" + std::string(token) + "' (expected hrd or def)");
}

std::string_view kind_token(ClauseKind k) { return k == ClauseKind::hard ? "hrd" : "def"; }

std::string parse_label(std::string_view text, int line, int column) {
  if (text.empty()) return {};
  char q = text.front();
  if (q != '"' && q != '\'') {
    if (text.find_first_of(" \t\"'") != std::string_view::npos)
      fail(line, column, text, "malformed label");
    return std::string(text);
  }
  if (text.size() < 2 || text.back() != q) fail(line, column, text, "unterminated label string");
  std::string out;
  for (std::size_t i = 1; i + 1 < text.size(); ++i) {
    char c = text[i];
    if (c == '\\' && i + 2 < text.size()) {
      out += text[++i];
    } else if (c == q) {
      fail(line, column + static_cast<int>(i), text, "unescaped quote inside label");
    } else {
      out += c;
    }
  }
  return out;
}

std::string quote_label(std::string_view label) {
  std::string out = "\"";
  for (char c : label) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

Weight parse_weight_list(std::string_view text, int line, int column) {
  int dropped = 0;
  auto t = trim(text, &dropped);
  column += dropped;
  if (t.size() < 2 || t.front() != '[' || t.back() != ']')
    fail(line, column, t, "weights must be a list");
  auto inner = t.substr(1, t.size() - 2);
  if (trim(inner).empty()) return {};
  auto parts = split_top_level(inner, column + 1);
  if (!parts || parts->size() != 2)
    fail(line, column, t, "weight list must be empty or have two elements");
  auto a = Rational::parse(trim((*parts)[0].text));
  auto b = Rational::parse(trim((*parts)[1].text));
  if (!a || !b) fail(line, column, t, "unparsable weight");
  return Weight{*a, *b};
}

std::string weight_list(const Weight& w) {
  if (w.primary == Rational{} && w.secondary == Rational{}) return "[]";
  return "[" + w.primary.to_string() + "," + w.secondary.to_string() + "]";
}

bool is_comment_or_blank(std::string_view line) {
  auto t = trim(line);
  return t.empty() || t.front() == '%' || t.front() == '#';
}

std::optional<TheoryFormat> detect_line_format(std::string_view line) {
  auto t = trim(line);
  if (t.starts_with("cl(") || t.starts_with("cl ")) return TheoryFormat::records;
  if (!t.empty() && std::isdigit(static_cast<unsigned char>(t.front()))) return TheoryFormat::listing;
  return std::nullopt;
}

std::string_view format_name(TheoryFormat f) {
  return f == TheoryFormat::records ? "records" : "listing";
}

}  // namespace

ParseError::ParseError(std::vector<Diagnostic> diagnostics)
    : std::runtime_error(join_diagnostics(diagnostics)), diagnostics_(std::move(diagnostics)) {}

Literal parse_literal(std::string_view text, const ParseOptions& options, int line, int column) {
  int dropped = 0;
  auto t = trim(text, &dropped);
  column += dropped;
  if (t.empty()) fail(line, column, text, "empty literal");

  Sign sign = Sign::positive;
  std::size_t pos = 0;
  if (t[0] == '-') {
    sign = Sign::negative;
    pos = 1;
    while (pos < t.size() && is_space(t[pos])) ++pos;
  }

  auto open = t.find('(', pos);
  auto pred = trim(t.substr(pos, open == std::string_view::npos ? std::string_view::npos : open - pos));
  if (pred.empty()) fail(line, column + static_cast<int>(pos), t, "empty predicate");
  if (looks_like_variable(pred))
    fail(line, column + static_cast<int>(pos), pred, "variables are not supported (ground literals only)");
  if (!is_valid_predicate(pred))
    fail(line, column + static_cast<int>(pos), pred, "illegal character in predicate");

  std::vector<std::string> args;
  if (open != std::string_view::npos) {
    if (t.back() != ')') {
      auto close = t.find(')', open);
      if (close == std::string_view::npos)
        fail(line, column + static_cast<int>(open), t, "unbalanced parentheses");
      fail(line, column + static_cast<int>(close) + 1, t, "unexpected text after literal");
    }
    auto inner = t.substr(open + 1, t.size() - open - 2);
    if (inner.find_first_of("()") != std::string_view::npos)
      fail(line, column + static_cast<int>(open), t, "nested terms are not supported");
    if (trim(inner).empty()) fail(line, column + static_cast<int>(open), t, "empty argument list");
    std::size_t start = 0;
    while (true) {
      auto comma = inner.find(',', start);
      auto raw = inner.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
      int arg_col = column + static_cast<int>(open + 1 + start);
      auto arg = trim(raw);
      if (arg.empty()) fail(line, arg_col, t, "empty argument");
      if (looks_like_variable(arg))
        fail(line, arg_col, arg, "variables are not supported (ground literals only)");
      if (!is_valid_argument(arg)) fail(line, arg_col, arg, "illegal character in argument");
      args.emplace_back(arg);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  } else if (t.find(')') != std::string_view::npos) {
    fail(line, column, t, "unbalanced parentheses");
  }

  if (options.normalize_negated_args && args.size() == 1 && args[0].size() > 1 && args[0][0] == '-') {
    args[0].erase(0, 1);
    sign = sign == Sign::positive ? Sign::negative : Sign::positive;
  }
  return Literal{std::string(pred), std::move(args), sign};
}

std::vector<Literal> parse_literal_list(std::string_view text, const ParseOptions& options, int line,
                                        int column) {
  std::vector<Literal> out;
  if (trim(text).empty()) return out;
  auto parts = split_top_level(text, column);
  if (!parts) fail(line, column, text, "unbalanced parentheses");
  for (const auto& p : *parts) out.push_back(parse_literal(p.text, options, line, p.column));
  return out;
}

Clause parse_clause_record(std::string_view text, ClauseId default_id, const ParseOptions& options,
                           int line) {
  std::string normalized = normalize_quotes(text);
  int dropped = 0;
  auto t = trim(normalized, &dropped);
  int column = 1 + dropped;

  if (!t.starts_with("cl")) fail(line, column, t, "expected a cl(...) record");
  std::size_t pos = 2;
  while (pos < t.size() && is_space(t[pos])) ++pos;
  if (pos >= t.size() || t[pos] != '(') fail(line, column + static_cast<int>(pos), t, "expected '(' after cl");
  std::size_t open = pos;

  // Find the matching close paren, honouring quotes.
  int depth = 0;
  char quote = 0;
  std::size_t close = std::string_view::npos;
  for (std::size_t i = open; i < t.size(); ++i) {
    char c = t[i];
    if (quote) {
      if (c == '\\') ++i;
      else if (c == quote) quote = 0;
      continue;
    }
    if (c == '"' || c == '\'') quote = c;
    else if (c == '(' || c == '[') ++depth;
    else if (c == ')' || c == ']') {
      if (--depth == 0) {
        close = i;
        break;
      }
    }
  }
  if (close == std::string_view::npos) fail(line, column + static_cast<int>(open), t, "unbalanced record");

  auto tail = trim(t.substr(close + 1));
  if (tail.empty() || tail.front() != '.')
    fail(line, column + static_cast<int>(close) + 1, tail, "expected '.' after record");
  auto after = trim(tail.substr(1));
  if (!after.empty() && after.front() != '%')
    fail(line, column + static_cast<int>(close) + 2, after, "trailing garbage after record");

  int body_col = column + static_cast<int>(open) + 1;
  auto args = split_top_level(t.substr(open + 1, close - open - 1), body_col);
  if (!args) fail(line, column, t, "unbalanced record");
  if (args->size() != 5 && args->size() != 6)
    fail(line, column, t, "cl record needs 5 arguments (or 6 with a leading id)");

  Clause c;
  c.id = default_id;
  std::size_t k = 0;
  if (args->size() == 6) {
    auto id_text = trim((*args)[0].text);
    auto id = Rational::parse(id_text);
    if (id_text.empty() || id_text.front() == '-' || !id || id->den() != 1 ||
        id->num() > std::numeric_limits<ClauseId>::max())
      fail(line, (*args)[0].column, id_text, "clause id must be a nonnegative integer");
    c.id = static_cast<ClauseId>(id->num());
    k = 1;
  }

  const auto& label_p = (*args)[k];
  int label_drop = 0;
  c.label = parse_label(trim(label_p.text, &label_drop), line, label_p.column + label_drop);

  const auto& kind_p = (*args)[k + 1];
  int kind_drop = 0;
  c.kind = parse_kind(trim(kind_p.text, &kind_drop), line, kind_p.column + kind_drop);

  const auto& pre_p = (*args)[k + 2];
  int pre_drop = 0;
  auto pre = trim(pre_p.text, &pre_drop);
  if (pre.size() < 2 || pre.front() != '[' || pre.back() != ']')
    fail(line, pre_p.column + pre_drop, pre, "prerequisites must be a list");
  c.prerequisites =
      parse_literal_list(pre.substr(1, pre.size() - 2), options, line, pre_p.column + pre_drop + 1);

  const auto& cons_p = (*args)[k + 3];
  c.consequent = parse_literal(cons_p.text, options, line, cons_p.column);

  const auto& w_p = (*args)[k + 4];
  c.weight = parse_weight_list(w_p.text, line, w_p.column);
  return c;
}

Clause parse_listing_line(std::string_view text, const ParseOptions& options, int line) {
  int dropped = 0;
  auto t = trim(text, &dropped);
  int column = 1 + dropped;

  std::size_t pos = 0;
  while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
  if (pos == 0) fail(line, column, t, "missing clause id");
  auto id = Rational::parse(t.substr(0, pos));
  if (!id || id->num() > std::numeric_limits<ClauseId>::max())
    fail(line, column, t.substr(0, pos), "clause id out of range");
  Clause c;
  c.id = static_cast<ClauseId>(id->num());

  auto skip_ws = [&] {
    while (pos < t.size() && is_space(t[pos])) ++pos;
  };
  auto col = [&](std::size_t p) { return column + static_cast<int>(p); };

  skip_ws();
  if (!t.substr(pos).starts_with("p=")) fail(line, col(pos), t.substr(pos), "missing weight 'p=<a>,<b>'");
  pos += 2;
  auto wend = pos;
  while (wend < t.size() && !is_space(t[wend])) ++wend;
  auto wtext = t.substr(pos, wend - pos);
  auto comma = wtext.find(',');
  if (comma == std::string_view::npos) fail(line, col(pos), wtext, "unparsable weight");
  auto a = Rational::parse(wtext.substr(0, comma));
  auto b = Rational::parse(wtext.substr(comma + 1));
  if (!a || !b) fail(line, col(pos), wtext, "unparsable weight");
  c.weight = Weight{*a, *b};
  pos = wend;

  skip_ws();
  auto kend = pos;
  while (kend < t.size() && !is_space(t[kend]) && t[kend] != ':') ++kend;
  c.kind = parse_kind(t.substr(pos, kend - pos), line, col(pos));
  pos = kend;
  skip_ws();
  if (pos >= t.size() || t[pos] != ':') fail(line, col(pos), t.substr(pos), "expected ':' after kind");
  ++pos;

  auto body = t.substr(pos);
  auto arrow = body.find("->");
  if (arrow == std::string_view::npos) fail(line, col(pos), body, "missing '->'");

  auto pre = body.substr(0, arrow);
  int pre_drop = 0;
  auto pre_trim = trim(pre, &pre_drop);
  if (!pre_trim.empty() && pre_trim.back() == ',') pre_trim = trim(pre_trim.substr(0, pre_trim.size() - 1));
  c.prerequisites = parse_literal_list(pre_trim, options, line, col(pos) + pre_drop);

  auto rest = body.substr(arrow + 2);
  auto hash = rest.find('#');
  auto cons_text = rest.substr(0, hash);
  c.consequent = parse_literal(cons_text, options, line, col(pos + arrow + 2));
  if (hash != std::string_view::npos) c.label = std::string(trim(rest.substr(hash + 1)));
  return c;
}

DefaultTheory parse_theory(std::string_view text, TheoryFormat format, const ParseOptions& options) {
  std::vector<Diagnostic> errors;
  std::vector<Clause> clauses;
  std::map<ClauseId, int> id_lines;
  std::optional<TheoryFormat> fixed;
  if (format != TheoryFormat::automatic) fixed = format;
  ClauseId previous_id = 0;

  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    auto line = text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (is_comment_or_blank(line)) continue;

    auto detected = detect_line_format(line);
    if (!fixed) {
      if (!detected) {
        errors.push_back({SourceSpan{line_no, 1, std::string(trim(line))},
                          "cannot determine theory format (expected cl(...) or a numbered rule)"});
        continue;
      }
      fixed = detected;
    } else if (detected && *detected != *fixed) {
      errors.push_back({SourceSpan{line_no, 1, std::string(trim(line))},
                        "format mismatch at line " + std::to_string(line_no) + ": expected " +
                            std::string(format_name(*fixed)) + " clause"});
      continue;
    }

    try {
      Clause c = *fixed == TheoryFormat::records
                     ? parse_clause_record(line, previous_id + 1, options, line_no)
                     : parse_listing_line(line, options, line_no);
      if (auto [it, inserted] = id_lines.emplace(c.id, line_no); !inserted) {
        errors.push_back({SourceSpan{line_no, 1, std::string(trim(line))},
                          "duplicate clause id " + std::to_string(c.id) + " (first used at line " +
                              std::to_string(it->second) + ")"});
        continue;
      }
      previous_id = c.id;
      clauses.push_back(std::move(c));
    } catch (const ParseError& e) {
      errors.insert(errors.end(), e.diagnostics().begin(), e.diagnostics().end());
    }
  }
  if (!errors.empty()) throw ParseError(std::move(errors));
  return build_theory(std::move(clauses));
}

std::string serialize_clause(const Clause& c, TheoryFormat format, ClauseId previous_id) {
  std::string out;
  if (format == TheoryFormat::records) {
    out += "cl(";
    if (c.id != previous_id + 1) out += std::to_string(c.id) + ",";
    out += quote_label(c.label);
    out += ",";
    out += kind_token(c.kind);
    out += ",[";
    for (std::size_t i = 0; i < c.prerequisites.size(); ++i) {
      if (i) out += ',';
      out += c.prerequisites[i].to_string();
    }
    out += "],";
    out += c.consequent.to_string();
    out += ",";
    out += weight_list(c.weight);
    out += ").";
    return out;
  }
  out += std::to_string(c.id);
  out += " p=" + c.weight.primary.to_string() + "," + c.weight.secondary.to_string() + " ";
  out += kind_token(c.kind);
  out += " : ";
  for (const auto& p : c.prerequisites) out += p.to_string() + ", ";
  out += "-> " + c.consequent.to_string();
  if (!c.label.empty()) out += " # " + c.label;
  return out;
}

std::string serialize_theory(const DefaultTheory& t, TheoryFormat format) {
  if (format == TheoryFormat::automatic) format = TheoryFormat::listing;
  std::string out;
  ClauseId previous = 0;
  for (const auto& c : t.clauses()) {
    out += serialize_clause(c, format, previous);
    out += '\n';
    previous = c.id;
  }
  return out;
}

TheoryFormat parse_format_name(std::string_view name) {
  if (name == "records") return TheoryFormat::records;
  if (name == "listing") return TheoryFormat::listing;
  if (name == "auto") return TheoryFormat::automatic;
  throw std::invalid_argument("unknown theory format '" + std::string(name) + "'");
}

}  // namespace deflogic
