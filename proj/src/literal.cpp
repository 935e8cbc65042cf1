#include "deflogic/literal.hpp"

#include <algorithm>
#include <stdexcept>

namespace deflogic {

namespace {

bool is_word_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

bool is_word(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), is_word_char);
}

}  // namespace

bool is_valid_predicate(std::string_view token) { return is_word(token); }

bool is_valid_argument(std::string_view token) {
  if (!token.empty() && token.front() == '-') token.remove_prefix(1);
  return is_word(token);
}

Literal Literal::make(std::string predicate, std::vector<std::string> args, Sign sign) {
  if (!is_valid_predicate(predicate))
    throw std::invalid_argument("invalid predicate token '" + predicate + "'");
  for (const auto& a : args)
    if (!is_valid_argument(a)) throw std::invalid_argument("invalid argument token '" + a + "'");
  return Literal{std::move(predicate), std::move(args), sign};
}

Literal Literal::positive_form() const { return Literal{predicate, args, Sign::positive}; }

std::string Literal::to_string() const {
  std::string out;
  if (negative()) out += '-';
  out += predicate;
  if (!args.empty()) {
    out += '(';
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (i) out += ',';
      out += args[i];
    }
    out += ')';
  }
  return out;
}

std::strong_ordering operator<=>(const Literal& a, const Literal& b) {
  if (auto c = a.sign <=> b.sign; c != 0) return c;
  if (auto c = a.predicate <=> b.predicate; c != 0) return c;
  return a.args <=> b.args;
}

Literal complement(const Literal& l) {
  Literal out = l;
  out.sign = l.negative() ? Sign::positive : Sign::negative;
  return out;
}

const Literal* find_complementary_pair(const LiteralSet& s) {
  // Positives sort first, so the first hit is the smallest positive literal.
  for (const auto& l : s) {
    if (l.negative()) break;
    if (s.contains(complement(l))) return &l;
  }
  return nullptr;
}

bool is_consistent(const LiteralSet& s) { return find_complementary_pair(s) == nullptr; }

std::string to_string(const LiteralSet& s) {
  std::string out;
  for (const auto& l : s) {
    if (!out.empty()) out += ", ";
    out += l.to_string();
  }
  return out;
}

}  // namespace deflogic
