#pragma once

#include <compare>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace deflogic {

enum class Sign : unsigned char { positive, negative };

// A signed ground atom. "pilot(-motor)" is a positive literal whose single
// argument token is "-motor"; "-pilot(motor)" is the negative literal.
struct Literal {
  std::string predicate;
  std::vector<std::string> args;
  Sign sign = Sign::positive;

  // Validates the predicate and argument tokens; throws std::invalid_argument.
  static Literal make(std::string predicate, std::vector<std::string> args = {},
                      Sign sign = Sign::positive);

  bool negative() const { return sign == Sign::negative; }
  Literal positive_form() const;
  std::string to_string() const;

  friend bool operator==(const Literal&, const Literal&) = default;
  // Canonical order: sign, then predicate, then arguments.
  friend std::strong_ordering operator<=>(const Literal& a, const Literal& b);
};

Literal complement(const Literal& l);

bool is_valid_predicate(std::string_view token);
bool is_valid_argument(std::string_view token);

// Ordered by Literal's canonical order, so iteration and serialization are
// deterministic.
using LiteralSet = std::set<Literal>;

bool is_consistent(const LiteralSet& s);

// Smallest positive literal whose complement is also in s, if any.
const Literal* find_complementary_pair(const LiteralSet& s);

// "a, b, -c" in canonical order.
std::string to_string(const LiteralSet& s);

}  // namespace deflogic
