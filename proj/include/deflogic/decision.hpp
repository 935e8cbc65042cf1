#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>

#include "deflogic/engine.hpp"
#include "deflogic/literal.hpp"
#include "deflogic/parser.hpp"
#include "deflogic/rational.hpp"
#include "deflogic/theory.hpp"

namespace deflogic {

struct Goal {
  std::string name;
  LiteralSet required;
  LiteralSet forbidden;
};

// Throws std::invalid_argument if a literal is both required and forbidden,
// or if the required set contains a complementary pair.
void validate_goal(const Goal& g);

// Lines `require <literal>` / `forbid <literal>`; `#` starts a comment line.
Goal parse_goal(std::string_view text, std::string name = {}, const ParseOptions& options = {});

// Either a finite rational or the excluded sentinel (-inf), which ranks
// below every finite score.
class Score {
 public:
  Score() = default;
  explicit Score(Rational value) : value_(value) {}
  static Score excluded() {
    Score s;
    s.excluded_ = true;
    return s;
  }

  bool is_excluded() const { return excluded_; }
  const Rational& value() const { return value_; }
  // "-inf" or the rational.
  std::string to_string() const;
  static Score parse(std::string_view text);

  friend bool operator==(const Score&, const Score&) = default;
  friend std::strong_ordering operator<=>(const Score& a, const Score& b);

 private:
  Rational value_;
  bool excluded_ = false;
};

struct ScoringOptions {
  // Per satisfied (or missed) required literal; should dominate the sum of
  // rule weights.
  Rational goal_bonus{1000};
};

struct RankedExtension {
  Extension extension;
  Score score;
  std::size_t goal_hits = 0;
  std::size_t goal_misses = 0;

  bool satisfies_goal() const { return goal_misses == 0 && !score.is_excluded(); }
};

// score = Σ primary weight of generating defaults + (hits - misses) * bonus,
// or the excluded sentinel when a forbidden literal is present.
RankedExtension score_extension(const Extension& e, const DefaultTheory& t, const Goal& g,
                                const ScoringOptions& options = {});

std::vector<RankedExtension> rank_extensions(std::span<const Extension> extensions,
                                             const DefaultTheory& t, const Goal& g,
                                             const ScoringOptions& options = {});

// Highest score; ties go to fewer generating defaults, then to the smallest
// canonical serialization. Throws std::invalid_argument on an empty list.
std::size_t select_index(std::span<const RankedExtension> ranked);
const RankedExtension& select_extension(std::span<const RankedExtension> ranked);

}  // namespace deflogic
