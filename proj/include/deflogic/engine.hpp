#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "deflogic/literal.hpp"
#include "deflogic/theory.hpp"

namespace deflogic {

// One inference is one prerequisite membership test or one complement
// lookup, whether during default selection or during closure.
struct RunStats {
  std::uint64_t inferences = 0;
  double elapsed_seconds = 0.0;

  double lips() const { return elapsed_seconds > 0.0 ? inferences / elapsed_seconds : 0.0; }

  RunStats& operator+=(const RunStats& o) {
    inferences += o.inferences;
    elapsed_seconds += o.elapsed_seconds;
    return *this;
  }
  friend bool operator==(const RunStats&, const RunStats&) = default;
};

struct Extension {
  LiteralSet literals;
  // Lexicographically smallest application order that reaches `literals`.
  std::vector<ClauseId> generating_defaults;
  // E_0 ⊆ E_1 ⊆ ... as rebuilt by the fixed-point check; the last entry
  // equals `literals`.
  std::vector<LiteralSet> layer_trace;
};

struct EnumerationResult {
  // Sorted by generating_defaults, then by literal set.
  std::vector<Extension> extensions;
  RunStats stats;
};

// The hard knowledge W derives both a literal and its complement.
class InconsistentKnowledge : public std::runtime_error {
 public:
  InconsistentKnowledge(Literal positive, Literal negative);
  const Literal& positive() const { return positive_; }
  const Literal& negative() const { return negative_; }

 private:
  Literal positive_;
  Literal negative_;
};

class OracleBoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Defaults not in `used` whose prerequisites hold in `e`, whose consequent is
// not yet in `e`, and whose consequent's complement is not in `e`. Ordered
// by descending primary weight, then ascending id. `e` should be closed
// under the hard rules.
std::vector<Clause> applicable_defaults(const LiteralSet& e, const DefaultTheory& t,
                                        const std::set<ClauseId>& used = {});

// Every extension of the normal theory `t`, found by depth-first search over
// default application orders with backtracking. Throws InconsistentKnowledge
// when closure(W) is inconsistent.
EnumerationResult compute_extensions(const DefaultTheory& t);

// Rebuilds E_0 = closure(W), E_{i+1} = closure(E_i ∪ {C | A:C/C, A ⊆ E_i,
// ¬C ∉ candidate}) and tests whether the limit is exactly `candidate`.
bool check_extension(const LiteralSet& candidate, const DefaultTheory& t);

// Reiter's generating defaults of `e`: every default whose prerequisites
// hold in `e` and whose consequent's complement does not, ascending by id.
// Unlike Extension::generating_defaults this includes defaults whose
// consequent was already derived by other means.
std::vector<ClauseId> supporting_defaults(const LiteralSet& e, const DefaultTheory& t);

// The layers of the check above, E_0 first, limit last.
std::vector<LiteralSet> extension_layers(const LiteralSet& candidate, const DefaultTheory& t);

// 20, or DEFAULTS_ENGINE_ORACLE_BOUND when set to a positive integer.
std::size_t default_oracle_bound();

// Brute force over every subset of D. Shares nothing with the search in
// compute_extensions except closure() and check_extension(). Throws
// OracleBoundExceeded when |D| > bound.
std::vector<LiteralSet> oracle_extensions(const DefaultTheory& t,
                                          std::size_t bound = default_oracle_bound());

}  // namespace deflogic
