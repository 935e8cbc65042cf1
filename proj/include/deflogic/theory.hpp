#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "deflogic/literal.hpp"
#include "deflogic/rational.hpp"

namespace deflogic {

using ClauseId = std::uint32_t;

enum class ClauseKind : unsigned char { hard, default_rule };

// The rule weighting, printed as "p=<primary>,<secondary>". Only the primary
// component takes part in scoring.
struct Weight {
  Rational primary;
  Rational secondary;
  friend bool operator==(const Weight&, const Weight&) = default;
};

// One normal rule A:C/C (or a hard rule A -> C). There is no separate
// justification: for a default it is the consequent itself.
struct Clause {
  ClauseId id = 0;
  std::string label;
  ClauseKind kind = ClauseKind::hard;
  std::vector<Literal> prerequisites;
  Literal consequent;
  Weight weight;

  bool is_fact() const { return kind == ClauseKind::hard && prerequisites.empty(); }
  bool is_default() const { return kind == ClauseKind::default_rule; }

  friend bool operator==(const Clause&, const Clause&) = default;
};

class TheoryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The pair (D, W). W is facts() plus hard_rules(); D is defaults().
class DefaultTheory {
 public:
  DefaultTheory() = default;

  // All clauses in input order.
  const std::vector<Clause>& clauses() const { return clauses_; }
  const std::vector<Clause>& facts() const { return facts_; }
  const std::vector<Clause>& hard_rules() const { return hard_rules_; }
  const std::vector<Clause>& defaults() const { return defaults_; }

  const Clause* find(ClauseId id) const;
  ClauseId max_id() const;
  bool empty() const { return clauses_.empty(); }

  // Literal set of the hard facts.
  LiteralSet fact_literals() const;

  friend bool operator==(const DefaultTheory& a, const DefaultTheory& b) {
    return a.clauses_ == b.clauses_;
  }

 private:
  friend DefaultTheory build_theory(std::vector<Clause> clauses);

  std::vector<Clause> clauses_;
  std::vector<Clause> facts_;
  std::vector<Clause> hard_rules_;
  std::vector<Clause> defaults_;
};

// Partitions by kind, preserving input order within each partition.
// Throws TheoryError on a duplicate id.
DefaultTheory build_theory(std::vector<Clause> clauses);

// Least fixed point of forward chaining over hard rules. Rules fire only
// forwards; the result may be inconsistent. Throws std::invalid_argument if
// a rule is a default.
LiteralSet closure(const LiteralSet& base, std::span<const Clause> rules);

// closure(facts, hard rules): the E_0 layer of every extension.
LiteralSet base_closure(const DefaultTheory& t);

}  // namespace deflogic
