#pragma once

// Random ground theories and literal sets for property tests.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "deflogic/literal.hpp"
#include "deflogic/theory.hpp"

namespace gen {

using namespace deflogic;

inline Literal atom_literal(int atom, bool negative) {
  return Literal{"p" + std::to_string(atom), {}, negative ? Sign::negative : Sign::positive};
}

inline Literal random_literal(std::mt19937& rng, int atoms) {
  std::uniform_int_distribution<int> a(0, atoms - 1);
  std::bernoulli_distribution neg(0.35);
  return atom_literal(a(rng), neg(rng));
}

inline std::vector<Literal> random_literals(std::mt19937& rng, int atoms, int max_count) {
  std::uniform_int_distribution<int> n(0, max_count);
  std::vector<Literal> out;
  for (int i = n(rng); i > 0; --i) out.push_back(random_literal(rng, atoms));
  return out;
}

inline Clause make_clause(ClauseId id, ClauseKind kind, std::vector<Literal> pre, Literal head) {
  Clause c;
  c.id = id;
  c.kind = kind;
  c.prerequisites = std::move(pre);
  c.consequent = std::move(head);
  return c;
}

inline std::vector<Clause> random_hard_rules(std::mt19937& rng, int atoms, int count) {
  std::vector<Clause> out;
  for (int i = 0; i < count; ++i) {
    auto pre = random_literals(rng, atoms, 2);
    if (pre.empty()) pre.push_back(random_literal(rng, atoms));
    out.push_back(make_clause(0, ClauseKind::hard, std::move(pre), random_literal(rng, atoms)));
  }
  return out;
}

struct TheoryShape {
  int max_atoms = 8;
  int max_defaults = 10;
  int max_hard_rules = 6;
  int max_facts = 3;
  // Hard rules as single-premise implications emitted together with their
  // contrapositive, no literal implying its own complement. Forward chaining
  // is then complete enough for extensions to exist and be consistent.
  bool contrapositive_closed = true;
};

inline bool self_refuting(const std::vector<Clause>& rules, int atoms) {
  for (int a = 0; a < atoms; ++a)
    for (bool neg : {false, true}) {
      Literal l = atom_literal(a, neg);
      if (closure({l}, rules).contains(complement(l))) return true;
    }
  return false;
}

// Draws until closure(W) is consistent (and, for contrapositive-closed
// shapes, no literal refutes itself).
inline DefaultTheory random_theory(std::mt19937& rng, const TheoryShape& shape = {}) {
  std::uniform_int_distribution<int> atoms_d(2, shape.max_atoms);
  while (true) {
    const int atoms = atoms_d(rng);
    std::vector<Clause> clauses;
    ClauseId id = 0;

    std::uniform_int_distribution<int> nf(0, shape.max_facts);
    for (int i = nf(rng); i > 0; --i)
      clauses.push_back(make_clause(++id, ClauseKind::hard, {}, random_literal(rng, atoms)));

    std::vector<Clause> rules;
    if (shape.contrapositive_closed) {
      std::uniform_int_distribution<int> nr(0, shape.max_hard_rules / 2);
      for (int i = nr(rng); i > 0; --i) {
        Literal a = random_literal(rng, atoms), b = random_literal(rng, atoms);
        if (a.positive_form() == b.positive_form()) continue;
        rules.push_back(make_clause(0, ClauseKind::hard, {a}, b));
        rules.push_back(make_clause(0, ClauseKind::hard, {complement(b)}, complement(a)));
      }
      if (self_refuting(rules, atoms)) continue;
    } else {
      std::uniform_int_distribution<int> nr(0, shape.max_hard_rules);
      rules = random_hard_rules(rng, atoms, nr(rng));
    }
    for (auto& r : rules) {
      r.id = ++id;
      clauses.push_back(r);
    }

    std::uniform_int_distribution<int> nd(0, shape.max_defaults);
    for (int i = nd(rng); i > 0; --i) {
      auto pre = random_literals(rng, atoms, 2);
      clauses.push_back(make_clause(++id, ClauseKind::default_rule, std::move(pre), random_literal(rng, atoms)));
    }

    DefaultTheory t = build_theory(std::move(clauses));
    if (is_consistent(base_closure(t))) return t;
  }
}

// Same clauses with the defaults in a shuffled order.
inline DefaultTheory shuffle_defaults(const DefaultTheory& t, std::mt19937& rng) {
  std::vector<Clause> defaults = t.defaults();
  std::shuffle(defaults.begin(), defaults.end(), rng);
  std::vector<Clause> clauses = t.facts();
  clauses.insert(clauses.end(), t.hard_rules().begin(), t.hard_rules().end());
  clauses.insert(clauses.end(), defaults.begin(), defaults.end());
  return build_theory(std::move(clauses));
}

inline DefaultTheory with_clause(const DefaultTheory& t, Clause c) {
  std::vector<Clause> clauses = t.clauses();
  c.id = t.max_id() + 1;
  clauses.push_back(std::move(c));
  return build_theory(std::move(clauses));
}

}  // namespace gen
