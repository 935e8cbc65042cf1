#include "deflogic/theory.hpp"

#include <algorithm>
#include <unordered_map>

namespace deflogic {

const Clause* DefaultTheory::find(ClauseId id) const {
  auto it = std::find_if(clauses_.begin(), clauses_.end(),
                         [id](const Clause& c) { return c.id == id; });
  return it == clauses_.end() ? nullptr : &*it;
}

ClauseId DefaultTheory::max_id() const {
  ClauseId m = 0;
  for (const auto& c : clauses_) m = std::max(m, c.id);
  return m;
}

LiteralSet DefaultTheory::fact_literals() const {
  LiteralSet out;
  for (const auto& f : facts_) out.insert(f.consequent);
  return out;
}

DefaultTheory build_theory(std::vector<Clause> clauses) {
  std::unordered_map<ClauseId, std::size_t> seen;
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    auto [it, inserted] = seen.emplace(clauses[i].id, i);
    if (!inserted) {
      const auto& first = clauses[it->second];
      throw TheoryError("duplicate clause id " + std::to_string(clauses[i].id) + ": '" +
                        first.consequent.to_string() + "' (clause " +
                        std::to_string(it->second + 1) + ") and '" +
                        clauses[i].consequent.to_string() + "' (clause " + std::to_string(i + 1) +
                        ")");
    }
  }

  DefaultTheory t;
  for (const auto& c : clauses) {
    if (c.is_default())
      t.defaults_.push_back(c);
    else if (c.is_fact())
      t.facts_.push_back(c);
    else
      t.hard_rules_.push_back(c);
  }
  t.clauses_ = std::move(clauses);
  return t;
}

LiteralSet closure(const LiteralSet& base, std::span<const Clause> rules) {
  for (const auto& r : rules)
    if (r.is_default()) throw std::invalid_argument("closure over a default clause");

  LiteralSet out = base;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& r : rules) {
      if (out.contains(r.consequent)) continue;
      bool fires = std::all_of(r.prerequisites.begin(), r.prerequisites.end(),
                               [&](const Literal& p) { return out.contains(p); });
      if (fires) {
        out.insert(r.consequent);
        changed = true;
      }
    }
  }
  return out;
}

LiteralSet base_closure(const DefaultTheory& t) {
  return closure(t.fact_literals(), t.hard_rules());
}

}  // namespace deflogic
