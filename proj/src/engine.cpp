#include "deflogic/engine.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <map>
#include <string>
#include <unordered_set>

namespace deflogic {

InconsistentKnowledge::InconsistentKnowledge(Literal positive, Literal negative)
    : std::runtime_error("inconsistent hard knowledge: both " + positive.to_string() + " and " +
                         negative.to_string() + " are derived"),
      positive_(std::move(positive)),
      negative_(std::move(negative)) {}

namespace {

bool selection_before(const Clause& a, const Clause& b) {
  if (a.weight.primary != b.weight.primary) return a.weight.primary > b.weight.primary;
  return a.id < b.id;
}

LiteralSet checked_base(const DefaultTheory& t) {
  LiteralSet base = base_closure(t);
  if (const Literal* p = find_complementary_pair(base)) throw InconsistentKnowledge(*p, complement(*p));
  return base;
}

bool holds(const std::vector<Literal>& prereqs, const LiteralSet& e) {
  return std::all_of(prereqs.begin(), prereqs.end(), [&](const Literal& p) { return e.contains(p); });
}

// Literals interned as 2 * atom + (negative ? 1 : 0), so complement is x ^ 1.
// Working sets are dense bitsets over that index.
using LitIndex = std::uint32_t;

class Bits {
 public:
  explicit Bits(std::size_t n = 0) : words_((n + 63) / 64, 0) {}
  bool test(LitIndex i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(LitIndex i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  const std::vector<std::uint64_t>& words() const { return words_; }
  friend bool operator==(const Bits&, const Bits&) = default;

 private:
  std::vector<std::uint64_t> words_;
};

struct BitsHash {
  std::size_t operator()(const Bits& b) const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (auto w : b.words()) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

struct CompiledRule {
  std::vector<LitIndex> prereqs;
  LitIndex head;
};

struct CompiledDefault {
  ClauseId id;
  std::vector<LitIndex> prereqs;
  LitIndex consequent;
};

class Search {
 public:
  explicit Search(const DefaultTheory& t) {
    for (const auto& c : t.clauses()) {
      for (const auto& p : c.prerequisites) intern(p);
      intern(c.consequent);
    }
    watches_.resize(literals_.size());
    for (const auto& r : t.hard_rules()) {
      CompiledRule cr{lits(r.prerequisites), intern(r.consequent)};
      auto idx = rules_.size();
      for (auto p : cr.prereqs) watches_[p].push_back(idx);
      rules_.push_back(std::move(cr));
    }
    std::vector<Clause> ordered = t.defaults();
    std::stable_sort(ordered.begin(), ordered.end(), selection_before);
    for (const auto& d : ordered) defaults_.push_back({d.id, lits(d.prerequisites), intern(d.consequent)});
    by_id_.resize(defaults_.size());
    for (std::size_t i = 0; i < by_id_.size(); ++i) by_id_[i] = i;
    std::sort(by_id_.begin(), by_id_.end(),
              [&](std::size_t a, std::size_t b) { return defaults_[a].id < defaults_[b].id; });

    root_ = Bits(literals_.size());
    for (const auto& f : t.facts()) add(root_, intern(f.consequent));
  }

  void run() { expand(root_); }

  std::uint64_t inferences() const { return inferences_; }
  const std::vector<Bits>& leaves() const { return leaves_; }

  LiteralSet to_set(const Bits& b) const {
    LiteralSet out;
    for (LitIndex i = 0; i < literals_.size(); ++i)
      if (b.test(i)) out.insert(literals_[i]);
    return out;
  }

  // Greedy smallest-id application order; every default applicable at some
  // point stays applicable inside `target`, so greedy is lexicographically
  // minimal.
  std::vector<ClauseId> canonical_order(const Bits& target) const {
    std::vector<ClauseId> seq;
    Bits cur = root_;
    std::uint64_t scratch = 0;
    for (bool progressed = true; progressed;) {
      progressed = false;
      for (auto i : by_id_) {
        const auto& d = defaults_[i];
        if (target.test(d.consequent ^ 1) || cur.test(d.consequent)) continue;
        if (!std::all_of(d.prereqs.begin(), d.prereqs.end(), [&](LitIndex p) { return cur.test(p); }))
          continue;
        close_from(cur, d.consequent, scratch);
        seq.push_back(d.id);
        progressed = true;
        break;
      }
    }
    return seq;
  }

 private:
  LitIndex intern(const Literal& l) {
    auto key = l.positive_form();
    auto [it, inserted] = atoms_.emplace(key, static_cast<LitIndex>(literals_.size() / 2));
    if (inserted) {
      literals_.push_back(key);
      literals_.push_back(complement(key));
    }
    return it->second * 2 + (l.negative() ? 1 : 0);
  }

  std::vector<LitIndex> lits(const std::vector<Literal>& ls) {
    std::vector<LitIndex> out;
    for (const auto& l : ls) out.push_back(intern(l));
    return out;
  }

  // Adds `l` and forward-chains; false if a complementary pair appears.
  bool add(Bits& s, LitIndex l) { return close_from(s, l, inferences_); }

  bool close_from(Bits& s, LitIndex l, std::uint64_t& counter) const {
    if (s.test(l)) return true;
    bool consistent = true;
    std::vector<LitIndex> queue{l};
    s.set(l);
    while (!queue.empty()) {
      LitIndex cur = queue.back();
      queue.pop_back();
      ++counter;
      if (s.test(cur ^ 1)) consistent = false;
      for (auto ri : watches_[cur]) {
        const auto& r = rules_[ri];
        if (s.test(r.head)) continue;
        bool fires = true;
        for (auto p : r.prereqs) {
          ++counter;
          if (!s.test(p)) {
            fires = false;
            break;
          }
        }
        if (fires) {
          s.set(r.head);
          queue.push_back(r.head);
        }
      }
    }
    return consistent;
  }

  bool applicable(const Bits& s, const CompiledDefault& d) {
    ++inferences_;
    if (s.test(d.consequent ^ 1)) return false;
    if (s.test(d.consequent)) return false;
    for (auto p : d.prereqs) {
      ++inferences_;
      if (!s.test(p)) return false;
    }
    return true;
  }

  // Upper bound on every extension containing `s`: close `s` under the hard
  // rules and under every default not already blocked in `s`, ignoring
  // mutual consistency.
  Bits potential(const Bits& s) {
    Bits p = s;
    for (bool grew = true; grew;) {
      grew = false;
      for (const auto& d : defaults_) {
        ++inferences_;
        if (s.test(d.consequent ^ 1) || p.test(d.consequent)) continue;
        bool holds = true;
        for (auto pre : d.prereqs) {
          ++inferences_;
          if (!p.test(pre)) {
            holds = false;
            break;
          }
        }
        if (!holds) continue;
        close_from(p, d.consequent, inferences_);
        grew = true;
      }
    }
    return p;
  }

  // A state is fully determined by its literal set: applied defaults have
  // their consequent in it and are therefore never applicable again.
  void expand(const Bits& s) {
    if (!visited_.insert(s).second) return;
    std::vector<const CompiledDefault*> open;
    for (const auto& d : defaults_)
      if (applicable(s, d)) open.push_back(&d);
    if (open.empty()) {
      leaves_.push_back(s);
      return;
    }

    // An applicable default whose complement is out of reach belongs to every
    // extension below `s`, so it is applied without branching.
    if (open.size() > 1) {
      Bits reach = potential(s);
      for (const auto* d : open) {
        if (reach.test(d->consequent ^ 1)) continue;
        open = {d};
        break;
      }
    }

    for (const auto* d : open) {
      Bits child = s;
      if (add(child, d->consequent)) expand(child);
    }
  }

  std::map<Literal, LitIndex> atoms_;
  std::vector<Literal> literals_;
  std::vector<CompiledRule> rules_;
  std::vector<std::vector<std::size_t>> watches_;
  std::vector<CompiledDefault> defaults_;
  std::vector<std::size_t> by_id_;
  Bits root_;
  std::unordered_set<Bits, BitsHash> visited_;
  std::vector<Bits> leaves_;
  std::uint64_t inferences_ = 0;
};

}  // namespace

std::vector<Clause> applicable_defaults(const LiteralSet& e, const DefaultTheory& t,
                                        const std::set<ClauseId>& used) {
  std::vector<Clause> out;
  for (const auto& d : t.defaults()) {
    if (used.contains(d.id)) continue;
    if (e.contains(complement(d.consequent)) || e.contains(d.consequent)) continue;
    if (holds(d.prerequisites, e)) out.push_back(d);
  }
  std::stable_sort(out.begin(), out.end(), selection_before);
  return out;
}

EnumerationResult compute_extensions(const DefaultTheory& t) {
  auto started = std::chrono::steady_clock::now();
  checked_base(t);

  Search search(t);
  search.run();

  EnumerationResult result;
  for (const auto& leaf : search.leaves()) {
    Extension e;
    e.literals = search.to_set(leaf);
    e.generating_defaults = search.canonical_order(leaf);
    e.layer_trace = extension_layers(e.literals, t);
    result.extensions.push_back(std::move(e));
  }
  std::sort(result.extensions.begin(), result.extensions.end(),
            [](const Extension& a, const Extension& b) {
              if (a.generating_defaults != b.generating_defaults)
                return a.generating_defaults < b.generating_defaults;
              return a.literals < b.literals;
            });
  result.stats.inferences = search.inferences();
  result.stats.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return result;
}

std::vector<LiteralSet> extension_layers(const LiteralSet& candidate, const DefaultTheory& t) {
  std::vector<LiteralSet> layers{base_closure(t)};
  while (true) {
    LiteralSet next = layers.back();
    for (const auto& d : t.defaults())
      if (holds(d.prerequisites, layers.back()) && !candidate.contains(complement(d.consequent)))
        next.insert(d.consequent);
    next = closure(next, t.hard_rules());
    if (next == layers.back()) break;
    layers.push_back(std::move(next));
  }
  return layers;
}

std::vector<ClauseId> supporting_defaults(const LiteralSet& e, const DefaultTheory& t) {
  std::vector<ClauseId> out;
  for (const auto& d : t.defaults())
    if (holds(d.prerequisites, e) && !e.contains(complement(d.consequent))) out.push_back(d.id);
  std::sort(out.begin(), out.end());
  return out;
}

bool check_extension(const LiteralSet& candidate, const DefaultTheory& t) {
  return extension_layers(candidate, t).back() == candidate;
}

std::size_t default_oracle_bound() {
  if (const char* env = std::getenv("DEFAULTS_ENGINE_ORACLE_BOUND")) {
    char* end = nullptr;
    auto v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 20;
}

std::vector<LiteralSet> oracle_extensions(const DefaultTheory& t, std::size_t bound) {
  const auto& defaults = t.defaults();
  if (defaults.size() > bound || defaults.size() >= 63)
    throw OracleBoundExceeded("oracle bound exceeded: " + std::to_string(defaults.size()) +
                              " defaults > bound " + std::to_string(bound) +
                              "; shrink the generated theory");
  LiteralSet base = checked_base(t);

  std::set<LiteralSet> found;
  const std::uint64_t subsets = std::uint64_t{1} << defaults.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    LiteralSet seed = base;
    for (std::size_t i = 0; i < defaults.size(); ++i)
      if (mask >> i & 1) seed.insert(defaults[i].consequent);
    LiteralSet e = closure(seed, t.hard_rules());
    if (!is_consistent(e)) continue;

    // The subset must be exactly the defaults that fire in e.
    std::uint64_t generating = 0;
    for (std::size_t i = 0; i < defaults.size(); ++i)
      if (holds(defaults[i].prerequisites, e) && !e.contains(complement(defaults[i].consequent)))
        generating |= std::uint64_t{1} << i;
    if (generating != mask) continue;
    if (check_extension(e, t)) found.insert(std::move(e));
  }
  return {found.begin(), found.end()};
}

}  // namespace deflogic
