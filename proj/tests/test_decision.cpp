#include <random>

#include "deflogic/decision.hpp"
#include "deflogic/harness.hpp"
#include "doctest.h"
#include "support/generators.hpp"

using namespace deflogic;

namespace {

const std::string kScenarios = SCENARIO_DIR;

Literal lit(std::string_view text) { return parse_literal(text); }

Extension ext(std::vector<std::string> literals, std::vector<ClauseId> used) {
  Extension e;
  for (const auto& l : literals) e.literals.insert(lit(l));
  e.generating_defaults = std::move(used);
  return e;
}

DefaultTheory weighted(std::vector<int> weights) {
  std::string text;
  ClauseId id = 0;
  for (int w : weights) {
    ++id;
    text += std::to_string(id) + " p=" + std::to_string(w) + ",0 def : -> q" + std::to_string(id) + "\n";
  }
  return parse_theory(text);
}

DefaultTheory scaled(const DefaultTheory& t, const Rational& k) {
  std::vector<Clause> cs = t.clauses();
  for (auto& c : cs) c.weight.primary = c.weight.primary * k;
  return build_theory(std::move(cs));
}

}  // namespace

TEST_CASE("parse_goal") {
  auto g = parse_goal("# comment\nrequire pilot(motor)\n\nforbid -pilot(motor)\n", "takeoff");
  CHECK(g.name == "takeoff");
  CHECK(g.required == LiteralSet{lit("pilot(motor)")});
  CHECK(g.forbidden == LiteralSet{lit("-pilot(motor)")});
  CHECK_THROWS_AS(parse_goal("want pilot(motor)\n"), ParseError);
  CHECK_THROWS_AS(parse_goal("require pilot(X)\n"), ParseError);
  CHECK_THROWS_AS(parse_goal("require a\nforbid a\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_goal("require a\nrequire -a\n"), std::invalid_argument);
  CHECK_NOTHROW(parse_goal(""));
}

TEST_CASE("Score ordering and text form") {
  CHECK(Score::excluded() < Score(Rational(-1000000)));
  CHECK(Score(Rational(1, 2)) < Score(Rational(1)));
  CHECK(Score::excluded() == Score::excluded());
  CHECK(Score::excluded().to_string() == "-inf");
  CHECK(Score(Rational(7, 2)).to_string() == "7/2");
  CHECK(Score::parse("-inf").is_excluded());
  CHECK(Score::parse("7/2") == Score(Rational(7, 2)));
  CHECK_THROWS_AS(Score::parse("many"), std::invalid_argument);
}

TEST_CASE("score_extension sums weights and goal hits") {
  auto t = weighted({3, 5, 7});
  Goal g;
  g.required = {lit("q1"), lit("q4")};
  auto r = score_extension(ext({"q1", "q2"}, {1, 2}), t, g);
  CHECK(r.goal_hits == 1);
  CHECK(r.goal_misses == 1);
  CHECK(r.score == Score(Rational(8)));
  CHECK_FALSE(r.satisfies_goal());

  ScoringOptions half;
  half.goal_bonus = Rational(1, 2);
  g.required = {lit("q1")};
  CHECK(score_extension(ext({"q1"}, {1}), t, g, half).score == Score(Rational(7, 2)));

  g.forbidden = {lit("q2")};
  auto x = score_extension(ext({"q1", "q2"}, {1, 2}), t, g);
  CHECK(x.score.is_excluded());
  CHECK_FALSE(x.satisfies_goal());
}

TEST_CASE("selection tie-breaks") {
  auto t = weighted({1, 1, 2, 0});
  Goal none;
  // Equal score 2: {3} uses one default, {1,2} two.
  std::vector<Extension> es{ext({"q1", "q2"}, {1, 2}), ext({"q3"}, {3})};
  auto ranked = rank_extensions(es, t, none);
  CHECK(select_index(ranked) == 1);

  // Same score, same count: the smaller serialization wins.
  std::vector<Extension> same{ext({"q2", "q4"}, {2, 4}), ext({"q1", "q4"}, {1, 4})};
  CHECK(select_index(rank_extensions(same, t, none)) == 1);

  CHECK_THROWS_AS(select_index(std::span<const RankedExtension>{}), std::invalid_argument);
}

TEST_CASE("an excluded extension is never chosen over a finite one") {
  auto t = weighted({100, 0});
  Goal g;
  g.forbidden = {lit("q1")};
  std::vector<Extension> es{ext({"q1"}, {1}), ext({"q2"}, {2})};
  CHECK(select_extension(rank_extensions(es, t, g)).extension.literals == LiteralSet{lit("q2")});
}

TEST_CASE("the take-off goal selects the pull, pitch-neutral, motor extension") {
  auto t = inject_facts(load_theory(kScenarios + "/takeoff.listing"),
                        load_facts(kScenarios + "/takeoff.facts").facts);
  auto g = load_goal(kScenarios + "/takeoff.goal");
  auto r = compute_extensions(t);
  auto ranked = rank_extensions(r.extensions, t, g);
  const auto& best = select_extension(ranked);
  CHECK(best.satisfies_goal());
  CHECK(best.goal_hits == 3);
  CHECK(best.extension.generating_defaults == std::vector<ClauseId>{17, 18, 20});
  CHECK(best.extension.literals.contains(lit("pilot(yoke_pull)")));
  CHECK(best.extension.literals.contains(lit("pilot(yoke_pitch_neutral)")));
  CHECK(best.extension.literals.contains(lit("pilot(motor)")));
  std::size_t satisfying = 0;
  for (const auto& x : ranked) satisfying += x.satisfies_goal();
  CHECK(satisfying == 1);
}

TEST_CASE("selection is invariant under positive scaling of weights and bonus") {
  std::mt19937 rng(41);
  for (int i = 0; i < 200; ++i) {
    auto base = gen::random_theory(rng);
    std::vector<Clause> cs = base.clauses();
    std::uniform_int_distribution<int> w(-4, 9);
    for (auto& c : cs) c.weight.primary = Rational(w(rng));
    auto t = build_theory(std::move(cs));
    auto r = compute_extensions(t);
    Goal g;
    for (const auto& l : gen::random_literals(rng, 8, 2)) g.required.insert(l);
    if (find_complementary_pair(g.required)) continue;

    std::uniform_int_distribution<int> kn(1, 9), kd(1, 5);
    Rational k(kn(rng), kd(rng));
    ScoringOptions s1, s2;
    s2.goal_bonus = s1.goal_bonus * k;
    auto a = select_index(rank_extensions(r.extensions, t, g, s1));
    auto b = select_index(rank_extensions(r.extensions, scaled(t, k), g, s2));
    REQUIRE(a == b);
  }
}

TEST_CASE("goal hits dominate rule weights") {
  std::mt19937 rng(42);
  for (int i = 0; i < 200; ++i) {
    auto base = gen::random_theory(rng);
    std::vector<Clause> cs = base.clauses();
    std::uniform_int_distribution<int> w(0, 20);
    for (auto& c : cs) c.weight.primary = Rational(w(rng));
    auto t = build_theory(std::move(cs));
    auto r = compute_extensions(t);
    Goal g;
    for (const auto& l : gen::random_literals(rng, 8, 3)) g.required.insert(l);
    if (find_complementary_pair(g.required)) continue;
    auto ranked = rank_extensions(r.extensions, t, g);
    const auto& best = select_extension(ranked);
    for (const auto& x : ranked) REQUIRE(best.goal_hits >= x.goal_hits);
  }
}
