#include <doctest.h>

#include <set>

#include "mitlplan/mitl/parser.hpp"
#include "mitlplan/product/global.hpp"
#include "mitlplan/product/team.hpp"
#include "mitlplan/search/problem.hpp"
#include "mitlplan/tba/membership.hpp"
#include "mitlplan/tba/translate.hpp"
#include "support/instances.hpp"

using namespace mitlplan;
using namespace mitlplan::product;
using tba::ClockConstraint;
using tba::TimedBuchiAutomaton;

namespace {

const std::string fixtures = MITLPLAN_FIXTURE_DIR;

wts::WeightedTransitionSystem single_state(const AtomSet& label, Rational w = 1) {
  return wts::WeightedTransitionSystem("S", {"only"}, {0}, {{0, 0, w}}, label, {label});
}

// Chain a -> b (weight w1) plus b -> b (weight w2), no labels.
wts::WeightedTransitionSystem chain(const std::string& name, Rational w1, Rational w2) {
  return wts::WeightedTransitionSystem(name, {"a", "b"}, {0}, {{0, 1, w1}, {1, 1, w2}}, AtomSet{}, {});
}

// Explores everything reachable; returns the number of states seen.
template <typename G>
std::size_t explore(G& g) {
  std::set<std::size_t> seen;
  std::vector<std::size_t> todo = g.initial_states();
  while (!todo.empty()) {
    const std::size_t s = todo.back();
    todo.pop_back();
    if (!seen.insert(s).second)
      continue;
    for (const auto& e : g.successors(s))
      todo.push_back(e.target);
  }
  return seen.size();
}

} // namespace

TEST_CASE("local product with a universal automaton pairs every compatible state") {
  LocalProduct lp(single_state(AtomSet{"p"}), tba::universal_automaton(AtomSet{"p"}));
  REQUIRE(lp.initial_states().size() == 1);
  CHECK(explore(lp) == 1);
  const auto& st = lp.state(lp.initial_states()[0]);
  CHECK(st.region == 0);
  CHECK(lp.automaton().locations()[st.location].label == AtomSet{"p"});
  CHECK(lp.accepting(lp.initial_states()[0]));
}

TEST_CASE("local guard is read before the move") {
  // One clock, guard x <= 2 on the only edge, never reset; the system move
  // takes 3. The first move starts at x = 0 and is allowed; the clock then
  // saturates above the largest constant and the guard blocks forever.
  const std::vector<std::string> clocks{"x"};
  TimedBuchiAutomaton a(AtomSet{}, clocks, {{"s", AtomSet{}, ClockConstraint::truth(), true, true}},
                        {{0, 0, tba::parse_constraint("x <= 2", clocks), {}}});
  LocalProduct lp(single_state(AtomSet{}, 3), a);
  const auto init = lp.initial_states();
  REQUIRE(init.size() == 1);
  const auto& first = lp.successors(init[0]);
  REQUIRE(first.size() == 1);
  CHECK(lp.state(first[0].target).clocks[0].is_infinite());
  CHECK(lp.successors(first[0].target).empty());
  CHECK(explore(lp) == 2);
}

TEST_CASE("local product rejects automata over foreign atoms") {
  CHECK_THROWS_AS(LocalProduct(single_state(AtomSet{"p"}), tba::universal_automaton(AtomSet{"q"})), ProductError);
}

TEST_CASE("local product of the first example agent has an accepting lasso") {
  const auto model = wts::load_model(fixtures + "/example1.json");
  const auto f = mitl::parse_formula("G F[<=10] green");
  LocalProduct lp(model.agents[0].system, tba::translate_mitl(f));
  const auto r = search::find_accepting_lasso(lp);
  REQUIRE(r.verdict == search::Emptiness::NonEmpty);
  // Every visit of the cycle passes the green region within 10 time units.
  Rational period(0);
  bool green = false;
  for (std::size_t i = 0; i < r.lasso->cycle.size(); ++i) {
    period = period + r.lasso->cycle_weights[i];
    green = green || lp.state(r.lasso->cycle[i]).region == model.agents[0].system.find_state("pi1");
  }
  CHECK(green);
  CHECK(period <= Rational(10));
}

TEST_CASE("team product with one agent mirrors the local product") {
  const auto model = wts::load_model(fixtures + "/example1.json");
  LocalProduct lp(model.agents[0].system, tba::translate_mitl(mitl::parse_formula("G F[<=10] green")));
  LocalProduct lp2(model.agents[0].system, tba::translate_mitl(mitl::parse_formula("G F[<=10] green")));
  TeamProduct team({&lp2});
  CHECK(explore(team) == explore(lp));
  for (std::size_t id = 0; id < team.stats().states; ++id) {
    const auto& s = team.state(id);
    CHECK(s.turn == 0);
    CHECK(team.arrived(id, 0));
    CHECK(team.accepting(id) == lp2.accepting(s.members[0].local));
  }
}

TEST_CASE("team step advances by the smallest remaining duration") {
  LocalProduct l1(chain("A", 1, 1), tba::universal_automaton(AtomSet{}));
  LocalProduct l2(chain("B", 2, 2), tba::universal_automaton(AtomSet{}));
  TeamProduct team({&l1, &l2});
  const auto init = team.initial_states();
  REQUIRE(init.size() == 1);
  const auto& edges = team.successors(init[0]);
  REQUIRE(edges.size() == 1);
  CHECK(edges[0].weight == Rational(1));
  const auto& s = team.state(edges[0].target);
  CHECK(team.arrived(edges[0].target, 0));
  CHECK_FALSE(team.arrived(edges[0].target, 1));
  CHECK(s.members[0].offset == Rational(0));
  CHECK(s.members[1].offset == Rational(1));
  CHECK(l1.state(s.members[0].local).region == 1);
  CHECK(l2.state(s.members[1].local).region == 0); // still on its way
}

TEST_CASE("tied arrivals complete in one team step") {
  LocalProduct l1(chain("A", 2, 2), tba::universal_automaton(AtomSet{}));
  LocalProduct l2(chain("B", 2, 2), tba::universal_automaton(AtomSet{}));
  TeamProduct team({&l1, &l2});
  const auto& edges = team.successors(team.initial_states()[0]);
  REQUIRE(edges.size() == 1);
  CHECK(edges[0].weight == Rational(2));
  const auto& s = team.state(edges[0].target);
  CHECK(team.arrived(edges[0].target, 0));
  CHECK(team.arrived(edges[0].target, 1));
  CHECK(s.members[0].offset == Rational(0));
  CHECK(s.members[1].offset == Rational(0));
}

TEST_CASE("turn passes on only from an accepting local state") {
  // Agent A accepts only in region b; agent B accepts everywhere.
  const std::vector<std::string> none;
  auto at_b = [] {
    wts::WeightedTransitionSystem s("A", {"a", "b"}, {0}, {{0, 1, 1}, {1, 1, 1}}, AtomSet{"atb"},
                                    {AtomSet{}, AtomSet{"atb"}});
    return s;
  };
  LocalProduct l1(at_b(), tba::translate_mitl(mitl::parse_formula("G F atb")));
  LocalProduct l2(chain("B", 1, 1), tba::universal_automaton(AtomSet{}));
  TeamProduct team({&l1, &l2});
  const std::size_t s0 = team.initial_states()[0];
  CHECK(team.state(s0).turn == 0);
  const std::size_t s1 = team.successors(s0)[0].target;
  const std::size_t s2 = team.successors(s1)[0].target;
  // Turn moves only after agent A has been seen in an accepting state.
  CHECK(team.state(s1).turn == (l1.accepting(team.state(s0).members[0].local) ? 1u : 0u));
  CHECK(team.state(s2).turn == (l1.accepting(team.state(s1).members[0].local) ? 1u : 0u));
  const auto r = search::find_accepting_lasso(team);
  CHECK(r.verdict == search::Emptiness::NonEmpty);
}

TEST_CASE("global product with a universal team automaton keeps the team verdict") {
  const auto model = wts::load_model(fixtures + "/example1.json");
  for (const char* phi : {"G F[<=10] green", "G F[<=1] green"}) {
    LocalProduct a(model.agents[0].system, tba::translate_mitl(mitl::parse_formula(phi)));
    LocalProduct b(model.agents[1].system, tba::universal_automaton(AtomSet{}));
    TeamProduct team({&a, &b});
    const auto team_verdict = search::find_accepting_lasso(team).verdict;
    LocalProduct a2(model.agents[0].system, tba::translate_mitl(mitl::parse_formula(phi)));
    LocalProduct b2(model.agents[1].system, tba::universal_automaton(AtomSet{}));
    TeamProduct team2({&a2, &b2});
    GlobalProduct global(team2, tba::translate_mitl(mitl::parse_formula("F true")));
    CHECK(search::find_accepting_lasso(global).verdict == team_verdict);
  }
}

TEST_CASE("team automaton over atoms nobody owns is rejected") {
  LocalProduct a(single_state(AtomSet{"p"}), tba::universal_automaton(AtomSet{}));
  TeamProduct team({&a});
  CHECK_THROWS_AS(GlobalProduct(team, tba::universal_automaton(AtomSet{"zzz"})), ProductError);
}

TEST_CASE("unreachable team deadline makes the product empty") {
  // The only agent needs 3 time units to reach `goal`; the team wants it within 2.
  wts::WeightedTransitionSystem s("A", {"a", "b"}, {0}, {{0, 1, 3}, {1, 1, 1}}, AtomSet{"goal"},
                                  {AtomSet{}, AtomSet{"goal"}});
  LocalProduct a(s, tba::universal_automaton(AtomSet{}));
  TeamProduct team({&a});
  GlobalProduct global(team, tba::translate_mitl(mitl::parse_formula("F[<=2] goal")));
  CHECK(search::find_accepting_lasso(global).verdict == search::Emptiness::Empty);
}

TEST_CASE("team path weights add up to the collective run stamps") {
  const auto model = wts::load_model(fixtures + "/sec5.json");
  const auto problem = search::problem_from_model(model);
  const auto r = search::plan(problem);
  REQUIRE(r.status == search::PlanStatus::Success);
  // The collective run recomputed from the projected runs visits exactly
  // the stamps produced by the product path (sorted union of arrivals).
  const auto& b = *r.bundle;
  std::set<Rational> arrivals;
  const Rational horizon = b.collective.states.time_at(40);
  for (const auto& run : b.runs)
    for (std::size_t i = 0; run.time_at(i) <= horizon; ++i)
      arrivals.insert(run.time_at(i));
  std::size_t i = 0;
  for (const Rational& t : arrivals)
    CHECK(b.collective.states.time_at(i++) == t);
}

TEST_CASE("rebuilding a product gives identical counts") {
  const auto model = wts::load_model(fixtures + "/sec5.json");
  const auto problem = search::problem_from_model(model);
  const auto r1 = search::plan(problem);
  const auto r2 = search::plan(problem);
  CHECK(r1.stats.global.states == r2.stats.global.states);
  CHECK(r1.stats.global.edges == r2.stats.global.edges);
  CHECK(r1.stats.team.states == r2.stats.team.states);
  CHECK(r1.stats.team.edges == r2.stats.team.edges);
  CHECK(r1.stats.states_visited == r2.stats.states_visited);
  REQUIRE(r1.bundle.has_value());
  CHECK(r1.bundle->runs == r2.bundle->runs);
}

TEST_CASE("local lassos project to accepted runs and satisfying runs lift") {
  // Both directions on small random systems: the product has an accepting
  // lasso iff some short lasso run of the system satisfies the formula.
  testing::Rng rng(99);
  int agree = 0, sat = 0;
  for (int i = 0; i < 150; ++i) {
    const auto sys = testing::random_small_system(rng, "S", "a", 4);
    const auto spec = testing::random_spec(rng, AtomSet{"a"});
    if (!spec.formula)
      continue;
    LocalProduct lp(sys, tba::translate_mitl(*spec.formula));
    const auto r = search::find_accepting_lasso(lp);
    bool brute = false;
    for (const auto& run : testing::enumerate_lassos(sys, 5))
      if (mitl::satisfies(wts::timed_word_of(sys, run), *spec.formula)) {
        brute = true;
        break;
      }
    if (r.verdict == search::Emptiness::NonEmpty) {
      ++sat;
      // Project: region sequence with cumulative stamps.
      const auto& l = *r.lasso;
      std::vector<Stamped<wts::StateId>> prefix, cycle;
      Rational t(0);
      for (std::size_t k = 0; k < l.prefix.size(); ++k) {
        prefix.push_back({lp.state(l.prefix[k]).region, t});
        t = t + l.prefix_weights[k];
      }
      const Rational start = t;
      for (std::size_t k = 0; k < l.cycle.size(); ++k) {
        cycle.push_back({lp.state(l.cycle[k]).region, t});
        t = t + l.cycle_weights[k];
      }
      const wts::TimedRun run(prefix, cycle, t - start);
      CHECK_NOTHROW(wts::validate_run(sys, run));
      const auto w = wts::timed_word_of(sys, run);
      CHECK(mitl::satisfies(w, *spec.formula));
      CHECK(tba::accepts_lasso(lp.automaton(), w));
      if (!brute)
        CHECK(run.canonical().prefix_length() + run.canonical().cycle_length() > 5);
    } else {
      CHECK_FALSE(brute);
    }
    ++agree;
  }
  CHECK(agree > 80);
  CHECK(sat > 20);
  CHECK(sat < agree - 10);
}
