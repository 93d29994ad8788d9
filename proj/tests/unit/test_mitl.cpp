#include <doctest.h>

#include <functional>
#include <string>

#include "mitlplan/mitl/evaluator.hpp"
#include "mitlplan/mitl/formula.hpp"
#include "mitlplan/mitl/parser.hpp"
#include "support/random.hpp"

using namespace mitlplan;
using namespace mitlplan::mitl;

namespace {

// Literal point-wise semantics, recursing straight over the infinite word.
// Terminates only for formulas whose temporal intervals are all bounded.
bool brute(const LassoTimedWord& w, std::size_t i, const Formula& f) {
  switch (f.op()) {
  case Op::True:
    return true;
  case Op::False:
    return false;
  case Op::Atom:
    return w.value_at(i).contains(f.name());
  case Op::Not:
    return !brute(w, i, f.operand());
  case Op::And:
    return brute(w, i, f.lhs()) && brute(w, i, f.rhs());
  case Op::Or:
    return brute(w, i, f.lhs()) || brute(w, i, f.rhs());
  case Op::Implies:
    return !brute(w, i, f.lhs()) || brute(w, i, f.rhs());
  case Op::Next:
    return brute(w, i + 1, f.operand()) && f.interval().contains(w.time_at(i + 1) - w.time_at(i));
  case Op::Eventually:
  case Op::Always:
  case Op::Until: {
    const Rational upper = *f.interval().upper();
    for (std::size_t j = i; w.time_at(j) - w.time_at(i) <= upper; ++j) {
      const bool in = f.interval().contains(w.time_at(j) - w.time_at(i));
      if (f.op() == Op::Eventually && in && brute(w, j, f.operand()))
        return true;
      if (f.op() == Op::Always && in && !brute(w, j, f.operand()))
        return false;
      if (f.op() == Op::Until) {
        if (in && brute(w, j, f.rhs()))
          return true;
        if (!brute(w, j, f.lhs()))
          return false;
      }
    }
    return f.op() == Op::Always;
  }
  }
  return false;
}

LassoTimedWord word_agent1() {
  return LassoTimedWord(
      {}, {{AtomSet{"green"}, 0}, {AtomSet{}, 1}, {AtomSet{}, Rational(5, 2)}, {AtomSet{}, 3}}, 5);
}

LassoTimedWord word_agent2() {
  return LassoTimedWord({{AtomSet{}, 0}}, {{AtomSet{}, 2}, {AtomSet{"red"}, Rational(5, 2)}},
                        Rational(5, 2));
}

LassoTimedWord word_collective() {
  return LassoTimedWord({{AtomSet{"green"}, 0}, {AtomSet{}, 1}},
                        {{AtomSet{}, 2},
                         {AtomSet{"red"}, Rational(5, 2)},
                         {AtomSet{"red"}, 3},
                         {AtomSet{}, Rational(9, 2)},
                         {AtomSet{"green", "red"}, 5},
                         {AtomSet{}, 6}},
                        5);
}

// The same infinite word with the first cycle moved into the prefix and the
// cycle doubled.
LassoTimedWord rerepresented(const LassoTimedWord& w) {
  auto prefix = w.prefix();
  for (const auto& s : w.cycle())
    prefix.push_back(s);
  std::vector<TimedLetter> cycle;
  for (int rep = 1; rep <= 2; ++rep)
    for (const auto& s : w.cycle())
      cycle.push_back({s.value, s.time + w.period() * Rational(rep)});
  return LassoTimedWord(prefix, cycle, w.period() * 2);
}

} // namespace

TEST_CASE("parse formulas from the examples") {
  auto f = parse_formula("F[<=6] recharge1");
  CHECK(f == Formula::eventually(TimeInterval::up_to(6), Formula::atom("recharge1")));

  auto g = parse_formula("G[0,inf) (red -> X[0,inf) G[<=5] !red)");
  auto expected = Formula::always(
      TimeInterval::unbounded(),
      Formula::implication(
          Formula::atom("red"),
          Formula::next(TimeInterval::unbounded(),
                        Formula::always(TimeInterval::up_to(5), Formula::negation(Formula::atom("red"))))));
  CHECK(g == expected);
  CHECK(parse_formula("G (red -> X G[<=5] !red)") == expected);
  CHECK(parse_formula("p") == Formula::atom("p"));
}

TEST_CASE("parser precedence and associativity") {
  auto a = Formula::atom("a"), b = Formula::atom("b"), c = Formula::atom("c");
  CHECK(parse_formula("a | b & c") == Formula::disjunction(a, Formula::conjunction(b, c)));
  CHECK(parse_formula("a -> b -> c") == Formula::implication(a, Formula::implication(b, c)));
  CHECK(parse_formula("a U b U c") ==
        Formula::until(TimeInterval::unbounded(), a, Formula::until(TimeInterval::unbounded(), b, c)));
  CHECK(parse_formula("a & b U c") == Formula::conjunction(a, Formula::until(TimeInterval::unbounded(), b, c)));
  CHECK(parse_formula("!a U b") == Formula::until(TimeInterval::unbounded(), Formula::negation(a), b));
  CHECK(parse_formula("F (a) & b") == Formula::conjunction(Formula::eventually(TimeInterval::unbounded(), a), b));
}

TEST_CASE("interval syntax") {
  auto iv = [](const char* text) { return parse_formula(std::string("F") + text + " p").interval(); };
  CHECK(iv("[1,2]") == TimeInterval::make(1, true, Rational(2), true));
  CHECK(iv("(1,2]") == TimeInterval::make(1, false, Rational(2), true));
  CHECK(iv("[1,2)") == TimeInterval::make(1, true, Rational(2), false));
  CHECK(iv("(1,2)") == TimeInterval::make(1, false, Rational(2), false));
  CHECK(iv("[3,inf)") == TimeInterval::make(3, true, std::nullopt, false));
  CHECK(iv("[<2.5]") == TimeInterval::make(0, true, Rational(5, 2), false));
  CHECK(iv("[>=7/10]") == TimeInterval::make(Rational(7, 10), true, std::nullopt, false));
}

TEST_CASE("parse errors") {
  auto kind_of = [](const char* text) {
    try {
      parse_formula(text);
    } catch (const ParseError& e) {
      return e.kind();
    }
    FAIL("expected a parse error for " << text);
    return ParseError::Kind::Syntax;
  };
  CHECK(kind_of("F[6,0] p") == ParseError::Kind::InvalidInterval);
  CHECK(kind_of("F[2,2] p") == ParseError::Kind::PunctualInterval);
  CHECK(kind_of("p &") == ParseError::Kind::Syntax);
  CHECK(kind_of("(p") == ParseError::Kind::Syntax);
  CHECK(kind_of("p $ q") == ParseError::Kind::UnknownToken);

  try {
    parse_formula("G (p &\n  ))");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
  }
  try {
    parse_formula("F[6,0] p");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("[6,0]") != std::string::npos);
  }
}

TEST_CASE("printing round-trips through the parser") {
  testing::Rng rng(5);
  const AtomSet atoms{"p", "q", "r"};
  for (int k = 0; k < 500; ++k) {
    auto f = testing::random_formula(rng, atoms, 4, false);
    CHECK_MESSAGE(parse_formula(f.str()) == f, f.str());
  }
  CHECK(parse_formula("F[<=6] recharge1").str() == "F[0,6] recharge1");
}

TEST_CASE("evaluator on small hand-checked words") {
  LassoTimedWord w({{AtomSet{}, 0}, {AtomSet{"p"}, 3}}, {{AtomSet{}, 5}}, 5);
  CHECK(satisfies(w, parse_formula("F[0,4] p")));
  CHECK_FALSE(satisfies(w, parse_formula("F[0,2] p")));
  CHECK_FALSE(satisfies(w, parse_formula("G F p")));
  CHECK(satisfies(w, parse_formula("F G !p")));
  CHECK(satisfies(w, parse_formula("!p U[2,4] p")));
  CHECK_FALSE(satisfies(w, parse_formula("!p U[4,inf) p")));
  CHECK(satisfies(w, parse_formula("X[3,3.5] p")));
  CHECK_FALSE(satisfies(w, parse_formula("X[0,3) p")));
  CHECK(satisfies(w, parse_formula("true")));
  CHECK(evaluate_at(w, 7, parse_formula("true")));
  CHECK_FALSE(satisfies(w, parse_formula("p")));
}

TEST_CASE("example words: individual satisfaction does not transfer to the team") {
  const auto w1 = word_agent1();
  const auto w2 = word_agent2();
  const auto wg = word_collective();

  CHECK(satisfies(w1, parse_formula("G F[<=10] green")));
  const auto phi2 = parse_formula("G (red -> X G[<=5] !red)");
  CHECK_FALSE(satisfies(w2, phi2));
  const auto phi2_short = parse_formula("G (red -> X G[<=2] !red)");
  CHECK_FALSE(satisfies(wg, phi2_short));
  auto v = first_violation(wg, phi2_short);
  REQUIRE(v.has_value());
  CHECK(wg.time_at(*v) == Rational(5, 2));
  CHECK(wg.time_at(*v + 1) == Rational(3));
  CHECK(satisfies(wg, parse_formula("G F[<=5] (green & red)")));
  CHECK_FALSE(first_violation(wg, parse_formula("G F[<=5] (green & red)")).has_value());
}

TEST_CASE("evaluator matches the brute-force semantics on bounded formulas") {
  testing::Rng rng(2024);
  const AtomSet atoms{"p", "q"};
  int mismatches = 0;
  for (int k = 0; k < 600; ++k) {
    const auto w = testing::random_word(rng, atoms);
    const auto f = testing::random_formula(rng, atoms, 3, true);
    const auto table = truth_table(w, f);
    const std::size_t span = w.prefix_length() + 2 * w.cycle_length() + 2;
    for (std::size_t i = 0; i < span; ++i) {
      if (table.at(i) != brute(w, i, f)) {
        ++mismatches;
        MESSAGE("mismatch at " << i << " for " << f.str());
      }
    }
  }
  CHECK(mismatches == 0);
}

TEST_CASE("evaluator does not depend on how the lasso is written down") {
  testing::Rng rng(99);
  const AtomSet atoms{"p", "q"};
  for (int k = 0; k < 600; ++k) {
    const auto w = testing::random_word(rng, atoms);
    const auto other = rerepresented(w);
    const auto f = testing::random_formula(rng, atoms, 3, false);
    const auto a = truth_table(w, f);
    const auto b = truth_table(other, f);
    for (std::size_t i = 0; i < w.prefix_length() + 3 * w.cycle_length(); ++i)
      CHECK_MESSAGE(a.at(i) == b.at(i), f.str() << " at " << i);
  }
}

TEST_CASE("unbounded operators agree with a large finite bound on short words") {
  // Every occurrence within two periods after the stable point is reached
  // well before the bound, so F[a,inf) and F[a,B] coincide for large B.
  testing::Rng rng(17);
  const AtomSet atoms{"p", "q"};
  for (int k = 0; k < 400; ++k) {
    const auto w = testing::random_word(rng, atoms, 3, 3);
    const auto beta = testing::random_propositional(rng, atoms, 2);
    const Rational lo(testing::uniform(rng, 0, 4));
    const auto unb = TimeInterval::make(lo, true, std::nullopt, false);
    const auto big = TimeInterval::make(lo, true, Rational(1000), true);
    for (std::size_t i = 0; i < 6; ++i) {
      CHECK(evaluate_at(w, i, Formula::eventually(unb, beta)) ==
            brute(w, i, Formula::eventually(big, beta)));
      CHECK(evaluate_at(w, i, Formula::always(unb, beta)) == brute(w, i, Formula::always(big, beta)));
      CHECK(evaluate_at(w, i, Formula::until(unb, beta, Formula::atom("q"))) ==
            brute(w, i, Formula::until(big, beta, Formula::atom("q"))));
    }
  }
}

TEST_CASE("negation and always/eventually duality") {
  testing::Rng rng(41);
  const AtomSet atoms{"p", "q"};
  for (int k = 0; k < 400; ++k) {
    const auto w = testing::random_word(rng, atoms);
    const auto f = testing::random_formula(rng, atoms, 3, false);
    const auto iv = testing::random_interval(rng);
    for (std::size_t i = 0; i < 5; ++i) {
      CHECK(evaluate_at(w, i, Formula::negation(f)) == !evaluate_at(w, i, f));
      CHECK(evaluate_at(w, i, Formula::always(iv, f)) ==
            evaluate_at(w, i, Formula::negation(Formula::eventually(iv, Formula::negation(f)))));
    }
  }
}

TEST_CASE("scaling a word and a formula together preserves truth") {
  testing::Rng rng(8);
  const AtomSet atoms{"p", "q"};
  for (int k = 0; k < 300; ++k) {
    const auto w = testing::random_word(rng, atoms);
    const auto f = testing::random_formula(rng, atoms, 3, false);
    CHECK(satisfies(w, f) == satisfies(w.scaled(Rational(10)), f.scaled(Rational(10))));
  }
}
