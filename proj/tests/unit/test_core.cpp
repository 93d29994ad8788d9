#include <doctest.h>

#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include "mitlplan/core/atoms.hpp"
#include "mitlplan/core/interval.hpp"
#include "mitlplan/core/lasso.hpp"
#include "mitlplan/core/rational.hpp"
#include "mitlplan/core/scale.hpp"

using namespace mitlplan;

TEST_CASE("rational normalizes sign and lowest terms") {
  Rational r(6, -4);
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK(Rational(0, -7).denominator() == 1);
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) * Rational(4) == Rational(2));
  CHECK(Rational(3) / Rational(6) == Rational(1, 2));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational parse and print") {
  CHECK(Rational::parse("7/10") == Rational(7, 10));
  CHECK(Rational::parse("2.5") == Rational(5, 2));
  CHECK(Rational::parse(" -3 ") == Rational(-3));
  CHECK(Rational::parse("0.125") == Rational(1, 8));
  CHECK(Rational(5, 2).str() == "5/2");
  CHECK(Rational(4).str() == "4");
  for (const char* bad : {"", "x", "1/", "1/0", "1.", "2.5.1", "3/4/5", "--1"})
    CHECK_THROWS_AS(Rational::parse(bad), std::invalid_argument);
}

TEST_CASE("rational ordering agrees with doubles on random pairs") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> num(-50, 50), den(1, 30);
  for (int k = 0; k < 2000; ++k) {
    Rational a(num(rng), den(rng)), b(num(rng), den(rng));
    const double da = a.to_double(), db = b.to_double();
    if (da < db - 1e-12)
      CHECK(a < b);
    else if (da > db + 1e-12)
      CHECK(a > b);
    else
      CHECK(a == b);
    CHECK((a + b) - b == a);
    if (!b.is_zero())
      CHECK((a / b) * b == a);
  }
}

TEST_CASE("rational overflow is reported, not wrapped") {
  const Rational big(std::numeric_limits<std::int64_t>::max());
  CHECK_THROWS_AS(big + Rational(1), std::overflow_error);
  CHECK_THROWS_AS(big * Rational(2), std::overflow_error);
  CHECK_THROWS_AS(lcm_checked(std::numeric_limits<std::int64_t>::max(), 2), std::overflow_error);
}

TEST_CASE("time value orders infinity last") {
  CHECK(TimeValue(Rational(1000)) < TimeValue::infinity());
  CHECK(TimeValue::infinity() == TimeValue::infinity());
  CHECK(TimeValue::infinity().str() == "inf");
  CHECK(TimeValue(Rational(3, 4)).str() == "3/4");
}

TEST_CASE("interval construction and membership") {
  auto iv = TimeInterval::make(1, false, Rational(3), true);
  CHECK(iv.str() == "(1,3]");
  CHECK_FALSE(iv.contains(1));
  CHECK(iv.contains(Rational(3, 2)));
  CHECK(iv.contains(3));
  CHECK_FALSE(iv.contains(Rational(301, 100)));

  auto open_end = TimeInterval::make(2, true, std::nullopt, false);
  CHECK(open_end.str() == "[2,inf)");
  CHECK(open_end.contains(1000000));
  CHECK_FALSE(open_end.contains(Rational(19, 10)));

  CHECK(TimeInterval::unbounded().is_universal());
  CHECK(TimeInterval::up_to(6).str() == "[0,6]");
  CHECK(TimeInterval::up_to(6).largest_constant() == Rational(6));
  CHECK(TimeInterval::up_to(Rational(1, 2)).scaled(4) == TimeInterval::up_to(2));
}

TEST_CASE("interval rejects malformed bounds") {
  CHECK_THROWS_AS(TimeInterval::make(6, true, Rational(0), true), IntervalError);
  CHECK_THROWS_AS(TimeInterval::make(2, true, Rational(2), true), IntervalError);
  CHECK_THROWS_AS(TimeInterval::make(2, false, Rational(2), false), IntervalError);
  CHECK_THROWS_AS(TimeInterval::make(-1, true, Rational(2), true), IntervalError);
  CHECK_NOTHROW(TimeInterval::make(2, true, Rational(5, 2), false));
}

TEST_CASE("atom sets are sorted and deduplicated") {
  AtomSet s{"red", "green", "red"};
  CHECK(s.size() == 2);
  CHECK(s.str() == "{green,red}");
  CHECK(AtomSet{}.str() == "{}");
  CHECK(s.intersected(AtomSet{"red", "blue"}) == AtomSet{"red"});
  CHECK(s.united(AtomSet{"blue"}) == AtomSet{"blue", "green", "red"});
  CHECK(AtomSet{"green"}.subset_of(s));
  CHECK(s.disjoint(AtomSet{"blue"}));
  CHECK(all_letters(AtomSet{"a", "b", "c"}).size() == 8);
}

TEST_CASE("lasso unroll") {
  LassoTimedWord w({{AtomSet{"p"}, 0}}, {{AtomSet{"q"}, 1}}, 1);
  auto steps = w.unroll(2);
  REQUIRE(steps.size() == 3);
  CHECK(steps[0] == TimedLetter{AtomSet{"p"}, 0});
  CHECK(steps[1] == TimedLetter{AtomSet{"q"}, 1});
  CHECK(steps[2] == TimedLetter{AtomSet{"q"}, 2});
  CHECK(w.time_at(10) == Rational(10));
  CHECK(w.value_at(10) == AtomSet{"q"});
}

TEST_CASE("lasso validation") {
  using L = LassoTimedWord;
  CHECK_THROWS_AS(L({}, {}, 1), LassoError);
  CHECK_THROWS_AS(L({}, {{AtomSet{}, 0}}, 0), LassoError);
  CHECK_THROWS_AS(L({{AtomSet{}, 1}}, {{AtomSet{}, 1}}, 1), LassoError);
  CHECK_THROWS_AS(L({}, {{AtomSet{}, 0}, {AtomSet{}, 2}}, 2), LassoError);
  CHECK_NOTHROW(L({}, {{AtomSet{}, 0}, {AtomSet{}, 2}}, Rational(5, 2)));
}

TEST_CASE("canonical lasso folds repeated cycles and rolls the prefix back") {
  const AtomSet a{"a"}, b{"b"};
  LassoTimedWord doubled({{a, 0}, {b, 1}}, {{a, 2}, {b, 3}, {a, 4}, {b, 5}}, 4);
  LassoTimedWord expected({}, {{a, 0}, {b, 1}}, 2);
  CHECK(doubled.canonical() == expected);

  // Same infinite word, different representation.
  LassoTimedWord shifted({{a, 0}}, {{b, 1}, {a, 2}}, 2);
  CHECK(shifted.canonical() == expected);

  // Times that do not repeat keep the long cycle.
  LassoTimedWord uneven({}, {{a, 0}, {b, 1}, {a, 2}, {b, 4}}, 5);
  CHECK(uneven.canonical() == uneven);
}

TEST_CASE("canonical lasso is stable on random words unrolled once more") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> len(1, 4), gap(1, 4), pick(0, 1);
  const AtomSet letters[] = {AtomSet{"a"}, AtomSet{}};
  for (int k = 0; k < 300; ++k) {
    std::vector<TimedLetter> prefix, cycle;
    Rational t(0);
    for (int i = len(rng) - 1; i > 0; --i) {
      prefix.push_back({letters[pick(rng)], t});
      t += gap(rng);
    }
    const Rational start = t;
    for (int i = len(rng); i > 0; --i) {
      cycle.push_back({letters[pick(rng)], t});
      t += gap(rng);
    }
    LassoTimedWord w(prefix, cycle, t - start);
    // Move the first cycle iteration into the prefix and double the cycle.
    auto longer_prefix = prefix;
    for (const auto& s : cycle)
      longer_prefix.push_back(s);
    std::vector<TimedLetter> twice;
    for (int rep = 1; rep <= 2; ++rep)
      for (const auto& s : cycle)
        twice.push_back({s.value, s.time + w.period() * Rational(rep)});
    LassoTimedWord other(longer_prefix, twice, w.period() * 2);
    CHECK(w.canonical() == other.canonical());
  }
}

TEST_CASE("scaling to integers") {
  {
    std::vector<Rational> v{Rational(1, 2), Rational(3, 4)};
    auto s = scale_to_integers(v);
    CHECK(s.factor == 4);
    CHECK(s.values == std::vector<std::int64_t>{2, 3});
  }
  {
    std::vector<Rational> v{1, 2, 5};
    auto s = scale_to_integers(v);
    CHECK(s.factor == 1);
    CHECK(s.values == std::vector<std::int64_t>{1, 2, 5});
  }
  {
    std::vector<Rational> v{Rational(7, 10), Rational(1, 2), 2};
    auto s = scale_to_integers(v);
    CHECK(s.factor == 10);
    CHECK(s.values == std::vector<std::int64_t>{7, 5, 20});
  }
  {
    std::vector<Rational> v;
    CHECK(scale_to_integers(v).factor == 1);
  }
  {
    std::vector<Rational> v{Rational(-1, 2)};
    CHECK_THROWS(scale_to_integers(v));
  }
}

TEST_CASE("scaled values are integers and preserve ratios") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> num(0, 40), den(1, 12), count(1, 6);
  for (int k = 0; k < 500; ++k) {
    std::vector<Rational> v;
    for (int i = count(rng); i > 0; --i)
      v.push_back(Rational(num(rng), den(rng)));
    auto s = scale_to_integers(v);
    REQUIRE(s.values.size() == v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      CHECK(Rational(s.values[i]) == v[i] * Rational(s.factor));
    }
    // Minimality: no proper divisor of the factor works.
    for (std::int64_t d = 1; d < s.factor; ++d) {
      if (s.factor % d != 0)
        continue;
      bool all_int = true;
      for (const auto& x : v)
        all_int = all_int && (x * Rational(d)).is_integer();
      CHECK_FALSE(all_int);
    }
  }
}
