#include "mitlplan/tba/translate.hpp"

#include <algorithm>
#include <functional>

#include "mitlplan/tba/intersect.hpp"

namespace mitlplan::tba {

using mitl::Formula;
using mitl::Op;

UnsupportedFragment::UnsupportedFragment(const std::string& subformula, const std::string& path)
    : std::runtime_error("formula '" + subformula + "' (at " + path +
                         ") is outside the translatable fragment; supply a hand-written TBA file "
                         "instead"),
      subformula_(subformula), path_(path) {}

namespace {

using LetterTest = std::function<bool(const AtomSet&)>;

// A small automaton over "modes" that is expanded into one location per
// (mode, letter) pair, since locations carry exactly one label.
struct ModeSpec {
  std::string name;
  bool initial = false;
  bool accepting = false;
  LetterTest allows = [](const AtomSet&) { return true; };
  std::function<ClockConstraint(const AtomSet&)> invariant = [](const AtomSet&) {
    return ClockConstraint::truth();
  };
};

struct ModeEdge {
  std::size_t from;
  std::size_t to;
  LetterTest when; // on the source letter; empty means always
  ClockConstraint guard;
  bool reset = false;
};

LetterTest holds(const Formula& b) {
  return [b](const AtomSet& a) { return b.holds_on(a); };
}

LetterTest fails(const Formula& b) {
  return [b](const AtomSet& a) { return !b.holds_on(a); };
}

// x <= u or x < u, or true when unbounded.
ClockConstraint upper_of(const TimeInterval& iv) {
  if (!iv.upper())
    return {};
  return ClockConstraint::compare(0, iv.upper_closed() ? Relation::LessEq : Relation::Less, *iv.upper());
}

class Expander {
public:
  Expander(AtomSet alphabet, std::vector<AtomSet> letters)
      : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {}

  TimedBuchiAutomaton build(const std::vector<ModeSpec>& modes, const std::vector<ModeEdge>& edges,
                            bool timed) const {
    std::vector<Location> locations;
    std::vector<std::vector<std::size_t>> by_mode(modes.size());
    std::vector<AtomSet> letter_of;
    for (std::size_t m = 0; m < modes.size(); ++m)
      for (const auto& a : letters_) {
        if (!modes[m].allows(a))
          continue;
        ClockConstraint inv = modes[m].invariant(a);
        // A location whose invariant can never hold is dead weight.
        if (inv.kind() == ClockConstraint::Kind::Not && inv.operand().is_true())
          continue;
        by_mode[m].push_back(locations.size());
        letter_of.push_back(a);
        locations.push_back({modes[m].name + a.str(), a, inv, modes[m].accepting, modes[m].initial});
      }
    const bool any_initial =
        std::any_of(locations.begin(), locations.end(), [](const Location& l) { return l.initial; });
    if (!any_initial)
      return empty_automaton(alphabet_);

    std::vector<Edge> out;
    for (const auto& me : edges)
      for (std::size_t src : by_mode[me.from]) {
        if (me.when && !me.when(letter_of[src]))
          continue;
        for (std::size_t dst : by_mode[me.to])
          out.push_back({src, dst, me.guard, me.reset && timed ? std::vector<int>{0} : std::vector<int>{}});
      }
    return TimedBuchiAutomaton(alphabet_, timed ? std::vector<std::string>{"x"} : std::vector<std::string>{},
                               std::move(locations), std::move(out));
  }

private:
  AtomSet alphabet_;
  std::vector<AtomSet> letters_;
};

bool is_universal_next_always_pattern(const Formula& body, Formula* beta, Formula* gamma,
                                      TimeInterval* inner) {
  // body: b -> X G[I] c   or   !b | X G[I] c
  const Formula* lhs = nullptr;
  const Formula* rhs = nullptr;
  if (body.op() == Op::Implies) {
    lhs = &body.lhs();
    rhs = &body.rhs();
  } else if (body.op() == Op::Or && body.lhs().op() == Op::Not) {
    lhs = &body.lhs().operand();
    rhs = &body.rhs();
  } else {
    return false;
  }
  if (!lhs->is_propositional() || rhs->op() != Op::Next || !rhs->interval().is_universal())
    return false;
  const Formula& g = rhs->operand();
  if (g.op() != Op::Always || !g.operand().is_propositional() || !g.interval().starts_at_zero())
    return false;
  *beta = *lhs;
  *gamma = g.operand();
  *inner = g.interval();
  return true;
}

class Translator {
public:
  Translator(AtomSet alphabet, std::vector<AtomSet> letters)
      : expander_(std::move(alphabet), std::move(letters)) {}

  TimedBuchiAutomaton translate(const Formula& f, const std::string& path) const {
    if (f.is_propositional())
      return propositional(f);
    switch (f.op()) {
    case Op::And:
      return intersect(translate(f.lhs(), path + ".left"), translate(f.rhs(), path + ".right"));
    case Op::Eventually:
      if (f.operand().is_propositional())
        return until(Formula::truth(), f.operand(), f.interval());
      break;
    case Op::Until:
      if (f.lhs().is_propositional() && f.rhs().is_propositional())
        return until(f.lhs(), f.rhs(), f.interval());
      break;
    case Op::Next:
      if (f.operand().is_propositional())
        return next(f.operand(), f.interval());
      break;
    case Op::Always: {
      if (f.operand().is_propositional())
        return always(f.operand(), f.interval());
      if (!f.interval().is_universal())
        break;
      const Formula& body = f.operand();
      if (body.op() == Op::Eventually && body.operand().is_propositional() &&
          body.interval().starts_at_zero())
        return recurrence(body.operand(), body.interval());
      Formula beta = Formula::truth(), gamma = Formula::truth();
      TimeInterval inner;
      if (is_universal_next_always_pattern(body, &beta, &gamma, &inner))
        return response(beta, gamma, inner);
      break;
    }
    default:
      break;
    }
    throw UnsupportedFragment(f.str(), path);
  }

private:
  TimedBuchiAutomaton propositional(const Formula& b) const {
    std::vector<ModeSpec> modes(2);
    modes[0].name = "start";
    modes[0].initial = true;
    modes[0].allows = holds(b);
    modes[1].name = "done";
    modes[1].accepting = true;
    return expander_.build(modes, {{0, 1, {}, {}, false}, {1, 1, {}, {}, false}}, false);
  }

  // b1 U[I] b2; F[I] b is true U[I] b.
  TimedBuchiAutomaton until(const Formula& hold, const Formula& goal, const TimeInterval& iv) const {
    std::vector<ModeSpec> modes(2);
    modes[0].name = "wait";
    modes[0].initial = true;
    const ClockConstraint bound = upper_of(iv);
    modes[0].invariant = [bound](const AtomSet&) { return bound; };
    modes[1].name = "done";
    modes[1].accepting = true;
    std::vector<ModeEdge> edges;
    edges.push_back({0, 0, holds(hold), {}, false});
    edges.push_back({0, 1, holds(goal), ClockConstraint::within(0, iv), true});
    // Resetting in the sink keeps the clock values it can reach finite.
    edges.push_back({1, 1, {}, {}, true});
    return expander_.build(modes, edges, true);
  }

  TimedBuchiAutomaton next(const Formula& b, const TimeInterval& iv) const {
    std::vector<ModeSpec> modes(3);
    modes[0].name = "start";
    modes[0].initial = true;
    modes[1].name = "check";
    modes[1].allows = holds(b);
    const ClockConstraint in = ClockConstraint::within(0, iv);
    modes[1].invariant = [in](const AtomSet&) { return in; };
    modes[2].name = "done";
    modes[2].accepting = true;
    std::vector<ModeEdge> edges;
    edges.push_back({0, 1, {}, {}, false});
    edges.push_back({1, 2, {}, {}, true});
    edges.push_back({2, 2, {}, {}, true});
    return expander_.build(modes, edges, true);
  }

  TimedBuchiAutomaton always(const Formula& b, const TimeInterval& iv) const {
    std::vector<ModeSpec> modes(1);
    modes[0].name = "watch";
    modes[0].initial = true;
    modes[0].accepting = true;
    const ClockConstraint outside = ClockConstraint::negation(ClockConstraint::within(0, iv));
    modes[0].invariant = [b, outside](const AtomSet& a) {
      return b.holds_on(a) ? ClockConstraint::truth() : outside;
    };
    return expander_.build(modes, {{0, 0, {}, {}, false}}, true);
  }

  // G F[I] b with I downward closed: x counts from the position after the
  // last visit of "seen"; every position keeps x within the bound.
  TimedBuchiAutomaton recurrence(const Formula& b, const TimeInterval& iv) const {
    std::vector<ModeSpec> modes(2);
    const ClockConstraint bound = upper_of(iv);
    modes[0].name = "seen";
    modes[0].initial = true;
    modes[0].accepting = true;
    modes[0].allows = holds(b);
    modes[0].invariant = [bound](const AtomSet&) { return bound; };
    modes[1].name = "await";
    modes[1].initial = true;
    modes[1].invariant = [bound](const AtomSet&) { return bound; };
    std::vector<ModeEdge> edges;
    edges.push_back({0, 0, {}, {}, true});
    edges.push_back({0, 1, {}, {}, true});
    edges.push_back({1, 1, {}, {}, false});
    edges.push_back({1, 0, {}, {}, false});
    return expander_.build(modes, edges, !bound.is_true());
  }

  // G (b -> X G[I] c) with I starting at closed 0: each b restarts x at the
  // next position; later restarts cover earlier obligations.
  TimedBuchiAutomaton response(const Formula& b, const Formula& c, const TimeInterval& iv) const {
    std::vector<ModeSpec> modes(2);
    modes[0].name = "free";
    modes[0].initial = true;
    modes[0].accepting = true;
    modes[1].name = "active";
    modes[1].accepting = true;
    const ClockConstraint outside = ClockConstraint::negation(ClockConstraint::within(0, iv));
    modes[1].invariant = [c, outside](const AtomSet& a) {
      return c.holds_on(a) ? ClockConstraint::truth() : outside;
    };
    std::vector<ModeEdge> edges;
    edges.push_back({0, 0, fails(b), {}, false});
    edges.push_back({0, 1, holds(b), {}, true});
    edges.push_back({1, 1, fails(b), {}, false});
    edges.push_back({1, 1, holds(b), {}, true});
    return expander_.build(modes, edges, true);
  }

  Expander expander_;
};

} // namespace

TimedBuchiAutomaton translate_mitl(const Formula& formula, const TranslateOptions& options) {
  const AtomSet atoms = formula.atoms();
  AtomSet alphabet = options.alphabet ? *options.alphabet : atoms;
  if (!atoms.subset_of(alphabet))
    throw std::invalid_argument("alphabet " + alphabet.str() + " misses atoms of " + formula.str());
  std::vector<AtomSet> letters;
  if (options.letters) {
    for (const auto& l : *options.letters)
      letters.push_back(l.intersected(alphabet));
    std::sort(letters.begin(), letters.end());
    letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
  } else {
    letters = all_letters(alphabet);
  }
  return Translator(alphabet, letters).translate(formula, "root");
}

bool in_translatable_fragment(const Formula& formula) {
  try {
    // A one-letter universe keeps the check cheap.
    TranslateOptions o;
    o.letters = std::vector<AtomSet>{AtomSet{}};
    translate_mitl(formula, o);
    return true;
  } catch (const UnsupportedFragment&) {
    return false;
  }
}

} // namespace mitlplan::tba
