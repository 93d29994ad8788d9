#include "mitlplan/mitl/evaluator.hpp"

#include <algorithm>
#include <stdexcept>

namespace mitlplan::mitl {

namespace {

class Evaluation {
public:
  explicit Evaluation(const LassoTimedWord& word)
      : word_(word), prefix_(word.prefix_length()), cycle_(word.cycle_length()) {}

  TruthTable eval(const Formula& f) {
    switch (f.op()) {
    case Op::True:
    case Op::False:
      return constant(f.op() == Op::True);
    case Op::Atom:
      return tabulate(prefix_, [&](std::size_t i) { return word_.value_at(i).contains(f.name()); });
    case Op::Not: {
      TruthTable a = eval(f.operand());
      return tabulate(a.stable(), [&](std::size_t i) { return !a.at(i); });
    }
    case Op::And: {
      TruthTable a = eval(f.lhs());
      TruthTable b = eval(f.rhs());
      return tabulate(std::max(a.stable(), b.stable()),
                      [&](std::size_t i) { return a.at(i) && b.at(i); });
    }
    case Op::Next: {
      TruthTable a = eval(f.operand());
      return tabulate(std::max(prefix_, a.stable()), [&](std::size_t i) {
        return a.at(i + 1) && f.interval().contains(word_.time_at(i + 1) - word_.time_at(i));
      });
    }
    case Op::Eventually: {
      TruthTable a = eval(f.operand());
      return tabulate(std::max(prefix_, a.stable()),
                      [&](std::size_t i) { return exists_in_window(a, f.interval(), i, true); });
    }
    case Op::Always: {
      TruthTable a = eval(f.operand());
      return tabulate(std::max(prefix_, a.stable()),
                      [&](std::size_t i) { return !exists_in_window(a, f.interval(), i, false); });
    }
    case Op::Until: {
      TruthTable a = eval(f.lhs());
      TruthTable b = eval(f.rhs());
      return tabulate(std::max({prefix_, a.stable(), b.stable()}),
                      [&](std::size_t i) { return until_at(a, b, f.interval(), i); });
    }
    case Op::Or:
    case Op::Implies:
      return eval(f.normalized());
    }
    throw std::logic_error("unhandled formula operator");
  }

private:
  TruthTable constant(bool value) {
    return TruthTable(0, cycle_, std::vector<char>(cycle_, value ? 1 : 0));
  }

  template <typename F>
  TruthTable tabulate(std::size_t stable, F&& value_at) {
    std::vector<char> values(stable + cycle_);
    for (std::size_t i = 0; i < values.size(); ++i)
      values[i] = value_at(i) ? 1 : 0;
    return TruthTable(stable, cycle_, std::move(values));
  }

  // Is there a j >= i with time(j) - time(i) in `iv` and operand(j) == wanted?
  bool exists_in_window(const TruthTable& a, const TimeInterval& iv, std::size_t i, bool wanted) {
    const Rational start = word_.time_at(i);
    if (iv.bounded()) {
      const Rational& upper = *iv.upper();
      for (std::size_t j = i;; ++j) {
        const Rational d = word_.time_at(j) - start;
        if (d > upper)
          return false;
        if (iv.contains(d) && a.at(j) == wanted)
          return true;
      }
    }
    // Unbounded above: a periodic occurrence is eventually inside the window.
    const std::size_t periodic_from = std::max(a.stable(), i);
    for (std::size_t j = periodic_from; j < periodic_from + cycle_; ++j)
      if (a.at(j) == wanted)
        return true;
    for (std::size_t j = i; j < periodic_from; ++j)
      if (a.at(j) == wanted && iv.contains(word_.time_at(j) - start))
        return true;
    return false;
  }

  bool until_at(const TruthTable& hold, const TruthTable& goal, const TimeInterval& iv,
                std::size_t i) {
    const Rational start = word_.time_at(i);
    const std::size_t base = std::max({i, hold.stable(), goal.stable()});
    std::optional<std::size_t> stop;
    for (std::size_t j = i;; ++j) {
      const Rational d = word_.time_at(j) - start;
      if (iv.bounded() && d > *iv.upper())
        return false;
      if (iv.contains(d) && goal.at(j))
        return true;
      if (!hold.at(j))
        return false;
      if (!iv.bounded()) {
        // Past `base` and the lower bound every later position is in the
        // window; one more full cycle without the goal means never.
        if (!stop && j >= base && d > iv.lower())
          stop = j + cycle_;
        if (stop && j >= *stop)
          return false;
      }
    }
  }

  const LassoTimedWord& word_;
  std::size_t prefix_;
  std::size_t cycle_;
};

} // namespace

TruthTable truth_table(const LassoTimedWord& word, const Formula& formula) {
  return Evaluation(word).eval(formula.normalized());
}

bool evaluate_at(const LassoTimedWord& word, std::size_t position, const Formula& formula) {
  return truth_table(word, formula).at(position);
}

bool satisfies(const LassoTimedWord& word, const Formula& formula) {
  return evaluate_at(word, 0, formula);
}

std::optional<std::size_t> first_violation(const LassoTimedWord& word, const Formula& formula) {
  if (satisfies(word, formula))
    return std::nullopt;
  if (formula.op() != Op::Always)
    return 0;
  const TruthTable inner = truth_table(word, formula.operand());
  const Rational start = word.time_at(0);
  for (std::size_t j = 0;; ++j) {
    const Rational d = word.time_at(j) - start;
    if (formula.interval().contains(d) && !inner.at(j))
      return j;
  }
}

} // namespace mitlplan::mitl
