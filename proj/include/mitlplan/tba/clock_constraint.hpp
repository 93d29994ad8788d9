#pragma once

#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mitlplan/core/interval.hpp"
#include "mitlplan/core/rational.hpp"

namespace mitlplan::tba {

enum class Relation { Less, LessEq, Greater, GreaterEq, Equal };

/// Clock valuation indexed by clock id. Values above the automaton's largest
/// constant are stored as infinity.
using Valuation = std::vector<TimeValue>;

/// Boolean combination of `x ~ c` atoms over clock ids.
class ClockConstraint {
public:
  enum class Kind { True, Not, And, Compare };

  ClockConstraint(); // true
  static ClockConstraint truth() { return {}; }
  static ClockConstraint falsity();
  static ClockConstraint compare(int clock, Relation rel, Rational constant);
  static ClockConstraint negation(ClockConstraint c);
  static ClockConstraint conjunction(ClockConstraint a, ClockConstraint b);
  static ClockConstraint disjunction(ClockConstraint a, ClockConstraint b);
  /// x ∈ I
  static ClockConstraint within(int clock, const TimeInterval& interval);

  Kind kind() const { return node_->kind; }
  int clock() const { return node_->clock; }
  Relation relation() const { return node_->rel; }
  const Rational& constant() const { return node_->constant; }
  const ClockConstraint& lhs() const { return *node_->lhs; }
  const ClockConstraint& rhs() const { return *node_->rhs; }
  const ClockConstraint& operand() const { return *node_->lhs; }

  bool is_true() const { return kind() == Kind::True; }

  /// Infinity satisfies > and >=, falsifies <, <= and =.
  bool holds(std::span<const TimeValue> valuation) const;

  Rational largest_constant() const;
  /// Appends every comparison constant.
  void collect_constants(std::vector<Rational>& out) const;
  ClockConstraint scaled(const Rational& factor) const;
  ClockConstraint renamed(int offset) const;

  /// Printed with the given clock names, in the syntax `parse` reads.
  std::string str(std::span<const std::string> clock_names) const;

  friend bool operator==(const ClockConstraint& a, const ClockConstraint& b);

private:
  struct Node {
    Kind kind = Kind::True;
    int clock = -1;
    Relation rel = Relation::LessEq;
    Rational constant;
    std::shared_ptr<const ClockConstraint> lhs, rhs;
  };
  explicit ClockConstraint(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

class ConstraintParseError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Grammar: `true`, `false`, `!c`, `c & c`, `( c )` and `x OP k` with OP one
/// of < <= > >= = ==, k a nonnegative rational. Clock names are looked up in
/// `clock_names`.
ClockConstraint parse_constraint(std::string_view text, std::span<const std::string> clock_names);

} // namespace mitlplan::tba
