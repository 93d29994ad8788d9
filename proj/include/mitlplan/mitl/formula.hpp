#pragma once

#include <memory>
#include <string>

#include "mitlplan/core/atoms.hpp"
#include "mitlplan/core/interval.hpp"

namespace mitlplan::mitl {

enum class Op { True, False, Atom, Not, And, Or, Implies, Next, Eventually, Always, Until };

/// Immutable MITL syntax tree with structural equality. Subtrees are shared.
class Formula {
public:
  static Formula truth();
  static Formula falsity();
  static Formula atom(std::string name);
  static Formula negation(Formula operand);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);
  static Formula next(TimeInterval interval, Formula operand);
  static Formula eventually(TimeInterval interval, Formula operand);
  static Formula always(TimeInterval interval, Formula operand);
  static Formula until(TimeInterval interval, Formula lhs, Formula rhs);

  Op op() const { return node_->op; }
  const std::string& name() const { return node_->name; }
  const TimeInterval& interval() const { return node_->interval; }
  /// Operand of unary operators, left operand of binary ones.
  const Formula& lhs() const { return *node_->lhs; }
  const Formula& rhs() const { return *node_->rhs; }
  const Formula& operand() const { return *node_->lhs; }

  bool is_temporal() const;
  /// Built from atoms, constants and boolean connectives only.
  bool is_propositional() const;
  /// Truth of a propositional formula on one letter.
  bool holds_on(const AtomSet& letter) const;

  AtomSet atoms() const;
  /// Largest finite interval endpoint anywhere in the formula (0 if none).
  Rational largest_constant() const;
  /// Every interval endpoint in the formula.
  std::vector<Rational> constants() const;

  /// Rewrites Or and Implies into Not/And.
  Formula normalized() const;
  /// Multiplies every interval endpoint by `factor`.
  Formula scaled(const Rational& factor) const;

  /// Fully parenthesized text accepted by parse_formula.
  std::string str() const;

  friend bool operator==(const Formula& lhs, const Formula& rhs);

private:
  struct Node {
    Op op;
    std::string name;
    TimeInterval interval;
    std::shared_ptr<const Formula> lhs;
    std::shared_ptr<const Formula> rhs;
  };
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make(Op op, std::string name, TimeInterval interval, const Formula* lhs,
                      const Formula* rhs);

  std::shared_ptr<const Node> node_;
};

} // namespace mitlplan::mitl
