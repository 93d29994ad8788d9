#include "mitlplan/mitl/formula.hpp"

#include <functional>
#include <stdexcept>

namespace mitlplan::mitl {

Formula Formula::make(Op op, std::string name, TimeInterval interval, const Formula* lhs,
                      const Formula* rhs) {
  auto node = std::make_shared<Node>();
  node->op = op;
  node->name = std::move(name);
  node->interval = interval;
  if (lhs)
    node->lhs = std::make_shared<const Formula>(*lhs);
  if (rhs)
    node->rhs = std::make_shared<const Formula>(*rhs);
  return Formula(std::move(node));
}

Formula Formula::truth() { return make(Op::True, {}, {}, nullptr, nullptr); }
Formula Formula::falsity() { return make(Op::False, {}, {}, nullptr, nullptr); }
Formula Formula::atom(std::string name) { return make(Op::Atom, std::move(name), {}, nullptr, nullptr); }
Formula Formula::negation(Formula operand) { return make(Op::Not, {}, {}, &operand, nullptr); }
Formula Formula::conjunction(Formula lhs, Formula rhs) { return make(Op::And, {}, {}, &lhs, &rhs); }
Formula Formula::disjunction(Formula lhs, Formula rhs) { return make(Op::Or, {}, {}, &lhs, &rhs); }
Formula Formula::implication(Formula lhs, Formula rhs) {
  return make(Op::Implies, {}, {}, &lhs, &rhs);
}
Formula Formula::next(TimeInterval interval, Formula operand) {
  return make(Op::Next, {}, interval, &operand, nullptr);
}
Formula Formula::eventually(TimeInterval interval, Formula operand) {
  return make(Op::Eventually, {}, interval, &operand, nullptr);
}
Formula Formula::always(TimeInterval interval, Formula operand) {
  return make(Op::Always, {}, interval, &operand, nullptr);
}
Formula Formula::until(TimeInterval interval, Formula lhs, Formula rhs) {
  return make(Op::Until, {}, interval, &lhs, &rhs);
}

bool Formula::is_temporal() const {
  switch (op()) {
  case Op::Next:
  case Op::Eventually:
  case Op::Always:
  case Op::Until:
    return true;
  default:
    return false;
  }
}

bool Formula::is_propositional() const {
  switch (op()) {
  case Op::True:
  case Op::False:
  case Op::Atom:
    return true;
  case Op::Not:
    return operand().is_propositional();
  case Op::And:
  case Op::Or:
  case Op::Implies:
    return lhs().is_propositional() && rhs().is_propositional();
  default:
    return false;
  }
}

bool Formula::holds_on(const AtomSet& letter) const {
  switch (op()) {
  case Op::True:
    return true;
  case Op::False:
    return false;
  case Op::Atom:
    return letter.contains(name());
  case Op::Not:
    return !operand().holds_on(letter);
  case Op::And:
    return lhs().holds_on(letter) && rhs().holds_on(letter);
  case Op::Or:
    return lhs().holds_on(letter) || rhs().holds_on(letter);
  case Op::Implies:
    return !lhs().holds_on(letter) || rhs().holds_on(letter);
  default:
    throw std::logic_error("holds_on called on temporal formula " + str());
  }
}

AtomSet Formula::atoms() const {
  AtomSet out;
  std::function<void(const Formula&)> walk = [&](const Formula& f) {
    if (f.op() == Op::Atom)
      out.insert(f.name());
    if (f.node_->lhs)
      walk(*f.node_->lhs);
    if (f.node_->rhs)
      walk(*f.node_->rhs);
  };
  walk(*this);
  return out;
}

std::vector<Rational> Formula::constants() const {
  std::vector<Rational> out;
  std::function<void(const Formula&)> walk = [&](const Formula& f) {
    if (f.is_temporal()) {
      out.push_back(f.interval().lower());
      if (f.interval().upper())
        out.push_back(*f.interval().upper());
    }
    if (f.node_->lhs)
      walk(*f.node_->lhs);
    if (f.node_->rhs)
      walk(*f.node_->rhs);
  };
  walk(*this);
  return out;
}

Rational Formula::largest_constant() const {
  Rational best(0);
  for (const auto& c : constants())
    best = max(best, c);
  return best;
}

Formula Formula::normalized() const {
  switch (op()) {
  case Op::True:
  case Op::False:
  case Op::Atom:
    return *this;
  case Op::Not:
    return negation(operand().normalized());
  case Op::And:
    return conjunction(lhs().normalized(), rhs().normalized());
  case Op::Or:
    return negation(conjunction(negation(lhs().normalized()), negation(rhs().normalized())));
  case Op::Implies:
    return negation(conjunction(lhs().normalized(), negation(rhs().normalized())));
  case Op::Next:
    return next(interval(), operand().normalized());
  case Op::Eventually:
    return eventually(interval(), operand().normalized());
  case Op::Always:
    return always(interval(), operand().normalized());
  case Op::Until:
    return until(interval(), lhs().normalized(), rhs().normalized());
  }
  return *this;
}

Formula Formula::scaled(const Rational& factor) const {
  const Formula* l = node_->lhs ? node_->lhs.get() : nullptr;
  const Formula* r = node_->rhs ? node_->rhs.get() : nullptr;
  Formula sl = l ? l->scaled(factor) : Formula(node_);
  Formula sr = r ? r->scaled(factor) : Formula(node_);
  TimeInterval iv = is_temporal() ? interval().scaled(factor) : interval();
  return make(op(), name(), iv, l ? &sl : nullptr, r ? &sr : nullptr);
}

namespace {

std::string wrap(const Formula& f) {
  switch (f.op()) {
  case Op::True:
  case Op::False:
  case Op::Atom:
    return f.str();
  default:
    return "(" + f.str() + ")";
  }
}

} // namespace

std::string Formula::str() const {
  switch (op()) {
  case Op::True:
    return "true";
  case Op::False:
    return "false";
  case Op::Atom:
    return name();
  case Op::Not:
    return "!" + wrap(operand());
  case Op::And:
    return wrap(lhs()) + " & " + wrap(rhs());
  case Op::Or:
    return wrap(lhs()) + " | " + wrap(rhs());
  case Op::Implies:
    return wrap(lhs()) + " -> " + wrap(rhs());
  case Op::Next:
    return "X" + interval().str() + " " + wrap(operand());
  case Op::Eventually:
    return "F" + interval().str() + " " + wrap(operand());
  case Op::Always:
    return "G" + interval().str() + " " + wrap(operand());
  case Op::Until:
    return wrap(lhs()) + " U" + interval().str() + " " + wrap(rhs());
  }
  return {};
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_)
    return true;
  if (a.op() != b.op() || a.name() != b.name())
    return false;
  if (a.is_temporal() && !(a.interval() == b.interval()))
    return false;
  const auto& al = a.node_->lhs;
  const auto& bl = b.node_->lhs;
  if (static_cast<bool>(al) != static_cast<bool>(bl) || (al && !(*al == *bl)))
    return false;
  const auto& ar = a.node_->rhs;
  const auto& br = b.node_->rhs;
  if (static_cast<bool>(ar) != static_cast<bool>(br) || (ar && !(*ar == *br)))
    return false;
  return true;
}

} // namespace mitlplan::mitl
