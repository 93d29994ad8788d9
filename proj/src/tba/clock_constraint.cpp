#include "mitlplan/tba/clock_constraint.hpp"

#include <algorithm>
#include <cctype>

namespace mitlplan::tba {

ClockConstraint::ClockConstraint() : node_(std::make_shared<Node>()) {}

ClockConstraint ClockConstraint::falsity() { return negation(truth()); }

ClockConstraint ClockConstraint::compare(int clock, Relation rel, Rational constant) {
  if (constant.is_negative())
    throw std::invalid_argument("clock constant must be nonnegative, got " + constant.str());
  auto n = std::make_shared<Node>();
  n->kind = Kind::Compare;
  n->clock = clock;
  n->rel = rel;
  n->constant = constant;
  return ClockConstraint(std::move(n));
}

ClockConstraint ClockConstraint::negation(ClockConstraint c) {
  if (c.kind() == Kind::Not)
    return c.operand();
  auto n = std::make_shared<Node>();
  n->kind = Kind::Not;
  n->lhs = std::make_shared<const ClockConstraint>(std::move(c));
  return ClockConstraint(std::move(n));
}

ClockConstraint ClockConstraint::conjunction(ClockConstraint a, ClockConstraint b) {
  if (a.is_true())
    return b;
  if (b.is_true())
    return a;
  auto n = std::make_shared<Node>();
  n->kind = Kind::And;
  n->lhs = std::make_shared<const ClockConstraint>(std::move(a));
  n->rhs = std::make_shared<const ClockConstraint>(std::move(b));
  return ClockConstraint(std::move(n));
}

ClockConstraint ClockConstraint::disjunction(ClockConstraint a, ClockConstraint b) {
  return negation(conjunction(negation(std::move(a)), negation(std::move(b))));
}

ClockConstraint ClockConstraint::within(int clock, const TimeInterval& iv) {
  ClockConstraint c;
  if (!iv.lower().is_zero() || !iv.lower_closed())
    c = compare(clock, iv.lower_closed() ? Relation::GreaterEq : Relation::Greater, iv.lower());
  if (iv.upper())
    c = conjunction(c, compare(clock, iv.upper_closed() ? Relation::LessEq : Relation::Less, *iv.upper()));
  return c;
}

bool ClockConstraint::holds(std::span<const TimeValue> v) const {
  switch (kind()) {
  case Kind::True:
    return true;
  case Kind::Not:
    return !operand().holds(v);
  case Kind::And:
    return lhs().holds(v) && rhs().holds(v);
  case Kind::Compare: {
    const TimeValue& x = v[static_cast<std::size_t>(clock())];
    if (x.is_infinite())
      return relation() == Relation::Greater || relation() == Relation::GreaterEq;
    const Rational& a = x.value();
    switch (relation()) {
    case Relation::Less:
      return a < constant();
    case Relation::LessEq:
      return a <= constant();
    case Relation::Greater:
      return a > constant();
    case Relation::GreaterEq:
      return a >= constant();
    case Relation::Equal:
      return a == constant();
    }
  }
  }
  return false;
}

Rational ClockConstraint::largest_constant() const {
  switch (kind()) {
  case Kind::True:
    return 0;
  case Kind::Not:
    return operand().largest_constant();
  case Kind::And:
    return max(lhs().largest_constant(), rhs().largest_constant());
  case Kind::Compare:
    return constant();
  }
  return 0;
}

void ClockConstraint::collect_constants(std::vector<Rational>& out) const {
  switch (kind()) {
  case Kind::True:
    return;
  case Kind::Not:
    operand().collect_constants(out);
    return;
  case Kind::And:
    lhs().collect_constants(out);
    rhs().collect_constants(out);
    return;
  case Kind::Compare:
    out.push_back(constant());
    return;
  }
}

ClockConstraint ClockConstraint::scaled(const Rational& factor) const {
  switch (kind()) {
  case Kind::True:
    return *this;
  case Kind::Not:
    return negation(operand().scaled(factor));
  case Kind::And:
    return conjunction(lhs().scaled(factor), rhs().scaled(factor));
  case Kind::Compare:
    return compare(clock(), relation(), constant() * factor);
  }
  return *this;
}

ClockConstraint ClockConstraint::renamed(int offset) const {
  switch (kind()) {
  case Kind::True:
    return *this;
  case Kind::Not:
    return negation(operand().renamed(offset));
  case Kind::And:
    return conjunction(lhs().renamed(offset), rhs().renamed(offset));
  case Kind::Compare:
    return compare(clock() + offset, relation(), constant());
  }
  return *this;
}

namespace {

const char* relation_text(Relation r) {
  switch (r) {
  case Relation::Less:
    return "<";
  case Relation::LessEq:
    return "<=";
  case Relation::Greater:
    return ">";
  case Relation::GreaterEq:
    return ">=";
  case Relation::Equal:
    return "==";
  }
  return "?";
}

} // namespace

std::string ClockConstraint::str(std::span<const std::string> names) const {
  switch (kind()) {
  case Kind::True:
    return "true";
  case Kind::Not:
    if (operand().is_true())
      return "false";
    return "!(" + operand().str(names) + ")";
  case Kind::And:
    return lhs().str(names) + " & " + rhs().str(names);
  case Kind::Compare: {
    const auto id = static_cast<std::size_t>(clock());
    const std::string name = id < names.size() ? names[id] : "c" + std::to_string(clock());
    return name + " " + relation_text(relation()) + " " + constant().str();
  }
  }
  return {};
}

bool operator==(const ClockConstraint& a, const ClockConstraint& b) {
  if (a.node_ == b.node_)
    return true;
  if (a.kind() != b.kind())
    return false;
  switch (a.kind()) {
  case ClockConstraint::Kind::True:
    return true;
  case ClockConstraint::Kind::Not:
    return a.operand() == b.operand();
  case ClockConstraint::Kind::And:
    return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  case ClockConstraint::Kind::Compare:
    return a.clock() == b.clock() && a.relation() == b.relation() && a.constant() == b.constant();
  }
  return false;
}

namespace {

class ConstraintParser {
public:
  ConstraintParser(std::string_view text, std::span<const std::string> names)
      : text_(text), names_(names) {}

  ClockConstraint parse() {
    ClockConstraint c = conjunction();
    skip();
    if (pos_ != text_.size())
      fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return c;
  }

private:
  [[noreturn]] void fail(const std::string& what) {
    throw ConstraintParseError("clock constraint '" + std::string(text_) + "' at column " +
                               std::to_string(pos_ + 1) + ": " + what);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool eat(std::string_view token) {
    skip();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  ClockConstraint conjunction() {
    ClockConstraint c = unary();
    while (eat("&")) {
      eat("&"); // accept && too
      c = ClockConstraint::conjunction(c, unary());
    }
    return c;
  }

  ClockConstraint unary() {
    if (eat("!"))
      return ClockConstraint::negation(unary());
    if (eat("(")) {
      ClockConstraint c = conjunction();
      if (!eat(")"))
        fail("expected ')'");
      return c;
    }
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    const std::string word(text_.substr(start, pos_ - start));
    if (word.empty())
      fail("expected a clock comparison");
    if (word == "true")
      return ClockConstraint::truth();
    if (word == "false")
      return ClockConstraint::falsity();
    const auto it = std::find(names_.begin(), names_.end(), word);
    if (it == names_.end())
      fail("undeclared clock '" + word + "'");
    const int clock = static_cast<int>(it - names_.begin());

    Relation rel;
    if (eat("<="))
      rel = Relation::LessEq;
    else if (eat(">="))
      rel = Relation::GreaterEq;
    else if (eat("=="))
      rel = Relation::Equal;
    else if (eat("<"))
      rel = Relation::Less;
    else if (eat(">"))
      rel = Relation::Greater;
    else if (eat("="))
      rel = Relation::Equal;
    else
      fail("expected a comparison operator after '" + word + "'");

    skip();
    const std::size_t num_start = pos_;
    while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
                                   text_[pos_] == '.' || text_[pos_] == '/'))
      ++pos_;
    if (num_start == pos_)
      fail("expected a nonnegative constant");
    Rational c;
    try {
      c = Rational::parse(text_.substr(num_start, pos_ - num_start));
    } catch (const std::exception& e) {
      fail(e.what());
    }
    return ClockConstraint::compare(clock, rel, c);
  }

  std::string_view text_;
  std::span<const std::string> names_;
  std::size_t pos_ = 0;
};

} // namespace

ClockConstraint parse_constraint(std::string_view text, std::span<const std::string> clock_names) {
  return ConstraintParser(text, clock_names).parse();
}

} // namespace mitlplan::tba
