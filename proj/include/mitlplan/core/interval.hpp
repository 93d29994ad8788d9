#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "mitlplan/core/rational.hpp"

namespace mitlplan {

class IntervalError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Non-empty, non-punctual interval of the time domain attached to a
/// temporal operator. An absent upper bound means infinity (always open).
class TimeInterval {
public:
  /// [0, inf)
  TimeInterval() = default;

  /// Throws IntervalError for negative bounds, lower > upper, and
  /// single-point or empty intervals.
  static TimeInterval make(Rational lower, bool lower_closed, std::optional<Rational> upper,
                           bool upper_closed);

  static TimeInterval unbounded() { return {}; }
  /// [0, bound]
  static TimeInterval up_to(Rational bound) { return make(0, true, bound, true); }

  const Rational& lower() const { return lower_; }
  const std::optional<Rational>& upper() const { return upper_; }
  bool lower_closed() const { return lower_closed_; }
  bool upper_closed() const { return upper_closed_; }
  bool bounded() const { return upper_.has_value(); }

  bool contains(const Rational& d) const;
  /// True for the whole nonnegative axis, [0, inf).
  bool is_universal() const { return !upper_ && lower_.is_zero() && lower_closed_; }
  /// True when 0 is the closed lower bound.
  bool starts_at_zero() const { return lower_.is_zero() && lower_closed_; }

  /// Largest finite endpoint.
  Rational largest_constant() const { return upper_ ? *upper_ : lower_; }

  TimeInterval scaled(const Rational& factor) const;

  /// "[0,6]", "(1,inf)"; reparsable by the formula parser.
  std::string str() const;

  friend bool operator==(const TimeInterval&, const TimeInterval&) = default;

private:
  Rational lower_{0};
  std::optional<Rational> upper_{};
  bool lower_closed_ = true;
  bool upper_closed_ = false;
};

} // namespace mitlplan
