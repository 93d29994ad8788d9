#include "mitlplan/core/interval.hpp"

namespace mitlplan {

TimeInterval TimeInterval::make(Rational lower, bool lower_closed, std::optional<Rational> upper,
                                bool upper_closed) {
  TimeInterval iv;
  iv.lower_ = lower;
  iv.lower_closed_ = lower_closed;
  iv.upper_ = upper;
  iv.upper_closed_ = upper ? upper_closed : false;
  if (lower.is_negative())
    throw IntervalError("interval " + iv.str() + " has a negative lower bound");
  if (upper) {
    if (*upper < lower)
      throw IntervalError("interval " + iv.str() + " has lower bound greater than upper bound");
    if (*upper == lower) {
      if (lower_closed && upper_closed)
        throw IntervalError("punctual interval " + iv.str() + " is not allowed");
      throw IntervalError("interval " + iv.str() + " is empty");
    }
  }
  return iv;
}

bool TimeInterval::contains(const Rational& d) const {
  if (lower_closed_ ? d < lower_ : d <= lower_)
    return false;
  if (!upper_)
    return true;
  return upper_closed_ ? d <= *upper_ : d < *upper_;
}

TimeInterval TimeInterval::scaled(const Rational& factor) const {
  TimeInterval iv = *this;
  iv.lower_ = lower_ * factor;
  if (upper_)
    iv.upper_ = *upper_ * factor;
  return iv;
}

std::string TimeInterval::str() const {
  std::string out;
  out += lower_closed_ ? '[' : '(';
  out += lower_.str();
  out += ',';
  if (upper_) {
    out += upper_->str();
    out += upper_closed_ ? ']' : ')';
  } else {
    out += "inf)";
  }
  return out;
}

} // namespace mitlplan
