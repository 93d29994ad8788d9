#include "mitlplan/core/scale.hpp"

#include <stdexcept>

namespace mitlplan {

std::int64_t denominator_lcm(std::span<const Rational> values) {
  std::int64_t factor = 1;
  for (const auto& v : values)
    factor = lcm_checked(factor, v.denominator());
  return factor;
}

IntegerScaling scale_to_integers(std::span<const Rational> values) {
  IntegerScaling out;
  out.factor = denominator_lcm(values);
  out.values.reserve(values.size());
  for (const auto& v : values) {
    if (v.is_negative())
      throw std::invalid_argument("scale_to_integers expects nonnegative values, got " + v.str());
    const Rational scaled = v * Rational(out.factor);
    out.values.push_back(scaled.numerator());
  }
  return out;
}

} // namespace mitlplan
