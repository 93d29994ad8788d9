#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mitlplan/core/rational.hpp"

namespace mitlplan {

struct IntegerScaling {
  std::vector<std::int64_t> values;
  std::int64_t factor = 1;
};

/// Multiplies nonnegative rationals by the lcm of their denominators so that
/// every value becomes an integer. Order and ratios are preserved; an empty
/// input yields factor 1.
IntegerScaling scale_to_integers(std::span<const Rational> values);

/// lcm of the denominators only.
std::int64_t denominator_lcm(std::span<const Rational> values);

} // namespace mitlplan
