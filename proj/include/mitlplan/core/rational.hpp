#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace mitlplan {

/// Exact rational number kept in lowest terms with a positive denominator.
///
/// Time stamps, transition weights, clock values and interval bounds are all
/// Rationals. Arithmetic is carried out in 128-bit intermediates and throws
/// std::overflow_error if a normalized result does not fit in 64 bits.
class Rational {
public:
  constexpr Rational() = default;
  Rational(std::int64_t value) : num_(value) {} // NOLINT(implicit)
  Rational(std::int64_t numerator, std::int64_t denominator);

  /// Parses "3", "-7/10", "2.5" or "0.125".
  static Rational parse(std::string_view text);

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

  /// "5/2", "3", "-1/4".
  std::string str() const;
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  std::size_t hash() const;

private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

std::int64_t lcm_checked(std::int64_t a, std::int64_t b);

/// A point of the extended time domain: a nonnegative rational or infinity.
/// Clock valuations saturate to infinity once they exceed the largest
/// constant of their automaton.
class TimeValue {
public:
  TimeValue() = default;
  TimeValue(Rational value) : value_(value) {} // NOLINT(implicit)

  static TimeValue infinity() {
    TimeValue t;
    t.infinite_ = true;
    return t;
  }

  bool is_infinite() const { return infinite_; }
  /// Precondition: !is_infinite().
  const Rational& value() const { return value_; }

  friend bool operator==(const TimeValue&, const TimeValue&) = default;
  friend std::strong_ordering operator<=>(const TimeValue& lhs, const TimeValue& rhs);

  std::string str() const { return infinite_ ? "inf" : value_.str(); }
  std::size_t hash() const { return infinite_ ? 0x9e3779b97f4a7c15ULL : value_.hash(); }

private:
  Rational value_{};
  bool infinite_ = false;
};

inline void hash_combine(std::size_t& seed, std::size_t value) {
  seed ^= value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

} // namespace mitlplan

template <>
struct std::hash<mitlplan::Rational> {
  std::size_t operator()(const mitlplan::Rational& r) const noexcept { return r.hash(); }
};

template <>
struct std::hash<mitlplan::TimeValue> {
  std::size_t operator()(const mitlplan::TimeValue& t) const noexcept { return t.hash(); }
};
