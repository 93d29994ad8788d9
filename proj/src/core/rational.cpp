#include "mitlplan/core/rational.hpp"

#include <cctype>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace mitlplan {

namespace {

__extension__ typedef __int128 wide;

std::int64_t narrow(wide value) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("rational arithmetic overflow");
  return static_cast<std::int64_t>(value);
}

wide gcd_wide(wide a, wide b) {
  if (a < 0)
    a = -a;
  if (b < 0)
    b = -b;
  while (b != 0) {
    wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Normalizes num/den (den != 0) into lowest terms and narrows back.
void normalize(wide num, wide den, std::int64_t& out_num, std::int64_t& out_den) {
  if (den == 0)
    throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  wide g = gcd_wide(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num == 0)
    den = 1;
  out_num = narrow(num);
  out_den = narrow(den);
}

} // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  normalize(numerator, denominator, num_, den_);
}

Rational Rational::parse(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw std::invalid_argument("invalid rational '" + std::string(text) + "'");
  };
  std::size_t pos = 0;
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
    ++pos;
  std::size_t end = text.size();
  while (end > pos && std::isspace(static_cast<unsigned char>(text[end - 1])))
    --end;
  text = text.substr(pos, end - pos);
  if (text.empty())
    return fail();

  bool negative = false;
  std::size_t i = 0;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    ++i;
  }
  auto read_digits = [&](wide& acc, int& count) {
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      acc = acc * 10 + (text[i] - '0');
      if (acc > std::numeric_limits<std::int64_t>::max())
        throw std::overflow_error("rational literal too large");
      ++count;
      ++i;
    }
  };

  wide num = 0;
  int digits = 0;
  read_digits(num, digits);
  if (digits == 0)
    return fail();
  wide den = 1;
  if (i < text.size() && text[i] == '.') {
    ++i;
    int frac_digits = 0;
    wide frac = 0;
    read_digits(frac, frac_digits);
    if (frac_digits == 0)
      return fail();
    for (int k = 0; k < frac_digits; ++k) {
      den *= 10;
      num *= 10;
      if (den > std::numeric_limits<std::int64_t>::max())
        throw std::overflow_error("rational literal too precise");
    }
    num += frac;
  } else if (i < text.size() && text[i] == '/') {
    ++i;
    den = 0;
    int den_digits = 0;
    read_digits(den, den_digits);
    if (den_digits == 0 || den == 0)
      return fail();
  }
  if (i != text.size())
    return fail();
  Rational r;
  normalize(negative ? -num : num, den, r.num_, r.den_);
  return r;
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = narrow(-static_cast<wide>(num_));
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  wide n = static_cast<wide>(num_) * rhs.den_ + static_cast<wide>(rhs.num_) * den_;
  wide d = static_cast<wide>(den_) * rhs.den_;
  normalize(n, d, num_, den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  normalize(static_cast<wide>(num_) * rhs.num_, static_cast<wide>(den_) * rhs.den_, num_, den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0)
    throw std::domain_error("rational division by zero");
  normalize(static_cast<wide>(num_) * rhs.den_, static_cast<wide>(den_) * rhs.num_, num_, den_);
  return *this;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  wide l = static_cast<wide>(lhs.num_) * rhs.den_;
  wide r = static_cast<wide>(rhs.num_) * lhs.den_;
  if (l < r)
    return std::strong_ordering::less;
  if (l > r)
    return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  if (den_ == 1)
    return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::size_t Rational::hash() const {
  std::size_t seed = std::hash<std::int64_t>{}(num_);
  hash_combine(seed, std::hash<std::int64_t>{}(den_));
  return seed;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.str(); }

std::int64_t lcm_checked(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0)
    return 0;
  wide g = gcd_wide(a, b);
  wide l = static_cast<wide>(a) / g * b;
  return narrow(l < 0 ? -l : l);
}

std::strong_ordering operator<=>(const TimeValue& lhs, const TimeValue& rhs) {
  if (lhs.infinite_ || rhs.infinite_) {
    if (lhs.infinite_ && rhs.infinite_)
      return std::strong_ordering::equal;
    return lhs.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return lhs.value_ <=> rhs.value_;
}

} // namespace mitlplan
