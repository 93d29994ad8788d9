#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mitlplan/core/atoms.hpp"
#include "mitlplan/core/rational.hpp"

namespace mitlplan {

template <typename T>
struct Stamped {
  T value;
  Rational time;

  friend bool operator==(const Stamped&, const Stamped&) = default;
};

class LassoError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Ultimately periodic timed sequence: a finite prefix followed by a cycle
/// repeated forever, each repetition shifted by `period` time units.
///
/// Invariants: the cycle is non-empty, the period is positive, and time
/// stamps increase strictly across the prefix, into the cycle and across
/// every unrolling.
template <typename T>
class Lasso {
public:
  Lasso(std::vector<Stamped<T>> prefix, std::vector<Stamped<T>> cycle, Rational period)
      : prefix_(std::move(prefix)), cycle_(std::move(cycle)), period_(period) {
    if (cycle_.empty())
      throw LassoError("lasso cycle must be non-empty");
    if (period_ <= Rational(0))
      throw LassoError("lasso cycle period must be positive");
    const Stamped<T>* prev = nullptr;
    for (const auto* part : {&prefix_, &cycle_})
      for (const auto& step : *part) {
        if (step.time.is_negative())
          throw LassoError("negative time stamp " + step.time.str());
        if (prev && !(prev->time < step.time))
          throw LassoError("time stamps must increase strictly (" + prev->time.str() + " then " +
                           step.time.str() + ")");
        prev = &step;
      }
    if (!(cycle_.back().time < cycle_.front().time + period_))
      throw LassoError("cycle period " + period_.str() + " too short for the cycle stamps");
  }

  const std::vector<Stamped<T>>& prefix() const { return prefix_; }
  const std::vector<Stamped<T>>& cycle() const { return cycle_; }
  const Rational& period() const { return period_; }
  std::size_t prefix_length() const { return prefix_.size(); }
  std::size_t cycle_length() const { return cycle_.size(); }

  /// Index of position i inside the stored prefix/cycle (positions beyond the
  /// prefix fold onto their cycle slot).
  std::size_t slot(std::size_t i) const {
    return i < prefix_.size() ? i : prefix_.size() + (i - prefix_.size()) % cycle_.size();
  }

  const T& value_at(std::size_t i) const {
    if (i < prefix_.size())
      return prefix_[i].value;
    return cycle_[(i - prefix_.size()) % cycle_.size()].value;
  }

  Rational time_at(std::size_t i) const {
    if (i < prefix_.size())
      return prefix_[i].time;
    const std::size_t offset = i - prefix_.size();
    const auto repetition = static_cast<std::int64_t>(offset / cycle_.size());
    return cycle_[offset % cycle_.size()].time + period_ * Rational(repetition);
  }

  Stamped<T> at(std::size_t i) const { return {value_at(i), time_at(i)}; }

  /// Prefix followed by `count` shifted copies of the cycle.
  std::vector<Stamped<T>> unroll(std::size_t count) const {
    std::vector<Stamped<T>> out(prefix_);
    out.reserve(prefix_.size() + count * cycle_.size());
    for (std::size_t k = 0; k < count; ++k) {
      const Rational shift = period_ * Rational(static_cast<std::int64_t>(k));
      for (const auto& step : cycle_)
        out.push_back({step.value, step.time + shift});
    }
    return out;
  }

  /// The first `n` positions.
  std::vector<Stamped<T>> take(std::size_t n) const {
    std::vector<Stamped<T>> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
      out.push_back(at(i));
    return out;
  }

  /// Same infinite sequence with the shortest cycle and the shortest prefix.
  Lasso canonical() const {
    std::vector<Stamped<T>> cycle = cycle_;
    Rational period = period_;
    const std::size_t n = cycle.size();
    for (std::size_t p = 1; p < n; ++p) {
      if (n % p != 0)
        continue;
      const Rational shift = cycle[p].time - cycle[0].time;
      if (!(shift * Rational(static_cast<std::int64_t>(n / p)) == period))
        continue;
      bool periodic = true;
      for (std::size_t s = 0; s + p < n && periodic; ++s)
        periodic = cycle[s + p].value == cycle[s].value && cycle[s + p].time == cycle[s].time + shift;
      if (periodic) {
        cycle.resize(p);
        period = shift;
        break;
      }
    }
    std::vector<Stamped<T>> prefix = prefix_;
    while (!prefix.empty() && prefix.back().value == cycle.back().value &&
           prefix.back().time == cycle.back().time - period) {
      cycle.insert(cycle.begin(), prefix.back());
      cycle.pop_back();
      prefix.pop_back();
    }
    return Lasso(std::move(prefix), std::move(cycle), period);
  }

  /// Applies `f` to every stored value, keeping the time stamps.
  template <typename F>
  auto map(F&& f) const -> Lasso<decltype(f(std::declval<const T&>()))> {
    using U = decltype(f(std::declval<const T&>()));
    std::vector<Stamped<U>> prefix, cycle;
    prefix.reserve(prefix_.size());
    cycle.reserve(cycle_.size());
    for (const auto& s : prefix_)
      prefix.push_back({f(s.value), s.time});
    for (const auto& s : cycle_)
      cycle.push_back({f(s.value), s.time});
    return Lasso<U>(std::move(prefix), std::move(cycle), period_);
  }

  /// Multiplies every stamp and the period by a positive factor.
  Lasso scaled(const Rational& factor) const {
    auto scale = [&](std::vector<Stamped<T>> steps) {
      for (auto& s : steps)
        s.time *= factor;
      return steps;
    };
    return Lasso(scale(prefix_), scale(cycle_), period_ * factor);
  }

  friend bool operator==(const Lasso&, const Lasso&) = default;

private:
  std::vector<Stamped<T>> prefix_;
  std::vector<Stamped<T>> cycle_;
  Rational period_;
};

using TimedLetter = Stamped<AtomSet>;
using LassoTimedWord = Lasso<AtomSet>;

template <typename T>
std::vector<Stamped<T>> unroll(const Lasso<T>& lasso, std::size_t count) {
  return lasso.unroll(count);
}

} // namespace mitlplan
