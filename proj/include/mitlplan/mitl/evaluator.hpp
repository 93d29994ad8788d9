#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mitlplan/core/lasso.hpp"
#include "mitlplan/mitl/formula.hpp"

namespace mitlplan::mitl {

/// Truth of one formula at every position of a lasso word, stored as an
/// ultimately periodic sequence: positions at or beyond `stable` repeat with
/// the word's cycle length.
class TruthTable {
public:
  TruthTable(std::size_t stable, std::size_t cycle_length, std::vector<char> values)
      : stable_(stable), cycle_(cycle_length), values_(std::move(values)) {}

  bool at(std::size_t i) const {
    if (i < values_.size())
      return values_[i] != 0;
    return values_[stable_ + (i - stable_) % cycle_] != 0;
  }
  std::size_t stable() const { return stable_; }

private:
  std::size_t stable_;
  std::size_t cycle_;
  std::vector<char> values_;
};

/// Point-wise MITL semantics over a lasso timed word, decided exactly.
///
/// Each subformula is evaluated bottom-up into a TruthTable. Beyond the word
/// prefix all time differences repeat with the cycle, so a temporal operator
/// applied to an ultimately periodic operand is again ultimately periodic
/// from max(prefix length, operand stable point). Bounded windows are
/// scanned directly; unbounded ones are decided by whether the operand holds
/// somewhere in its periodic part.
TruthTable truth_table(const LassoTimedWord& word, const Formula& formula);

/// (word, position) |= formula.
bool evaluate_at(const LassoTimedWord& word, std::size_t position, const Formula& formula);

/// (word, 0) |= formula.
bool satisfies(const LassoTimedWord& word, const Formula& formula);

/// For a violated formula, the position that witnesses the violation: for
/// G[I] psi the first position within I where psi fails, otherwise 0.
/// Returns nullopt when the formula holds.
std::optional<std::size_t> first_violation(const LassoTimedWord& word, const Formula& formula);

} // namespace mitlplan::mitl
