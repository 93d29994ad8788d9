#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mitlplan/mitl/formula.hpp"
#include "mitlplan/tba/automaton.hpp"

namespace mitlplan::tba {

class UnsupportedFragment : public std::runtime_error {
public:
  UnsupportedFragment(const std::string& subformula, const std::string& path);
  const std::string& subformula() const { return subformula_; }
  const std::string& path() const { return path_; }

private:
  std::string subformula_;
  std::string path_;
};

struct TranslateOptions {
  /// Atoms the automaton reads; defaults to the atoms of the formula.
  std::optional<AtomSet> alphabet;
  /// Letters that can actually occur (each restricted to the alphabet).
  /// Defaults to every subset of the alphabet. Words using other letters are
  /// rejected, so only pass this when the letter set is known.
  std::optional<std::vector<AtomSet>> letters;
};

/// Builds a TBA for formulas in the supported fragment:
///   propositional b;  F[I] b;  G[I] b;  b1 U[I] b2;  X[I] b;
///   G F[I] b  with I = [0,u], [0,u) or [0,inf);
///   G (b -> X G[I] c)  with I starting at a closed 0;
///   and conjunctions of these.
/// Here b, b1, b2, c are propositional. Each construction uses at most one
/// clock; conjunctions go through `intersect`.
TimedBuchiAutomaton translate_mitl(const mitl::Formula& formula, const TranslateOptions& options = {});

/// True when translate_mitl accepts the formula.
bool in_translatable_fragment(const mitl::Formula& formula);

} // namespace mitlplan::tba
