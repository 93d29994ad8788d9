#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace mitlplan {

/// Finite set of atomic propositions, stored sorted and without duplicates.
class AtomSet {
public:
  AtomSet() = default;
  AtomSet(std::initializer_list<std::string> atoms);
  explicit AtomSet(std::vector<std::string> atoms);

  bool contains(const std::string& atom) const;
  bool empty() const { return atoms_.empty(); }
  std::size_t size() const { return atoms_.size(); }

  void insert(const std::string& atom);
  AtomSet united(const AtomSet& other) const;
  AtomSet intersected(const AtomSet& other) const;
  bool disjoint(const AtomSet& other) const;
  bool subset_of(const AtomSet& other) const;

  const std::vector<std::string>& atoms() const { return atoms_; }
  auto begin() const { return atoms_.begin(); }
  auto end() const { return atoms_.end(); }

  /// "{}" or "{a,b}".
  std::string str() const;
  std::size_t hash() const;

  friend bool operator==(const AtomSet&, const AtomSet&) = default;
  friend auto operator<=>(const AtomSet&, const AtomSet&) = default;

private:
  std::vector<std::string> atoms_;
};

/// All 2^|alphabet| letters over the alphabet, in a fixed order.
std::vector<AtomSet> all_letters(const AtomSet& alphabet);

} // namespace mitlplan

template <>
struct std::hash<mitlplan::AtomSet> {
  std::size_t operator()(const mitlplan::AtomSet& s) const noexcept { return s.hash(); }
};
