#include "mitlplan/core/atoms.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

#include "mitlplan/core/rational.hpp"

namespace mitlplan {

AtomSet::AtomSet(std::initializer_list<std::string> atoms) : AtomSet(std::vector<std::string>(atoms)) {}

AtomSet::AtomSet(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {
  std::sort(atoms_.begin(), atoms_.end());
  atoms_.erase(std::unique(atoms_.begin(), atoms_.end()), atoms_.end());
}

bool AtomSet::contains(const std::string& atom) const {
  return std::binary_search(atoms_.begin(), atoms_.end(), atom);
}

void AtomSet::insert(const std::string& atom) {
  auto it = std::lower_bound(atoms_.begin(), atoms_.end(), atom);
  if (it == atoms_.end() || *it != atom)
    atoms_.insert(it, atom);
}

AtomSet AtomSet::united(const AtomSet& other) const {
  AtomSet out;
  std::set_union(atoms_.begin(), atoms_.end(), other.atoms_.begin(), other.atoms_.end(),
                 std::back_inserter(out.atoms_));
  return out;
}

AtomSet AtomSet::intersected(const AtomSet& other) const {
  AtomSet out;
  std::set_intersection(atoms_.begin(), atoms_.end(), other.atoms_.begin(), other.atoms_.end(),
                        std::back_inserter(out.atoms_));
  return out;
}

bool AtomSet::disjoint(const AtomSet& other) const { return intersected(other).empty(); }

bool AtomSet::subset_of(const AtomSet& other) const {
  return std::includes(other.atoms_.begin(), other.atoms_.end(), atoms_.begin(), atoms_.end());
}

std::string AtomSet::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (i)
      out += ',';
    out += atoms_[i];
  }
  return out + "}";
}

std::size_t AtomSet::hash() const {
  std::size_t seed = atoms_.size();
  for (const auto& a : atoms_)
    hash_combine(seed, std::hash<std::string>{}(a));
  return seed;
}

std::vector<AtomSet> all_letters(const AtomSet& alphabet) {
  const auto& atoms = alphabet.atoms();
  if (atoms.size() > 20)
    throw std::length_error("alphabet too large to enumerate letters");
  std::vector<AtomSet> letters;
  const std::size_t count = std::size_t{1} << atoms.size();
  letters.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    std::vector<std::string> chosen;
    for (std::size_t i = 0; i < atoms.size(); ++i)
      if (mask & (std::size_t{1} << i))
        chosen.push_back(atoms[i]);
    letters.emplace_back(std::move(chosen));
  }
  return letters;
}

} // namespace mitlplan
