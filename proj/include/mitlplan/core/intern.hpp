#pragma once

#include <cstddef>
#include <deque>
#include <unordered_map>

namespace mitlplan {

/// Hash-consing table: assigns dense ids to distinct keys. References
/// returned by `at` stay valid while the table grows.
template <typename Key, typename Hash = std::hash<Key>>
class Interner {
public:
  /// Returns (id, inserted).
  std::pair<std::size_t, bool> intern(const Key& key) {
    auto [it, inserted] = index_.try_emplace(key, keys_.size());
    if (inserted)
      keys_.push_back(key);
    return {it->second, inserted};
  }

  const Key& at(std::size_t id) const { return keys_[id]; }
  std::size_t size() const { return keys_.size(); }

private:
  std::deque<Key> keys_;
  std::unordered_map<Key, std::size_t, Hash> index_;
};

} // namespace mitlplan
