#pragma once

#include <map>
#include <mutex>

namespace nccat {

/// Insert-only cache. Entries live in map nodes, so references returned by
/// get_or_compute stay valid for the table's lifetime. The compute callback
/// runs without the lock held and may recurse into the same table; when two
/// threads race on a key the first insertion wins (values are equal anyway).
template <class Key, class Value>
class MemoTable {
 public:
  template <class Fn>
  const Value& get_or_compute(const Key& key, Fn&& compute) {
    {
      std::lock_guard lock(mutex_);
      if (auto it = entries_.find(key); it != entries_.end()) return it->second;
    }
    Value v = compute();
    std::lock_guard lock(mutex_);
    return entries_.try_emplace(key, std::move(v)).first->second;
  }

 private:
  std::mutex mutex_;
  std::map<Key, Value> entries_;
};

}  // namespace nccat
