#pragma once

#include <cstddef>
#include <cstdlib>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>

namespace thetacat {

// Entries kept per cache; THETACAT_CACHE_LIMIT overrides. Past the limit,
// values are still computed and returned but no longer retained.
inline std::size_t cache_limit() {
  static const std::size_t limit = [] {
    if (const char* env = std::getenv("THETACAT_CACHE_LIMIT")) {
      try {
        return static_cast<std::size_t>(std::stoull(env));
      } catch (...) {
      }
    }
    return std::numeric_limits<std::size_t>::max();
  }();
  return limit;
}

// Read-through cache. Concurrent misses may compute the same value twice;
// the first insertion wins and every caller sees that one afterwards.
template <class Key, class Value>
class Memo {
 public:
  using Ptr = std::shared_ptr<const Value>;

  template <class Make>
  Ptr get(const Key& key, Make&& make) const {
    {
      std::shared_lock lock(mutex_);
      if (auto it = map_.find(key); it != map_.end()) return it->second;
    }
    Ptr value = std::make_shared<const Value>(make());
    std::unique_lock lock(mutex_);
    if (auto it = map_.find(key); it != map_.end()) return it->second;
    if (map_.size() >= cache_limit()) return value;
    return map_.emplace(key, std::move(value)).first->second;
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return map_.size();
  }

 private:
  mutable std::shared_mutex mutex_;
  mutable std::map<Key, Ptr> map_;
};

}  // namespace thetacat
