#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "signpart/charvalue.hpp"
#include "signpart/partition.hpp"

namespace signpart {

// Key for one memoized character value: the row partition followed by the
// still-unpeeled suffix of the column partition, packed into one vector.
struct CacheKey {
  std::vector<Part> packed;  // [len(lambda), lambda..., mu_suffix...]
  std::size_t hash = 0;

  static CacheKey make(const std::vector<Part>& lambda,
                       const std::vector<Part>& mu, std::size_t mu_from);
  bool operator==(const CacheKey& o) const { return packed == o.packed; }
};

struct CacheKeyHash {
  std::size_t operator()(const CacheKey& k) const { return k.hash; }
};

// Concurrent memo table for character values. Striped: readers and writers
// may run concurrently; inserts are idempotent (same key implies same
// value), so a lost insert only costs recomputation. Narrow (int64) and
// wide (arbitrary precision) values live in separate maps.
class MemoCache {
 public:
  explicit MemoCache(std::size_t max_entries = kUnbounded);

  bool lookup_narrow(const CacheKey& k, long long& out) const;
  void insert_narrow(const CacheKey& k, long long v);
  bool lookup_wide(const CacheKey& k, CharValue& out) const;
  void insert_wide(const CacheKey& k, const CharValue& v);

  std::size_t size() const;
  void clear();

  // Snapshot I/O. The file embeds a format version and an ordering
  // fingerprint of this build; load() discards mismatched or corrupt files
  // and returns false. Only narrow entries are persisted.
  bool save(const std::string& path) const;
  bool load(const std::string& path);

  static constexpr std::size_t kUnbounded = static_cast<std::size_t>(-1);

 private:
  static constexpr std::size_t kStripes = 64;
  struct Stripe {
    mutable std::shared_mutex mutex;
    std::unordered_map<CacheKey, long long, CacheKeyHash> narrow;
    std::unordered_map<CacheKey, CharValue, CacheKeyHash> wide;
  };
  Stripe& stripe_for(const CacheKey& k) const {
    return stripes_[k.hash % kStripes];
  }

  mutable std::vector<Stripe> stripes_;
  std::atomic<std::size_t> entries_{0};
  std::size_t max_entries_;
};

// Fingerprint of the canonical partition ordering and snapshot layout;
// snapshots from builds with a different fingerprint are rejected.
std::uint64_t cache_format_fingerprint();

}  // namespace signpart
