#include "signpart/memo_cache.hpp"

#include <cstdio>
#include <cstring>
#include <mutex>

namespace signpart {

namespace {

std::size_t fnv1a(const Part* data, std::size_t count) {
  std::uint64_t h = 1469598103934665603ull;
  const unsigned char* bytes = reinterpret_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < count * sizeof(Part); ++i) {
    h ^= bytes[i];
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

constexpr char kMagic[8] = {'S', 'P', 'M', 'E', 'M', 'O', '0', '1'};

}  // namespace

CacheKey CacheKey::make(const std::vector<Part>& lambda,
                        const std::vector<Part>& mu, std::size_t mu_from) {
  CacheKey k;
  k.packed.reserve(1 + lambda.size() + (mu.size() - mu_from));
  k.packed.push_back(static_cast<Part>(lambda.size()));
  k.packed.insert(k.packed.end(), lambda.begin(), lambda.end());
  k.packed.insert(k.packed.end(), mu.begin() + static_cast<std::ptrdiff_t>(mu_from),
                  mu.end());
  k.hash = fnv1a(k.packed.data(), k.packed.size());
  return k;
}

MemoCache::MemoCache(std::size_t max_entries)
    : stripes_(kStripes), max_entries_(max_entries) {}

bool MemoCache::lookup_narrow(const CacheKey& k, long long& out) const {
  Stripe& s = stripe_for(k);
  std::shared_lock lock(s.mutex);
  auto it = s.narrow.find(k);
  if (it == s.narrow.end()) return false;
  out = it->second;
  return true;
}

void MemoCache::insert_narrow(const CacheKey& k, long long v) {
  if (entries_.load(std::memory_order_relaxed) >= max_entries_) return;
  Stripe& s = stripe_for(k);
  std::unique_lock lock(s.mutex);
  if (s.narrow.emplace(k, v).second) {
    entries_.fetch_add(1, std::memory_order_relaxed);
  }
}

bool MemoCache::lookup_wide(const CacheKey& k, CharValue& out) const {
  Stripe& s = stripe_for(k);
  std::shared_lock lock(s.mutex);
  auto it = s.wide.find(k);
  if (it == s.wide.end()) return false;
  out = it->second;
  return true;
}

void MemoCache::insert_wide(const CacheKey& k, const CharValue& v) {
  if (entries_.load(std::memory_order_relaxed) >= max_entries_) return;
  Stripe& s = stripe_for(k);
  std::unique_lock lock(s.mutex);
  if (s.wide.emplace(k, v).second) {
    entries_.fetch_add(1, std::memory_order_relaxed);
  }
}

std::size_t MemoCache::size() const {
  return entries_.load(std::memory_order_relaxed);
}

void MemoCache::clear() {
  for (Stripe& s : stripes_) {
    std::unique_lock lock(s.mutex);
    s.narrow.clear();
    s.wide.clear();
  }
  entries_.store(0);
}

std::uint64_t cache_format_fingerprint() {
  // Probe the enumeration order the memo keys depend on.
  std::string probe = "layout-v1;";
  for (const Partition& p : partitions_of(8)) {
    probe += p.to_string();
    probe += ';';
  }
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : probe) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

bool MemoCache::save(const std::string& path) const {
  std::FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) return false;
  bool ok = std::fwrite(kMagic, 1, sizeof(kMagic), f) == sizeof(kMagic);
  std::uint64_t fp = cache_format_fingerprint();
  ok = ok && std::fwrite(&fp, sizeof(fp), 1, f) == 1;
  std::uint64_t count = 0;
  for (const Stripe& s : stripes_) {
    std::shared_lock lock(s.mutex);
    count += s.narrow.size();
  }
  ok = ok && std::fwrite(&count, sizeof(count), 1, f) == 1;
  for (const Stripe& s : stripes_) {
    std::shared_lock lock(s.mutex);
    for (const auto& [key, value] : s.narrow) {
      std::uint32_t len = static_cast<std::uint32_t>(key.packed.size());
      ok = ok && std::fwrite(&len, sizeof(len), 1, f) == 1;
      ok = ok && std::fwrite(key.packed.data(), sizeof(Part), len, f) == len;
      long long v = value;
      ok = ok && std::fwrite(&v, sizeof(v), 1, f) == 1;
      if (!ok) break;
    }
    if (!ok) break;
  }
  std::fclose(f);
  return ok;
}

bool MemoCache::load(const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "rb");
  if (!f) return false;
  auto fail = [&]() {
    std::fclose(f);
    clear();
    return false;
  };
  char magic[8];
  if (std::fread(magic, 1, sizeof(magic), f) != sizeof(magic) ||
      std::memcmp(magic, kMagic, sizeof(kMagic)) != 0) {
    return fail();
  }
  std::uint64_t fp = 0;
  if (std::fread(&fp, sizeof(fp), 1, f) != 1 || fp != cache_format_fingerprint()) {
    return fail();
  }
  std::uint64_t count = 0;
  if (std::fread(&count, sizeof(count), 1, f) != 1) return fail();
  for (std::uint64_t i = 0; i < count; ++i) {
    std::uint32_t len = 0;
    if (std::fread(&len, sizeof(len), 1, f) != 1 || len > (1u << 20)) return fail();
    CacheKey k;
    k.packed.resize(len);
    if (std::fread(k.packed.data(), sizeof(Part), len, f) != len) return fail();
    k.hash = fnv1a(k.packed.data(), k.packed.size());
    long long v = 0;
    if (std::fread(&v, sizeof(v), 1, f) != 1) return fail();
    insert_narrow(k, v);
  }
  std::fclose(f);
  return true;
}

}  // namespace signpart
