#include "signpart/characters.hpp"

#include <cstdint>
#include <exception>
#include <sstream>
#include <unordered_map>
#include <utility>

#include "signpart/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace signpart {

namespace {

// Internal signal: an int64 accumulation overflowed, redo in wide arithmetic.
struct NarrowOverflow {};

// All character values of S_n fit comfortably in int64 up to this n (the
// largest dimension grows far slower than 2^63); every add below is still
// overflow-checked, so the constant is a fast-path hint, not a safety limit.
constexpr Part kNarrowMaxN = 30;

long long narrow_rec(const std::vector<Part>& lam, const std::vector<Part>& mu,
                     std::size_t mu_idx, MemoCache& cache) {
  if (mu_idx == mu.size()) return 1;  // lam is empty here: sizes always match
  const CacheKey key = CacheKey::make(lam, mu, mu_idx);
  long long narrow_hit = 0;
  if (cache.lookup_narrow(key, narrow_hit)) return narrow_hit;
  CharValue wide_hit;
  if (cache.lookup_wide(key, wide_hit)) {
    if (fits_int64(wide_hit)) return wide_hit.convert_to<long long>();
    throw NarrowOverflow{};
  }
  const Part q = mu[mu_idx];
  long long acc = 0;
  for (const auto& [rest, leg] : detail::hook_removals(lam, q)) {
    const long long sub = narrow_rec(rest, mu, mu_idx + 1, cache);
    long long term = sub;
    if (leg % 2 != 0 && __builtin_sub_overflow(0LL, sub, &term)) throw NarrowOverflow{};
    if (__builtin_add_overflow(acc, term, &acc)) throw NarrowOverflow{};
  }
  cache.insert_narrow(key, acc);
  return acc;
}

CharValue wide_rec(const std::vector<Part>& lam, const std::vector<Part>& mu,
                   std::size_t mu_idx, MemoCache& cache) {
  if (mu_idx == mu.size()) return 1;
  const CacheKey key = CacheKey::make(lam, mu, mu_idx);
  long long narrow_hit = 0;
  if (cache.lookup_narrow(key, narrow_hit)) return CharValue(narrow_hit);
  CharValue wide_hit;
  if (cache.lookup_wide(key, wide_hit)) return wide_hit;
  const Part q = mu[mu_idx];
  CharValue acc = 0;
  for (const auto& [rest, leg] : detail::hook_removals(lam, q)) {
    const CharValue sub = wide_rec(rest, mu, mu_idx + 1, cache);
    if (leg % 2 == 0) acc += sub; else acc -= sub;
  }
  if (fits_int64(acc)) cache.insert_narrow(key, acc.convert_to<long long>());
  else cache.insert_wide(key, acc);
  return acc;
}

void require_same_size(const Partition& lambda, const Partition& mu) {
  if (lambda.sum() == mu.sum()) return;
  std::ostringstream os;
  os << "size mismatch: |" << lambda.to_string() << "| = " << lambda.sum()
     << " but |" << mu.to_string() << "| = " << mu.sum();
  throw SizeMismatch(os.str());
}

}  // namespace

CharValue mn_char(const Partition& lambda, const Partition& mu, MemoCache& cache) {
  require_same_size(lambda, mu);
  if (lambda.sum() <= kNarrowMaxN) {
    try {
      return CharValue(narrow_rec(lambda.parts(), mu.parts(), 0, cache));
    } catch (const NarrowOverflow&) {
      // fall through to wide arithmetic
    }
  }
  return wide_rec(lambda.parts(), mu.parts(), 0, cache);
}

CharValue mn_char_small_first(const Partition& lambda, const Partition& mu,
                              MemoCache& cache) {
  require_same_size(lambda, mu);
  // Peels mu's smallest remaining part. Keeps a private memo (keyed by the
  // remaining prefix of mu) so the cross-check shares nothing with mn_char.
  std::unordered_map<CacheKey, CharValue, CacheKeyHash> memo;
  struct Rec {
    const std::vector<Part>& mu;
    std::unordered_map<CacheKey, CharValue, CacheKeyHash>& memo;
    CharValue operator()(const std::vector<Part>& lam, std::size_t mu_end) {
      if (mu_end == 0) return 1;
      const std::vector<Part> remaining(mu.begin(),
                                        mu.begin() + static_cast<std::ptrdiff_t>(mu_end));
      const CacheKey key = CacheKey::make(lam, remaining, 0);
      if (auto it = memo.find(key); it != memo.end()) return it->second;
      const Part q = mu[mu_end - 1];
      CharValue acc = 0;
      for (const auto& [rest, leg] : detail::hook_removals(lam, q)) {
        const CharValue sub = (*this)(rest, mu_end - 1);
        if (leg % 2 == 0) acc += sub; else acc -= sub;
      }
      memo.emplace(key, acc);
      return acc;
    }
  } rec{mu.parts(), memo};
  (void)cache;  // signature kept parallel to mn_char; deliberately unused
  return rec(lambda.parts(), mu.parts().size());
}

namespace {

CharTable build_table(Part n, MemoCache& cache, int capacity, bool parallel) {
  if (n < 0) throw NotAPartition("table size must be nonnegative");
  if (n > capacity) {
    std::ostringstream os;
    os << "n = " << n << " exceeds capacity " << capacity;
    throw CapacityExceeded(os.str());
  }
  CharTable t;
  t.n = n;
  t.rows = partitions_of(n);
  t.cols = t.rows;
  const std::size_t m = t.rows.size();
  t.values.assign(m, std::vector<CharValue>(m));
  std::exception_ptr first_error = nullptr;
  if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(m); ++i) {
      try {
        for (std::size_t j = 0; j < m; ++j) {
          t.values[static_cast<std::size_t>(i)][j] =
              mn_char(t.rows[static_cast<std::size_t>(i)], t.cols[j], cache);
        }
      } catch (...) {
#ifdef _OPENMP
#pragma omp critical(signpart_table_error)
#endif
        if (!first_error) first_error = std::current_exception();
      }
    }
  } else {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        t.values[i][j] = mn_char(t.rows[i], t.cols[j], cache);
  }
  if (first_error) std::rethrow_exception(first_error);
  return t;
}

}  // namespace

CharTable char_table(Part n, MemoCache& cache, int capacity) {
  return build_table(n, cache, capacity, /*parallel=*/true);
}

CharTable char_table_serial(Part n, MemoCache& cache, int capacity) {
  return build_table(n, cache, capacity, /*parallel=*/false);
}

CharValue dimension(const Partition& lambda) {
  CharValue hooks = 1;
  const std::vector<Part> conj = conjugate(lambda).parts();
  for (std::size_t i = 0; i < lambda.parts().size(); ++i) {
    for (Part j = 1; j <= lambda.parts()[i]; ++j) {
      const Part hook = lambda.parts()[i] - j + conj[static_cast<std::size_t>(j - 1)] -
                        static_cast<Part>(i + 1) + 1;
      hooks *= hook;
    }
  }
  CharValue fact = 1;
  for (Part k = 2; k <= lambda.sum(); ++k) fact *= k;
  return fact / hooks;  // exact: hook products divide n!
}

CharValue class_size_z(const Partition& mu) {
  CharValue z = 1;
  const auto& parts = mu.parts();
  std::size_t i = 0;
  while (i < parts.size()) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    const auto mult = static_cast<Part>(j - i);
    for (Part r = 0; r < mult; ++r) z *= parts[i];
    for (Part r = 2; r <= mult; ++r) z *= r;
    i = j;
  }
  return z;
}

int conjugate_sign(const Partition& mu) {
  return (mu.sum() - static_cast<Part>(mu.size())) % 2 == 0 ? 1 : -1;
}

namespace {

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

// JSON numbers are only exact up to 2^53; larger values render as strings.
void append_json_value(std::string& out, const CharValue& v) {
  static const CharValue kMax = CharValue(1) << 53;
  if (v >= -kMax && v <= kMax) out += v.str();
  else out += "\"" + v.str() + "\"";
}

}  // namespace

std::string table_to_csv(const CharTable& t) {
  std::string out = "lambda\\mu";
  for (const auto& c : t.cols) out += "," + csv_quote(c.to_string());
  out += '\n';
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    out += csv_quote(t.rows[i].to_string());
    for (const auto& v : t.values[i]) out += "," + v.str();
    out += '\n';
  }
  return out;
}

std::string table_to_json(const CharTable& t) {
  std::string out = "{\"n\": " + std::to_string(t.n) + ", \"rows\": [";
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    if (i) out += ", ";
    out += "\"" + t.rows[i].to_string() + "\"";
  }
  out += "], \"cols\": [";
  for (std::size_t i = 0; i < t.cols.size(); ++i) {
    if (i) out += ", ";
    out += "\"" + t.cols[i].to_string() + "\"";
  }
  out += "], \"values\": [";
  for (std::size_t i = 0; i < t.values.size(); ++i) {
    if (i) out += ", ";
    out += "[";
    for (std::size_t j = 0; j < t.values[i].size(); ++j) {
      if (j) out += ", ";
      append_json_value(out, t.values[i][j]);
    }
    out += "]";
  }
  out += "]}";
  return out;
}

}  // namespace signpart
