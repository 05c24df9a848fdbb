#include "signpart/signclass.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <sstream>

#include "signpart/errors.hpp"
#include "signpart/witness.hpp"

namespace signpart {

std::vector<Part> TailFamily::expand() const {
  switch (tag) {
    case TailTag::Empty: return {};
    case TailTag::OneOne: return {1, 1};
    case TailTag::T3211: return {3, 2, 1, 1};
    case TailTag::T5321: return {5, 3, 2, 1};
    case TailTag::AA1: return {a, a - 1, 1};
    case TailTag::AA21: return {a, a - 1, 2, 1};
    case TailTag::AA31: return {a, a - 1, 3, 1};
  }
  return {};
}

std::string TailFamily::name() const {
  switch (tag) {
    case TailTag::Empty: return "()";
    case TailTag::OneOne: return "(1,1)";
    case TailTag::T3211: return "(3,2,1,1)";
    case TailTag::T5321: return "(5,3,2,1)";
    case TailTag::AA1: return "(a,a-1,1) a=" + std::to_string(a);
    case TailTag::AA21: return "(a,a-1,2,1) a=" + std::to_string(a);
    case TailTag::AA31: return "(a,a-1,3,1) a=" + std::to_string(a);
  }
  return "";
}

std::optional<TailFamily> match_tail_family(const std::vector<Part>& tail) {
  const std::size_t r = tail.size();
  if (r == 0) return TailFamily{TailTag::Empty, 0};
  if (r == 2 && tail[0] == 1 && tail[1] == 1) return TailFamily{TailTag::OneOne, 0};
  if (r == 4 && tail[0] == 3 && tail[1] == 2 && tail[2] == 1 && tail[3] == 1)
    return TailFamily{TailTag::T3211, 0};
  if (r == 4 && tail[0] == 5 && tail[1] == 3 && tail[2] == 2 && tail[3] == 1)
    return TailFamily{TailTag::T5321, 0};
  if (r == 3 && tail[0] >= 2 && tail[1] == tail[0] - 1 && tail[2] == 1)
    return TailFamily{TailTag::AA1, tail[0]};
  if (r == 4 && tail[0] >= 4 && tail[1] == tail[0] - 1 && tail[2] == 2 && tail[3] == 1)
    return TailFamily{TailTag::AA21, tail[0]};
  if (r == 4 && tail[0] >= 5 && tail[1] == tail[0] - 1 && tail[2] == 3 && tail[3] == 1)
    return TailFamily{TailTag::AA31, tail[0]};
  return std::nullopt;
}

std::optional<SignDecomposition> in_sign_set(const Partition& gamma) {
  const auto& g = gamma.parts();
  const std::size_t r = g.size();
  // s_max = longest prefix with g[i] > sum of everything after it.
  std::size_t s_max = 0;
  Part suffix = gamma.sum();
  for (std::size_t i = 0; i < r; ++i) {
    suffix -= g[i];
    if (g[i] > suffix) s_max = i + 1;
    else break;
  }
  const std::vector<Part> tail(g.begin() + static_cast<std::ptrdiff_t>(s_max), g.end());
  if (auto fam = match_tail_family(tail))
    return SignDecomposition{static_cast<int>(s_max), *fam};
  return std::nullopt;
}

namespace {

void require_capacity(Part n, int capacity, const char* what) {
  if (n <= capacity) return;
  std::ostringstream os;
  os << what << ": n = " << n << " exceeds capacity " << capacity;
  throw CapacityExceeded(os.str());
}

BruteForceResult brute_force(const Partition& gamma, MemoCache& cache, int capacity,
                             bool parallel) {
  require_capacity(gamma.sum(), capacity, "brute-force scan");
  const std::vector<Partition> all = partitions_of(gamma.sum());
  const auto total = static_cast<std::ptrdiff_t>(all.size());
  std::atomic<std::ptrdiff_t> best{total};
  std::exception_ptr first_error = nullptr;
  if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::ptrdiff_t i = 0; i < total; ++i) {
      if (i >= best.load(std::memory_order_relaxed)) continue;
      try {
        const CharValue v = mn_char(all[static_cast<std::size_t>(i)], gamma, cache);
        if (v > 1 || v < -1) {
          std::ptrdiff_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {}
        }
      } catch (...) {
#ifdef _OPENMP
#pragma omp critical(signpart_brute_error)
#endif
        if (!first_error) first_error = std::current_exception();
      }
    }
    if (first_error) std::rethrow_exception(first_error);
  } else {
    for (std::ptrdiff_t i = 0; i < total; ++i) {
      const CharValue v = mn_char(all[static_cast<std::size_t>(i)], gamma, cache);
      if (v > 1 || v < -1) { best.store(i); break; }
    }
  }
  BruteForceResult res;
  const std::ptrdiff_t hit = best.load();
  if (hit == total) {
    res.is_sign = true;
  } else {
    res.is_sign = false;
    res.violator = all[static_cast<std::size_t>(hit)];
    res.violator_value = mn_char(*res.violator, gamma, cache);
  }
  return res;
}

}  // namespace

BruteForceResult is_sign_partition_bruteforce(const Partition& gamma, MemoCache& cache,
                                              int capacity) {
  return brute_force(gamma, cache, capacity, /*parallel=*/true);
}

BruteForceResult is_sign_partition_bruteforce_serial(const Partition& gamma,
                                                     MemoCache& cache, int capacity) {
  return brute_force(gamma, cache, capacity, /*parallel=*/false);
}

Classification classify(const Partition& gamma, bool verify, MemoCache& cache,
                        int capacity) {
  Classification c{gamma, false, std::nullopt, std::nullopt, std::nullopt, false};
  c.decomposition = in_sign_set(gamma);
  c.is_sign = c.decomposition.has_value();
  if (!c.is_sign && gamma.sum() <= capacity) {
    const Violator v = find_violator(gamma, cache, capacity);
    c.violator = v.lambda;
    c.violator_value = v.value;
  }
  if (verify) {
    require_capacity(gamma.sum(), capacity, "classify --verify");
    const BruteForceResult bf = is_sign_partition_bruteforce(gamma, cache, capacity);
    if (bf.is_sign != c.is_sign) {
      std::ostringstream os;
      os << "membership test and brute force disagree on " << gamma.to_string()
         << ": decomposition says " << (c.is_sign ? "sign" : "non-sign")
         << ", oracle says " << (bf.is_sign ? "sign" : "non-sign");
      throw InconsistencyError(os.str());
    }
    c.verified = true;
  }
  return c;
}

std::vector<Partition> enumerate_sign_partitions(Part n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition& g) {
    if (in_sign_set(g)) out.push_back(g);
  });
  return out;
}

bool check_lemma2(const Partition& gamma, Part m, MemoCache& cache, int capacity) {
  if (m <= gamma.sum()) {
    std::ostringstream os;
    os << "prepended part m = " << m << " must exceed |gamma| = " << gamma.sum();
    throw PreconditionViolated(os.str());
  }
  require_capacity(m + gamma.sum(), capacity, "lemma-2 check");
  std::vector<Part> extended;
  extended.reserve(gamma.size() + 1);
  extended.push_back(m);
  extended.insert(extended.end(), gamma.parts().begin(), gamma.parts().end());
  const bool base = is_sign_partition_bruteforce(gamma, cache, capacity).is_sign;
  const bool lifted =
      is_sign_partition_bruteforce(Partition(extended), cache, capacity).is_sign;
  return base == lifted;
}

namespace {

VerifyLevel verify_level(Part n, MemoCache& cache, int capacity, bool parallel) {
  require_capacity(n, capacity, "verify level");
  const std::vector<Partition> all = partitions_of(n);
  VerifyLevel lvl;
  lvl.n = n;
  lvl.total = all.size();
  std::atomic<std::size_t> sign_count{0};
  std::atomic<std::size_t> disagreements{0};
  std::exception_ptr first_error = nullptr;
  const auto total = static_cast<std::ptrdiff_t>(all.size());
  if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::ptrdiff_t i = 0; i < total; ++i) {
      try {
        const Partition& g = all[static_cast<std::size_t>(i)];
        const bool member = in_sign_set(g).has_value();
        const bool brute = is_sign_partition_bruteforce_serial(g, cache, capacity).is_sign;
        if (member) sign_count.fetch_add(1);
        if (member != brute) disagreements.fetch_add(1);
      } catch (...) {
#ifdef _OPENMP
#pragma omp critical(signpart_verify_error)
#endif
        if (!first_error) first_error = std::current_exception();
      }
    }
    if (first_error) std::rethrow_exception(first_error);
  } else {
    for (const Partition& g : all) {
      const bool member = in_sign_set(g).has_value();
      const bool brute = is_sign_partition_bruteforce_serial(g, cache, capacity).is_sign;
      if (member) sign_count.fetch_add(1);
      if (member != brute) disagreements.fetch_add(1);
    }
  }
  lvl.sign_count = sign_count.load();
  lvl.disagreements = disagreements.load();
  return lvl;
}

}  // namespace

VerifyLevel verify_equivalence_level(Part n, MemoCache& cache, int capacity) {
  return verify_level(n, cache, capacity, /*parallel=*/true);
}

VerifyLevel verify_equivalence_level_serial(Part n, MemoCache& cache, int capacity) {
  return verify_level(n, cache, capacity, /*parallel=*/false);
}

}  // namespace signpart
