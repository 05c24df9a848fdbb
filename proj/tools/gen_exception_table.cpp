// Regenerates src/witness_exceptional_table.inc: for each small (tail,
// alpha_1) pair outside the closed-form table ranges, exhaustively finds the
// lexicographically least beta with hook_21(beta) = alpha_1 and
// |chi^beta_alpha| >= 2. Usage: gen_exception_table > witness_exceptional_table.inc

#include <cstdio>
#include <vector>

#include "signpart/characters.hpp"
#include "signpart/memo_cache.hpp"
#include "signpart/partition.hpp"
#include "signpart/signclass.hpp"
#include "signpart/witness.hpp"

using namespace signpart;

namespace {

MemoCache cache;

void emit(const std::vector<Part>& tail) {
  Part tail_sum = 0;
  for (Part p : tail) tail_sum += p;
  for (Part a1 = tail[0] + 1; a1 <= tail_sum; ++a1) {
    std::vector<Part> parts{a1};
    parts.insert(parts.end(), tail.begin(), tail.end());
    const Partition alpha(parts);
    if (in_sign_set(alpha)) continue;  // not a witness instance
    // The one excluded shape: no beta of 15 with hook_21 = 5 reaches |chi| >= 2.
    if (alpha.to_string() == "5,4,3,2,1") continue;
    const Part n = alpha.sum();
    const std::vector<Partition> all = partitions_of(n);
    const Partition* found = nullptr;
    for (auto it = all.rbegin(); it != all.rend(); ++it) {
      if (it->size() < 2 || hook_21(*it) != a1) continue;
      const CharValue v = mn_char(*it, alpha, cache);
      if (v > 1 || v < -1) {
        found = &*it;
        break;
      }
    }
    if (!found) {
      std::fprintf(stderr, "no witness found for %s\n", alpha.to_string().c_str());
      std::exit(1);
    }
    std::printf("{\"%s\", \"%s\"},\n", alpha.to_string().c_str(),
                found->to_string().c_str());
  }
}

}  // namespace

int main() {
  emit({1, 1});
  emit({3, 2, 1, 1});
  emit({5, 3, 2, 1});
  for (Part a = 2; a <= 4; ++a) emit({a, a - 1, 1});
  for (Part a = 4; a <= 8; ++a) emit({a, a - 1, 2, 1});
  for (Part a = 5; a <= 10; ++a) emit({a, a - 1, 3, 1});
  return 0;
}
