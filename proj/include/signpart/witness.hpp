#pragma once

#include <functional>
#include <optional>
#include <string>

#include "signpart/characters.hpp"
#include "signpart/charvalue.hpp"
#include "signpart/memo_cache.hpp"
#include "signpart/partition.hpp"

namespace signpart {

// Hook length at cell (2,1): second part plus number of parts minus 2.
// Every constructed witness beta satisfies hook_21(beta) = alpha_1.
Part hook_21(const Partition& beta);

// Derived quantities for the alpha_2 > alpha_3+...+alpha_h branch:
// k = minimal index with alpha_k+...+alpha_h < alpha_1-alpha_2 (h+1 when no
// index qualifies), x = that tail sum (0 when k = h+1).
struct WitnessContext {
  Part h = 0;
  Part k = 0;
  Part x = 0;
};
WitnessContext witness_context(const Partition& alpha);

enum class WitnessCaseId { A, B, C, D, E, F, G, H, I };
const char* case_name(WitnessCaseId id);

struct WitnessCase {
  WitnessCaseId case_id = WitnessCaseId::A;
  // Sub-row of the fired construction: rows 1-4 of the three case-A tables,
  // sub-cases 1-7 of case I; 0 for single-formula cases and for betas that
  // came from the checked-in exceptional table or a fallback search.
  int table_row = 0;
  Partition beta;
  std::optional<CharValue> claimed;  // absent where only |value| >= 2 is asserted
  CharValue computed = 0;
};

// Constructs beta with |beta| = |alpha|, hook_21(beta) = alpha_1 and
// |chi^beta_alpha| >= 2, for alpha with at least 3 parts, alpha_1 > alpha_2,
// alpha not in the sign set, (alpha_2,...,alpha_h) in the sign set, and
// alpha != (5,4,3,2,1). The computed value is always MN-verified; a claimed
// value that disagrees raises ClaimMismatch. capacity gates only the
// exhaustive-search fallback (never reached for inputs covered by the
// checked-in table).
WitnessCase witness_beta(const Partition& alpha, MemoCache& cache,
                         int capacity = kDefaultCapacity);

// Prefix lift: given beta a witness for the suffix (gamma_i,...,gamma_r)
// (1-based i; i=1 returns beta unchanged), returns
// delta = (beta_1 + gamma_1 + ... + gamma_{i-1}, beta_2, ...) and verifies
// mn_char(delta, gamma) = mn_char(beta, suffix). Requires every prefix part
// to exceed hook_21(beta) strictly; equality breaks preservation.
Partition lift_witness(const Partition& gamma, int i, const Partition& beta,
                       MemoCache& cache);

// Witness for gamma whose suffix (gamma_i,...,gamma_r) equals (5,4,3,2,1),
// the one shape witness_beta refuses. Prefix parts >= 7 (or no prefix):
// (4 + prefix sum, 4, 4, 3), value -2. Part before the suffix equal to 6:
// the 6 is absorbed, (15 + remaining prefix sum, 2, 1, 1, 1, 1), value
// MN-computed. A part equal to 5 before the suffix is not covered.
Partition special_54321_witness(const Partition& gamma, int i, MemoCache& cache);

// For gamma = (a, a-1, gamma_3, ...) with (a-1, gamma_3, ...) a sign
// partition and gamma_3+...+gamma_r <= a: a necessary condition for
// |chi^beta_gamma| >= 2 is that beta has exactly two a-hooks, each of whose
// removals has an (a-1)-hook. Returns that predicate (a candidate pruner for
// brute-force scans; never required for correctness).
std::function<bool(const Partition&)> lemma4_hook_filter(const Partition& gamma);

struct Violator {
  Partition lambda;
  CharValue value;
};

// Certificate for a non-sign gamma: some lambda with |chi^lambda_gamma| >= 2.
// Prefers constructed witnesses (break the shortest non-sign suffix, build
// its witness, lift over the prefix) and falls back to brute force.
Violator find_violator(const Partition& gamma, MemoCache& cache,
                       int capacity = kDefaultCapacity);

}  // namespace signpart
