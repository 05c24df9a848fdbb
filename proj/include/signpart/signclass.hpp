#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "signpart/characters.hpp"
#include "signpart/charvalue.hpp"
#include "signpart/memo_cache.hpp"
#include "signpart/partition.hpp"

namespace signpart {

// The seven tail families a sign partition may end with, after its strictly
// dominating prefix: (), (1,1), (3,2,1,1), (5,3,2,1), (a,a-1,1) with a >= 2,
// (a,a-1,2,1) with a >= 4, (a,a-1,3,1) with a >= 5.
enum class TailTag { Empty, OneOne, T3211, T5321, AA1, AA21, AA31 };

struct TailFamily {
  TailTag tag = TailTag::Empty;
  Part a = 0;  // meaningful only for AA1/AA21/AA31

  std::vector<Part> expand() const;
  std::string name() const;  // e.g. "(3,2,1,1)" or "(a,a-1,1) a=3"
  bool operator==(const TailFamily& o) const { return tag == o.tag && a == o.a; }
};

// gamma = strictly dominating prefix of length s, then tail.expand().
// Strict domination: gamma_i > gamma_{i+1} + ... + gamma_r for all i <= s.
struct SignDecomposition {
  int s = 0;
  TailFamily tail;
};

// Matches a part sequence against the seven families, in the order listed
// above (fixed tails first, then the parametric ones).
std::optional<TailFamily> match_tail_family(const std::vector<Part>& tail);

// Membership test. Only s_max, the longest strictly dominating prefix, can
// head a valid decomposition: no family's first part exceeds the sum of the
// rest, so a shorter prefix would leave a tail whose head dominates.
// Uniqueness of s is property-tested, not assumed.
std::optional<SignDecomposition> in_sign_set(const Partition& gamma);

struct BruteForceResult {
  bool is_sign = false;
  std::optional<Partition> violator;  // first in decreasing lex, when found
  CharValue violator_value = 0;
};

// Scans every lambda of size |gamma| for |chi^lambda_gamma| >= 2. The
// parallel version reports the same (minimal-index) violator as the serial
// one, which is the reference implementation.
BruteForceResult is_sign_partition_bruteforce(const Partition& gamma, MemoCache& cache,
                                              int capacity = kDefaultCapacity);
BruteForceResult is_sign_partition_bruteforce_serial(const Partition& gamma,
                                                     MemoCache& cache,
                                                     int capacity = kDefaultCapacity);

struct Classification {
  Partition gamma;
  bool is_sign = false;
  std::optional<SignDecomposition> decomposition;  // present iff is_sign
  std::optional<Partition> violator;               // negative certificate
  std::optional<CharValue> violator_value;
  bool verified = false;  // brute-force oracle agreed
};

// Membership from the decomposition test; negative certificates come from
// the witness constructions when they apply, otherwise brute force (both
// capacity-gated: beyond capacity the certificate is simply absent unless
// verify is requested, which then throws). verify cross-checks against the
// brute-force oracle and throws InconsistencyError on disagreement.
Classification classify(const Partition& gamma, bool verify, MemoCache& cache,
                        int capacity = kDefaultCapacity);

// All sign partitions of n, decreasing lex. Pure decomposition test.
std::vector<Partition> enumerate_sign_partitions(Part n);

// Prepending any m > |gamma| must not change sign-ness; both sides are
// brute-forced. Expected always true.
bool check_lemma2(const Partition& gamma, Part m, MemoCache& cache,
                  int capacity = kDefaultCapacity);

struct VerifyLevel {
  Part n = 0;
  std::size_t total = 0;         // p(n)
  std::size_t sign_count = 0;    // |Sign restricted to n|
  std::size_t disagreements = 0; // decomposition test vs brute force
};

// Checks the membership test against brute force for every gamma of n.
VerifyLevel verify_equivalence_level(Part n, MemoCache& cache,
                                     int capacity = kDefaultCapacity);
VerifyLevel verify_equivalence_level_serial(Part n, MemoCache& cache,
                                            int capacity = kDefaultCapacity);

}  // namespace signpart
