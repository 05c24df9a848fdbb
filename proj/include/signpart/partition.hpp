#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "signpart/errors.hpp"

namespace signpart {

using Part = long long;

// Weakly decreasing list of positive integers. Immutable after construction;
// the sum is cached. The empty list is the unique partition of 0.
class Partition {
 public:
  Partition() = default;
  // Validates: every part >= 1, weakly decreasing. Throws NotAPartition.
  explicit Partition(std::vector<Part> parts);
  // Sorts descending first; still rejects non-positive parts.
  static Partition from_unsorted(std::vector<Part> parts);

  const std::vector<Part>& parts() const { return parts_; }
  // 0-based; returns 0 past the end so tail sums read naturally.
  Part at(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  std::size_t size() const { return parts_.size(); }
  Part sum() const { return n_; }
  bool empty() const { return parts_.empty(); }

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return parts_ != o.parts_; }

  // Canonical text: comma-separated, runs of >= 3 equal parts as "p^k",
  // "[]" for the empty partition.
  std::string to_string() const;

 private:
  std::vector<Part> parts_;
  Part n_ = 0;
};

// True when a precedes b in decreasing lexicographic order.
bool dec_lex_less(const Partition& a, const Partition& b);

// 1-based diagram coordinates, matching the usual (i,j) node indexing.
struct Cell {
  int row = 1;
  int col = 1;
  bool operator==(const Cell& o) const { return row == o.row && col == o.col; }
};

// One rim-hook removal: source minus the rim hook anchored at removed_from
// equals result; sign = (-1)^leg where leg = rows spanned - 1.
struct RimHookRemoval {
  Partition source;
  Cell removed_from;
  Part length = 0;
  int leg = 0;
  Partition result;
  int sign = 1;
};

// First-column hook lengths {lambda_i + L - i : 1 <= i <= L} for a fixed
// padding length L >= number of parts. Distinct nonnegative integers.
struct BetaSet {
  std::vector<Part> numbers;  // sorted descending
  static BetaSet of(const Partition& lambda, std::size_t padded_len);
  Partition to_partition() const;
};

// Grammar: part ("," part)* with part = int | int "^" int; "" or "[]" is the
// empty partition. Expanded parts must be weakly decreasing.
Partition parse_partition(std::string_view text);

// Column counts of the diagram; an involution.
Partition conjugate(const Partition& lambda);

// lambda_i - j + lambda'_j - i + 1. Throws CellOutOfDiagram.
Part hook_length(const Partition& lambda, Cell c);

// All cells with hook length q, in row-major order.
std::vector<Cell> hooks_of_length(const Partition& lambda, Part q);

// Removes the rim hook anchored at c. Throws CellOutOfDiagram.
RimHookRemoval remove_rim_hook(const Partition& lambda, Cell c);

// All mu with |mu| = |lambda| + q from which one q-rim-hook removal yields
// lambda, each packaged with its removal data (source = mu, result = lambda).
std::vector<RimHookRemoval> add_rim_hooks(const Partition& lambda, Part q);

// The partition left after removing q-rim-hooks until none remain.
// Computed on beta-number runners, so it is removal-order independent.
Partition q_core(const Partition& lambda, Part q);

// q components, runner r = beta numbers congruent to r mod q, r = 0..q-1.
// |lambda| = |core| + q * (total quotient size).
std::vector<Partition> q_quotient(const Partition& lambda, Part q);

// Inverse of (q_core, q_quotient) under the same padding convention.
Partition partition_from_core_quotient(const Partition& core,
                                       const std::vector<Partition>& quotient,
                                       Part q);

// Every partition of n exactly once, decreasing lexicographic. The callback
// form streams without materializing the list.
void for_each_partition(Part n, const std::function<void(const Partition&)>& fn);
std::vector<Partition> partitions_of(Part n);

namespace detail {
// Internal fast path used by the character engine: all (result, leg) pairs
// from removing one q-rim-hook of lambda, computed on beta numbers.
std::vector<std::pair<std::vector<Part>, int>> hook_removals(
    const std::vector<Part>& lambda, Part q);
}  // namespace detail

}  // namespace signpart
