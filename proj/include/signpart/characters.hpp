#pragma once

#include <string>
#include <vector>

#include "signpart/charvalue.hpp"
#include "signpart/memo_cache.hpp"
#include "signpart/partition.hpp"

namespace signpart {

// Largest n for which exhaustive work (tables, brute-force scans) runs by
// default; overridable per call and from the CLI.
inline constexpr int kDefaultCapacity = 25;

// Murnaghan-Nakayama character value chi^lambda_mu, peeling mu's parts
// largest first. mu's part order does not matter (values depend only on the
// multiset of cycle lengths); both inputs are canonical Partitions already.
// Throws SizeMismatch when |lambda| != |mu|.
CharValue mn_char(const Partition& lambda, const Partition& mu, MemoCache& cache);

// Identical recursion peeling mu's parts smallest first. Exists solely as a
// cross-check; shares no memo entries with mn_char.
CharValue mn_char_small_first(const Partition& lambda, const Partition& mu,
                              MemoCache& cache);

struct CharTable {
  Part n = 0;
  std::vector<Partition> rows;  // lambda, decreasing lex
  std::vector<Partition> cols;  // mu, decreasing lex
  std::vector<std::vector<CharValue>> values;  // values[i][j] = chi^rows[i]_cols[j]
};

// Full p(n) x p(n) table. Row-parallel; the _serial variant is the reference
// implementation the parallel one is tested against.
CharTable char_table(Part n, MemoCache& cache, int capacity = kDefaultCapacity);
CharTable char_table_serial(Part n, MemoCache& cache, int capacity = kDefaultCapacity);

// |lambda|! / product of hook lengths. Exact.
CharValue dimension(const Partition& lambda);

// Centralizer order z_mu = prod over part values k of k^{m_k} * m_k!.
CharValue class_size_z(const Partition& mu);

// (-1)^(|mu| - number of parts): the sign character on class mu.
int conjugate_sign(const Partition& mu);

// CSV: header row is "lambda\mu" then the column partitions, quoted (they
// contain commas); each data row starts with the quoted row partition.
std::string table_to_csv(const CharTable& t);

// JSON text: {"n":..., "rows":[...], "cols":[...], "values":[[...]]}.
// Values render as JSON numbers when they fit in 53 bits, else as strings.
std::string table_to_json(const CharTable& t);

}  // namespace signpart
