#include "signpart/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace signpart {

Partition::Partition(std::vector<Part> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) {
      throw NotAPartition("part " + std::to_string(parts_[i]) +
                          " is not a positive integer");
    }
    if (i > 0 && parts_[i - 1] < parts_[i]) {
      throw NotAPartition("parts increase at position " + std::to_string(i + 1));
    }
    n_ += parts_[i];
  }
}

Partition Partition::from_unsorted(std::vector<Part> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<Part>());
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "[]";
  std::string out;
  std::size_t i = 0;
  while (i < parts_.size()) {
    std::size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    std::size_t run = j - i;
    if (!out.empty()) out += ',';
    if (run >= 3) {
      out += std::to_string(parts_[i]) + '^' + std::to_string(run);
    } else {
      out += std::to_string(parts_[i]);
      if (run == 2) out += ',' + std::to_string(parts_[i]);
    }
    i = j;
  }
  return out;
}

bool dec_lex_less(const Partition& a, const Partition& b) {
  return std::lexicographical_compare(b.parts().begin(), b.parts().end(),
                                      a.parts().begin(), a.parts().end());
}

Partition parse_partition(std::string_view text) {
  // Strip surrounding whitespace.
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.empty() || text == "[]") return Partition();

  std::vector<Part> parts;
  std::size_t pos = 0;
  auto read_int = [&](const char* what) -> Part {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start) {
      throw ParseError(std::string("expected ") + what + " at offset " +
                       std::to_string(start) + " in \"" + std::string(text) + "\"");
    }
    Part value = 0;
    auto res = std::from_chars(text.data() + start, text.data() + pos, value);
    if (res.ec != std::errc()) {
      throw ParseError("integer out of range in \"" + std::string(text) + "\"");
    }
    return value;
  };

  while (true) {
    Part part = read_int("part");
    Part repeat = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      repeat = read_int("exponent");
      if (repeat < 1) throw ParseError("exponent must be >= 1");
    }
    if (part < 1) throw NotAPartition("part " + std::to_string(part) +
                                      " is not a positive integer");
    for (Part r = 0; r < repeat; ++r) parts.push_back(part);
    if (pos == text.size()) break;
    if (text[pos] != ',') {
      throw ParseError("unexpected character '" + std::string(1, text[pos]) +
                       "' at offset " + std::to_string(pos));
    }
    ++pos;
  }
  return Partition(std::move(parts));  // NotAPartition if not decreasing
}

Partition conjugate(const Partition& lambda) {
  const auto& p = lambda.parts();
  if (p.empty()) return Partition();
  std::vector<Part> conj(static_cast<std::size_t>(p[0]), 0);
  for (Part row : p) {
    for (Part j = 0; j < row; ++j) ++conj[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(conj));
}

Part hook_length(const Partition& lambda, Cell c) {
  if (c.row < 1 || c.col < 1 ||
      static_cast<std::size_t>(c.row) > lambda.size() ||
      static_cast<Part>(c.col) > lambda.parts()[c.row - 1]) {
    throw CellOutOfDiagram("cell (" + std::to_string(c.row) + "," +
                           std::to_string(c.col) + ") is outside " +
                           lambda.to_string());
  }
  // arm + leg + 1; the leg is read off the conjugate.
  Part col_height = 0;
  for (Part row : lambda.parts()) {
    if (row >= c.col) ++col_height;
  }
  return lambda.parts()[c.row - 1] - c.col + col_height - c.row + 1;
}

std::vector<Cell> hooks_of_length(const Partition& lambda, Part q) {
  std::vector<Cell> out;
  Partition conj = conjugate(lambda);
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    // Hook lengths decrease strictly along a row; binary search column j.
    Part row_len = lambda.parts()[i];
    Part lo = 1, hi = row_len;
    while (lo <= hi) {
      Part mid = lo + (hi - lo) / 2;
      Part h = row_len - mid + conj.parts()[static_cast<std::size_t>(mid - 1)] -
               static_cast<Part>(i + 1) + 1;
      if (h == q) {
        out.push_back(Cell{static_cast<int>(i + 1), static_cast<int>(mid)});
        break;
      }
      if (h > q) {
        lo = mid + 1;
      } else {
        hi = mid - 1;
      }
    }
  }
  return out;
}

RimHookRemoval remove_rim_hook(const Partition& lambda, Cell c) {
  Part len = hook_length(lambda, c);  // validates the cell
  Partition conj = conjugate(lambda);
  int last_row = static_cast<int>(conj.parts()[static_cast<std::size_t>(c.col - 1)]);
  // Rows c.row .. last_row hold the rim; each intermediate row shifts up.
  std::vector<Part> out = lambda.parts();
  for (int t = c.row; t < last_row; ++t) {
    out[static_cast<std::size_t>(t - 1)] = lambda.parts()[static_cast<std::size_t>(t)] - 1;
  }
  out[static_cast<std::size_t>(last_row - 1)] = static_cast<Part>(c.col - 1);
  while (!out.empty() && out.back() == 0) out.pop_back();

  RimHookRemoval r;
  r.source = lambda;
  r.removed_from = c;
  r.length = len;
  r.leg = last_row - c.row;
  r.result = Partition(std::move(out));
  r.sign = (r.leg % 2 == 0) ? 1 : -1;
  return r;
}

std::vector<RimHookRemoval> add_rim_hooks(const Partition& lambda, Part q) {
  if (q < 1) return {};
  // Pad with q extra beta numbers so any new row fits.
  std::size_t L = lambda.size() + static_cast<std::size_t>(q);
  BetaSet b = BetaSet::of(lambda, L);
  std::vector<RimHookRemoval> out;
  for (Part bead : b.numbers) {
    Part up = bead + q;
    if (std::find(b.numbers.begin(), b.numbers.end(), up) != b.numbers.end())
      continue;
    BetaSet moved = b;
    *std::find(moved.numbers.begin(), moved.numbers.end(), bead) = up;
    std::sort(moved.numbers.begin(), moved.numbers.end(), std::greater<Part>());
    Partition mu = moved.to_partition();
    // Locate the removal cell of mu that undoes this addition.
    for (Cell c : hooks_of_length(mu, q)) {
      RimHookRemoval r = remove_rim_hook(mu, c);
      if (r.result == lambda) {
        out.push_back(std::move(r));
        break;
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const RimHookRemoval& a, const RimHookRemoval& b2) {
    return dec_lex_less(a.source, b2.source);
  });
  return out;
}

BetaSet BetaSet::of(const Partition& lambda, std::size_t padded_len) {
  BetaSet b;
  std::size_t L = std::max(padded_len, lambda.size());
  b.numbers.reserve(L);
  for (std::size_t i = 1; i <= L; ++i) {
    Part part = i <= lambda.size() ? lambda.parts()[i - 1] : 0;
    b.numbers.push_back(part + static_cast<Part>(L - i));
  }
  return b;  // already descending
}

Partition BetaSet::to_partition() const {
  std::vector<Part> sorted = numbers;
  std::sort(sorted.begin(), sorted.end(), std::greater<Part>());
  std::size_t L = sorted.size();
  std::vector<Part> parts;
  for (std::size_t i = 1; i <= L; ++i) {
    Part p = sorted[i - 1] - static_cast<Part>(L - i);
    if (p > 0) parts.push_back(p);
  }
  return Partition(std::move(parts));
}

namespace {
// Padding convention: number of parts rounded up to the next multiple of q.
std::size_t core_padding(const Partition& lambda, Part q) {
  std::size_t len = lambda.size();
  std::size_t qq = static_cast<std::size_t>(q);
  if (len == 0) return qq;  // one empty cycle of runners
  return ((len + qq - 1) / qq) * qq;
}
}  // namespace

Partition q_core(const Partition& lambda, Part q) {
  if (q < 1) throw PreconditionViolated("q must be >= 1");
  std::size_t L = core_padding(lambda, q);
  BetaSet b = BetaSet::of(lambda, L);
  // Slide every runner's beads to the bottom.
  std::vector<std::size_t> count(static_cast<std::size_t>(q), 0);
  for (Part bead : b.numbers) ++count[static_cast<std::size_t>(bead % q)];
  std::vector<Part> slid;
  slid.reserve(L);
  for (Part r = 0; r < q; ++r) {
    for (std::size_t h = 0; h < count[static_cast<std::size_t>(r)]; ++h) {
      slid.push_back(r + q * static_cast<Part>(h));
    }
  }
  std::sort(slid.begin(), slid.end(), std::greater<Part>());
  BetaSet core{std::move(slid)};
  return core.to_partition();
}

std::vector<Partition> q_quotient(const Partition& lambda, Part q) {
  if (q < 1) throw PreconditionViolated("q must be >= 1");
  std::size_t L = core_padding(lambda, q);
  BetaSet b = BetaSet::of(lambda, L);
  std::vector<Partition> out;
  out.reserve(static_cast<std::size_t>(q));
  for (Part r = 0; r < q; ++r) {
    std::vector<Part> heights;
    for (Part bead : b.numbers) {
      if (bead % q == r) heights.push_back((bead - r) / q);
    }
    std::sort(heights.begin(), heights.end(), std::greater<Part>());
    out.push_back(BetaSet{std::move(heights)}.to_partition());
  }
  return out;
}

Partition partition_from_core_quotient(const Partition& core,
                                       const std::vector<Partition>& quotient,
                                       Part q) {
  if (q < 1 || quotient.size() != static_cast<std::size_t>(q)) {
    throw PreconditionViolated("quotient must have exactly q components");
  }
  if (q_core(core, q) != core) {
    throw PreconditionViolated("core has a q-hook");
  }
  // Choose a padding large enough that every runner holds its component.
  std::size_t need = core.size();
  for (const Partition& comp : quotient) {
    need = std::max(need, comp.size() * static_cast<std::size_t>(q));
  }
  std::size_t qq = static_cast<std::size_t>(q);
  std::size_t L = ((std::max<std::size_t>(need, 1) + qq - 1) / qq) * qq;
  BetaSet b = BetaSet::of(core, L);
  std::vector<Part> beads;
  beads.reserve(L);
  for (Part r = 0; r < q; ++r) {
    std::vector<Part> heights;
    for (Part bead : b.numbers) {
      if (bead % q == r) heights.push_back((bead - r) / q);
    }
    std::sort(heights.begin(), heights.end(), std::greater<Part>());
    std::size_t c = heights.size();
    const auto& comp = quotient[static_cast<std::size_t>(r)].parts();
    if (comp.size() > c) {
      throw PreconditionViolated("quotient component too long for padding");
    }
    // Raise bead i (descending) by the component's i-th part.
    for (std::size_t i = 0; i < c; ++i) {
      Part raise = i < comp.size() ? comp[i] : 0;
      beads.push_back((heights[i] + raise) * q + r);
    }
  }
  std::sort(beads.begin(), beads.end(), std::greater<Part>());
  return BetaSet{std::move(beads)}.to_partition();
}

void for_each_partition(Part n, const std::function<void(const Partition&)>& fn) {
  if (n < 0) throw PreconditionViolated("n must be >= 0");
  if (n == 0) {
    fn(Partition());
    return;
  }
  // Decreasing lexicographic: start at (n), end at (1^n).
  std::vector<Part> a{n};
  while (true) {
    fn(Partition(std::vector<Part>(a)));
    // Find the last part > 1; everything after it is a tail of 1s.
    std::size_t i = a.size();
    while (i > 0 && a[i - 1] == 1) --i;
    if (i == 0) break;  // all ones: done
    Part rem = static_cast<Part>(a.size() - i) + 1;  // the 1s plus one unit
    a[i - 1] -= 1;
    Part chunk = a[i - 1];
    a.resize(i);
    while (rem >= chunk) {
      a.push_back(chunk);
      rem -= chunk;
    }
    if (rem > 0) a.push_back(rem);
  }
}

std::vector<Partition> partitions_of(Part n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
  return out;
}

namespace detail {

std::vector<std::pair<std::vector<Part>, int>> hook_removals(
    const std::vector<Part>& lambda, Part q) {
  // Beta numbers without padding: b_i = lambda_i + L - i (1-based), L = #parts.
  std::size_t L = lambda.size();
  std::vector<Part> b(L);
  for (std::size_t i = 0; i < L; ++i) {
    b[i] = lambda[i] + static_cast<Part>(L - 1 - i);
  }
  std::vector<std::pair<std::vector<Part>, int>> out;
  for (std::size_t i = 0; i < L; ++i) {
    Part down = b[i] - q;
    if (down < 0) continue;
    bool occupied = false;
    int between = 0;
    for (std::size_t j = 0; j < L; ++j) {
      if (b[j] == down) {
        occupied = true;
        break;
      }
      if (b[j] < b[i] && b[j] > down) ++between;
    }
    if (occupied) continue;
    std::vector<Part> nb = b;
    nb[i] = down;
    std::sort(nb.begin(), nb.end(), std::greater<Part>());
    std::vector<Part> parts;
    parts.reserve(L);
    for (std::size_t j = 1; j <= L; ++j) {
      Part p = nb[j - 1] - static_cast<Part>(L - j);
      if (p > 0) parts.push_back(p);
    }
    out.emplace_back(std::move(parts), between);  // leg = beads passed over
  }
  return out;
}

}  // namespace detail

}  // namespace signpart
