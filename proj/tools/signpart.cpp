// signpart: exact symmetric-group character values and sign conjugacy classes.
//
// Subcommands: char, table, classify, enumerate, witness, verify.
// Global flags: --format {plain,json,csv}, --cache PATH, --threads N,
// --capacity N. The SIGNPART_CACHE environment variable overrides --cache.
//
// Exit codes: 0 success; 2 usage or input error (bad partition text, size
// mismatch, violated precondition); 3 capacity exceeded; 4 internal
// cross-check failure (inconsistency, claim mismatch, exhausted search).

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "signpart/characters.hpp"
#include "signpart/errors.hpp"
#include "signpart/memo_cache.hpp"
#include "signpart/partition.hpp"
#include "signpart/signclass.hpp"
#include "signpart/witness.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using nlohmann::ordered_json;
using signpart::CharTable;
using signpart::CharValue;
using signpart::Classification;
using signpart::MemoCache;
using signpart::Part;
using signpart::Partition;
using signpart::VerifyLevel;
using signpart::WitnessCase;

// Parse a partition argument, naming the flag in any error message.
Partition parse_flag(const char* flag, const std::string& text) {
  try {
    return signpart::parse_partition(text);
  } catch (const signpart::Error& e) {
    throw signpart::ParseError(std::string(flag) + ": " + e.what());
  }
}

// JSON numbers are only exact up to 2^53; larger values render as strings.
ordered_json json_char_value(const CharValue& v) {
  static const CharValue kMax = CharValue(1) << 53;
  if (v >= -kMax && v <= kMax) return ordered_json(v.convert_to<long long>());
  return ordered_json(v.str());
}

void print_plain_table(const CharTable& t) {
  const std::string corner = "lambda\\mu";
  std::vector<std::size_t> width(t.cols.size() + 1, 0);
  width[0] = corner.size();
  for (const Partition& r : t.rows) width[0] = std::max(width[0], r.to_string().size());
  std::vector<std::vector<std::string>> cells(t.rows.size());
  for (std::size_t j = 0; j < t.cols.size(); ++j) {
    width[j + 1] = t.cols[j].to_string().size();
  }
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    cells[i].reserve(t.cols.size());
    for (std::size_t j = 0; j < t.cols.size(); ++j) {
      cells[i].push_back(t.values[i][j].str());
      width[j + 1] = std::max(width[j + 1], cells[i][j].size());
    }
  }
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(width[0])) << corner << std::right;
  for (std::size_t j = 0; j < t.cols.size(); ++j) {
    os << "  " << std::setw(static_cast<int>(width[j + 1])) << t.cols[j].to_string();
  }
  os << '\n';
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    os << std::left << std::setw(static_cast<int>(width[0])) << t.rows[i].to_string()
       << std::right;
    for (std::size_t j = 0; j < t.cols.size(); ++j) {
      os << "  " << std::setw(static_cast<int>(width[j + 1])) << cells[i][j];
    }
    os << '\n';
  }
  std::cout << os.str();
}

struct Options {
  std::string format = "plain";
  std::string cache_path;
  int threads = 0;  // 0 = library default (all cores)
  int capacity = signpart::kDefaultCapacity;
};

int run_char(const Options& opt, MemoCache& cache, const std::string& lambda_text,
             const std::string& mu_text) {
  const Partition lambda = parse_flag("--lambda", lambda_text);
  const Partition mu = parse_flag("--mu", mu_text);
  const CharValue v = signpart::mn_char(lambda, mu, cache);
  if (opt.format == "json") {
    ordered_json out;
    out["lambda"] = lambda.to_string();
    out["mu"] = mu.to_string();
    out["value"] = json_char_value(v);
    std::cout << out.dump() << '\n';
  } else {
    std::cout << v.str() << '\n';
  }
  return 0;
}

int run_table(const Options& opt, MemoCache& cache, Part n) {
  const CharTable t = signpart::char_table(n, cache, opt.capacity);
  if (opt.format == "csv") {
    std::cout << signpart::table_to_csv(t);
  } else if (opt.format == "json") {
    std::cout << signpart::table_to_json(t) << '\n';
  } else {
    print_plain_table(t);
  }
  return 0;
}

int run_classify(const Options& opt, MemoCache& cache, const std::string& gamma_text,
                 bool verify) {
  const Partition gamma = parse_flag("--gamma", gamma_text);
  const Classification c = signpart::classify(gamma, verify, cache, opt.capacity);
  ordered_json out;
  out["gamma"] = c.gamma.to_string();
  out["is_sign"] = c.is_sign;
  out["s"] = c.decomposition ? ordered_json(c.decomposition->s) : ordered_json(nullptr);
  out["tail"] =
      c.decomposition ? ordered_json(c.decomposition->tail.name()) : ordered_json(nullptr);
  out["violator"] = c.violator ? ordered_json(c.violator->to_string()) : ordered_json(nullptr);
  out["verified"] = c.verified;
  std::cout << out.dump() << '\n';
  return 0;
}

int run_enumerate(const Options& opt, Part n) {
  const std::vector<Partition> list = signpart::enumerate_sign_partitions(n);
  if (opt.format == "json") {
    ordered_json out;
    out["n"] = n;
    out["count"] = list.size();
    ordered_json arr = ordered_json::array();
    for (const Partition& p : list) arr.push_back(p.to_string());
    out["partitions"] = std::move(arr);
    std::cout << out.dump() << '\n';
  } else {
    for (const Partition& p : list) std::cout << p.to_string() << '\n';
  }
  return 0;
}

int run_witness(const Options& opt, MemoCache& cache, const std::string& alpha_text,
                bool check) {
  const Partition alpha = parse_flag("--alpha", alpha_text);
  const WitnessCase wc = signpart::witness_beta(alpha, cache, opt.capacity);
  if (check) {
    // Independent re-evaluation with the opposite recursion order.
    const CharValue again = signpart::mn_char_small_first(wc.beta, alpha, cache);
    if (again != wc.computed) {
      throw signpart::InconsistencyError(
          "small-first re-evaluation of " + wc.beta.to_string() + " at " +
          alpha.to_string() + " gives " + signpart::to_string(again) + ", expected " +
          signpart::to_string(wc.computed));
    }
  }
  ordered_json out;
  out["alpha"] = alpha.to_string();
  out["case"] = signpart::case_name(wc.case_id);
  out["beta"] = wc.beta.to_string();
  out["claimed"] = wc.claimed ? json_char_value(*wc.claimed) : ordered_json(nullptr);
  out["computed"] = json_char_value(wc.computed);
  out["hook21"] = signpart::hook_21(wc.beta);
  std::cout << out.dump() << '\n';
  return 0;
}

int run_verify(const Options& opt, MemoCache& cache, Part max_n) {
  std::size_t disagreements = 0;
  ordered_json levels = ordered_json::array();
  for (Part n = 0; n <= max_n; ++n) {
    const VerifyLevel lvl = signpart::verify_equivalence_level(n, cache, opt.capacity);
    disagreements += lvl.disagreements;
    if (opt.format == "json") {
      ordered_json row;
      row["n"] = lvl.n;
      row["partitions"] = lvl.total;
      row["sign"] = lvl.sign_count;
      row["disagreements"] = lvl.disagreements;
      levels.push_back(std::move(row));
    } else {
      std::cout << "n=" << lvl.n << ": " << lvl.total << " partitions, " << lvl.sign_count
                << " sign, disagreements: " << lvl.disagreements << '\n';
    }
  }
  if (opt.format == "json") {
    ordered_json out;
    out["max_n"] = max_n;
    out["levels"] = std::move(levels);
    out["disagreements"] = disagreements;
    std::cout << out.dump() << '\n';
  }
  return disagreements == 0 ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact symmetric-group characters and sign conjugacy classes"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may appear after the subcommand

  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"plain", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--cache", opt.cache_path,
                 "Memo snapshot path; loaded at start, written back by table/verify "
                 "(SIGNPART_CACHE overrides)");
  app.add_option("--threads", opt.threads, "Worker threads (default: all cores)")
      ->check(CLI::PositiveNumber);
  app.add_option("--capacity", opt.capacity,
                 "Largest n for exhaustive work (tables, brute-force scans, searches)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();

  CLI::App* cmd_char = app.add_subcommand("char", "Evaluate one character value");
  std::string lambda_text, mu_text;
  cmd_char->add_option("--lambda", lambda_text, "Row partition (irreducible label)")
      ->required();
  cmd_char->add_option("--mu", mu_text, "Column partition (cycle type)")->required();

  CLI::App* cmd_table = app.add_subcommand("table", "Full character table of degree n");
  Part table_n = 0;
  cmd_table->add_option("--n", table_n, "Table degree")->required()
      ->check(CLI::NonNegativeNumber);

  CLI::App* cmd_classify =
      app.add_subcommand("classify", "Test sign-partition membership with a certificate");
  std::string gamma_text;
  bool verify_flag = false;
  cmd_classify->add_option("--gamma", gamma_text, "Partition to classify")->required();
  cmd_classify->add_flag("--verify", verify_flag,
                         "Cross-check the result against the brute-force oracle");

  CLI::App* cmd_enumerate = app.add_subcommand("enumerate", "List all sign partitions of n");
  Part enumerate_n = 0;
  cmd_enumerate->add_option("--n", enumerate_n, "Partition size")->required()
      ->check(CLI::NonNegativeNumber);

  CLI::App* cmd_witness = app.add_subcommand(
      "witness", "Construct beta with |chi^beta_alpha| >= 2 for a non-sign alpha");
  std::string alpha_text;
  bool check_flag = false;
  cmd_witness->add_option("--alpha", alpha_text, "Non-sign partition with a sign tail")
      ->required();
  cmd_witness->add_flag("--check", check_flag,
                        "Re-verify the value with the independent small-first evaluator");

  CLI::App* cmd_verify = app.add_subcommand(
      "verify", "Compare the membership test against brute force for every n <= max-n");
  Part max_n = 16;
  cmd_verify->add_option("--max-n", max_n, "Largest partition size to verify")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints message or help
    return code == 0 ? 0 : 2;
  }

  if (const char* env = std::getenv("SIGNPART_CACHE"); env != nullptr && *env != '\0') {
    opt.cache_path = env;
  }
#ifdef _OPENMP
  if (opt.threads > 0) omp_set_num_threads(opt.threads);
#endif
  if (opt.format == "csv" && !cmd_table->parsed()) {
    std::cerr << "error: csv output is only available for the table subcommand\n";
    return 2;
  }
  if (cmd_verify->parsed() && max_n > opt.capacity) {
    std::cerr << "error: verify --max-n " << max_n << " exceeds --capacity " << opt.capacity
              << '\n';
    return 2;
  }

  MemoCache cache;
  if (!opt.cache_path.empty()) cache.load(opt.cache_path);  // ignores missing/stale files

  try {
    int code = 0;
    bool persist = false;
    if (cmd_char->parsed()) {
      code = run_char(opt, cache, lambda_text, mu_text);
    } else if (cmd_table->parsed()) {
      code = run_table(opt, cache, table_n);
      persist = true;
    } else if (cmd_classify->parsed()) {
      code = run_classify(opt, cache, gamma_text, verify_flag);
    } else if (cmd_enumerate->parsed()) {
      code = run_enumerate(opt, enumerate_n);
    } else if (cmd_witness->parsed()) {
      code = run_witness(opt, cache, alpha_text, check_flag);
    } else if (cmd_verify->parsed()) {
      code = run_verify(opt, cache, max_n);
      persist = true;
    }
    if (persist && code == 0 && !opt.cache_path.empty()) cache.save(opt.cache_path);
    return code;
  } catch (const signpart::CapacityExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const signpart::InconsistencyError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const signpart::ClaimMismatch& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const signpart::SearchExhausted& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const signpart::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
