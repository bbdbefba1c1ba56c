/// @file sytlab_cli.cpp
/// @brief Command-line front end: count sequences, verify identities, run the
/// RS map, trace the bijections and audit the sign-reversing involution.
///
/// Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
/// 3 scale limit exceeded, 4 f undefined on a fixed-point-free pair.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sytlab/cache_file.hpp"
#include "sytlab/records.hpp"
#include "sytlab/sytlab.hpp"

namespace {

using namespace sytlab;

enum ExitCode : int { kOk = 0, kFailed = 1, kUsage = 2, kScale = 3, kFUndefined = 4 };

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GlobalOptions {
  std::string format = "table";
  std::string cache_path;
  bool verify_cache = false;
  std::optional<std::size_t> oracle_limit;
  bool trace = false;
};

IdentityVerdict run_identity(const std::string& id, std::optional<std::size_t> k, std::size_t n, CountCache& cache) {
  auto need_k = [&]() -> std::size_t {
    if (!k) throw UsageError("identity '" + id + "' requires --k");
    return *k;
  };
  auto no_k = [&] {
    if (k) throw UsageError("identity '" + id + "' takes no --k");
  };
  if (id == "wilf" || id == "wilf_even") return verify_wilf_even(need_k(), n, cache);
  if (id == "odd" || id == "odd_k") return verify_odd_k(need_k(), n, cache);
  if (id == "naive-failure" || id == "naive_failure") return demonstrate_naive_failure(need_k(), n, cache);
  if (id == "unrestricted") return no_k(), verify_unrestricted(n, cache);
  if (id == "fpf" || id == "fpf_pairs") return no_k(), verify_fpf_pairs(n, cache);
  if (id == "corollary" || id == "corollary_k3") return no_k(), verify_corollary_k3(n, cache);
  if (id == "a005568") return no_k(), verify_a005568(n, cache);
  throw UsageError("unknown identity '" + id + "'");
}

ColoredInvolution parse_colored(std::size_t n, const std::string& red, const std::string& blue) {
  std::vector<ColoredCycle> cycles;
  auto add = [&](const std::string& text, Color color) {
    auto v = parse_cycles(text);
    if (!v.is_fixed_point_free()) throw ParseError("colored cycles must be 2-cycles");
    for (const auto& c : v.two_cycles()) cycles.push_back({c, color});
  };
  add(red, Color::red);
  add(blue, Color::blue);
  return ColoredInvolution(std::move(cycles), n);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact standard Young tableau and involution identities"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_option("--format", global.format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_option("--cache", global.cache_path, "Count cache file (loaded if present, saved afterwards)");
  app.add_flag("--verify-cache", global.verify_cache, "Recompute every cached value on load");
  app.add_option("--oracle-limit", global.oracle_limit, "Size cap for exhaustive routines (audit pair space)");
  app.add_flag("--trace", global.trace, "Show intermediate steps of bijections");

  // count
  auto* count = app.add_subcommand("count", "Print values of a counting sequence");
  std::string family;
  std::optional<std::size_t> count_k;
  std::string count_n;
  count->add_option("family", family, "u | y | y_unbounded | x_unbounded | x | catalan")->required();
  count->add_option("--k", count_k, "Bound k");
  count->add_option("--n", count_n, "Size N or inclusive range A..B")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "Verify identity instances exactly");
  std::string identity;
  std::optional<std::size_t> verify_k;
  std::string verify_n;
  verify->add_option("identity", identity,
                     "wilf | unrestricted | fpf | odd | corollary | a005568 | naive-failure")
      ->required();
  verify->add_option("--k", verify_k, "Bound k");
  verify->add_option("--n", verify_n, "Size N or inclusive range A..B")->required();

  // rsk
  auto* rsk = app.add_subcommand("rsk", "Robinson-Schensted tableau of an involution");
  std::optional<std::string> rsk_cycles;
  std::optional<std::string> rsk_word;
  auto* cycles_opt = rsk->add_option("--cycles", rsk_cycles, "Cycle notation, e.g. \"(31)(62)(5)\"");
  auto* word_opt = rsk->add_option("--word", rsk_word, "One-line form, e.g. \"3 6 1 5 2\"");
  cycles_opt->excludes(word_opt);
  rsk->require_option(1);

  // bijection
  auto* bijection = app.add_subcommand("bijection", "Apply f, g or g-inverse");
  std::string map_id;
  std::size_t bij_n = 0;
  std::string p_text;
  std::string q_text;
  std::string chosen_text;
  std::string red_text;
  std::string blue_text;
  bijection->add_option("map", map_id, "f | g | g-inverse")->required()->check(CLI::IsMember({"f", "g", "g-inverse"}));
  bijection->add_option("--n", bij_n, "Ground set is {1..2n}")->required();
  bijection->add_option("--p", p_text, "f: first involution (cycle notation)");
  bijection->add_option("--q", q_text, "f: second involution (cycle notation)");
  bijection->add_option("--chosen", chosen_text, "g: the arranged labels a_1 .. a_n");
  bijection->add_option("--red", red_text, "g-inverse: red 2-cycles");
  bijection->add_option("--blue", blue_text, "g-inverse: blue 2-cycles");

  // audit
  auto* audit = app.add_subcommand("audit", "Exhaustive sign-reversing involution audit");
  std::size_t audit_n = 0;
  std::optional<std::size_t> audit_k;
  audit->add_option("--n", audit_n, "Ground set is {1..2n}")->required();
  audit->add_option("--k", audit_k, "Odd LDS bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    auto format = *parse_format(global.format);
    OracleLimits limits;
    if (global.oracle_limit) limits.pair_space = *global.oracle_limit;

    if (global.verify_cache && global.cache_path.empty()) throw UsageError("--verify-cache needs --cache PATH");
    CountCache cache;
    if (!global.cache_path.empty() && std::filesystem::exists(global.cache_path)) {
      cache = load_cache_file(global.cache_path);
      if (global.verify_cache) {
        auto bad = find_cache_mismatches(cache);
        for (const auto& q : bad) {
          std::cerr << "cache entry " << cache_key(q) << " = " << to_decimal(*cache.find(q))
                    << " disagrees with recomputed value " << to_decimal(compute_count(q)) << "\n";
        }
        if (!bad.empty()) return kFailed;
      }
    }

    OutputRecord record;
    int status = kOk;

    if (*count) {
      auto fam = parse_family(family);
      if (!fam) throw UsageError("unknown family '" + family + "'");
      CountQuery base{*fam, count_k, 0};
      try {
        base.validate();
      } catch (const PreconditionError& e) {
        throw UsageError(e.what());
      }
      record = count_record(base, parse_range(count_n), cache);
    } else if (*verify) {
      std::vector<IdentityVerdict> verdicts;
      for (auto n : parse_range(verify_n)) {
        try {
          verdicts.push_back(run_identity(identity, verify_k, n, cache));
        } catch (const PreconditionError& e) {
          throw UsageError(e.what());
        }
      }
      for (const auto& v : verdicts) {
        if (!v.holds || !v.terms_consistent()) status = kFailed;
      }
      record = verdict_record(verdicts);
    } else if (*rsk) {
      auto v = rsk_cycles ? parse_cycles(*rsk_cycles) : parse_word(*rsk_word);
      record = rsk_record(v);
    } else if (*bijection) {
      if (map_id == "f") {
        try {
          record = f_record(PairState(parse_cycles(p_text), parse_cycles(q_text), bij_n), global.trace);
        } catch (const PreconditionError& e) {
          throw UsageError(e.what());
        }
      } else if (map_id == "g") {
        try {
          record = g_record(Arrangement(parse_labels(chosen_text), bij_n), global.trace);
        } catch (const PreconditionError& e) {
          throw UsageError(e.what());
        }
      } else {
        try {
          record = g_inverse_record(parse_colored(bij_n, red_text, blue_text), global.trace);
        } catch (const PreconditionError& e) {
          throw UsageError(e.what());
        }
      }
    } else if (*audit) {
      AuditReport report;
      try {
        report = signed_cancellation_audit(audit_n, audit_k, limits, cache);
      } catch (const PreconditionError& e) {
        throw UsageError(e.what());
      }
      if (!report.passed()) status = kFailed;
      record = audit_record(report);
    }

    std::cout << render(record, format);
    if (!global.cache_path.empty()) save_cache_file(cache, global.cache_path);
    return status;
  } catch (const FUndefined& e) {
    std::cerr << e.what() << "\n";
    return kFUndefined;
  } catch (const ScaleLimitError& e) {
    std::cerr << e.what() << "\n";
    return kScale;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvariantBreach& e) {
    std::cerr << "invariant breach: " << e.what() << "\n";
    return kFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
}
