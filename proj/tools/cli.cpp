#include "cli.hpp"

#include "recstat/extremal.hpp"
#include "recstat/io.hpp"
#include "recstat/permutation.hpp"
#include "recstat/probability.hpp"
#include "recstat/scaling.hpp"
#include "recstat/tables.hpp"
#include "recstat/temme.hpp"
#include "verify/suites.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace recstat::cli {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  std::string document;
  int status = kExitSuccess;
};

// Temp file in the destination directory, then rename, so readers never see
// a partial document.
void write_atomically(const fs::path& path, const std::string& document) {
  std::random_device entropy;
  fs::path temp = path;
  temp += ".tmp-" + std::to_string(entropy());
  {
    std::ofstream file(temp, std::ios::binary | std::ios::trunc);
    if (!file) throw std::runtime_error("cannot write " + path.string());
    file << document;
    file.close();
    if (!file) {
      std::error_code ignored;
      fs::remove(temp, ignored);
      throw std::runtime_error("cannot write " + path.string());
    }
  }
  std::error_code ec;
  fs::rename(temp, path, ec);
  if (ec) {
    std::error_code ignored;
    fs::remove(temp, ignored);
    throw std::runtime_error("cannot write " + path.string() + ": " + ec.message());
  }
}

Statistic statistic_from(const std::string& text) {
  // The option validator already restricts the spelling.
  return *parse_statistic(text);
}

std::string verify_report(const std::vector<verify::CheckResult>& results, bool& all_passed) {
  std::ostringstream out;
  std::size_t passed = 0;
  for (const auto& result : results) {
    out << (result.passed ? "PASS " : "FAIL ") << result.name;
    if (!result.passed) out << ": " << result.detail;
    out << '\n';
    passed += result.passed ? 1 : 0;
  }
  out << passed << '/' << results.size() << " checks passed\n";
  all_passed = passed == results.size();
  return out.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and asymptotic counts of permutations by records", "recstat"};
  app.require_subcommand(1);
  app.fallthrough(true);

  std::string output_path;
  app.add_option("-o,--output", output_path, "write the document to this file instead of stdout");

  int n = 0;
  int n_min = 0;
  int n_max = 0;
  int m = 0;
  std::int64_t k = 0;
  std::uint64_t seed = 0;
  std::size_t count = 1;
  std::size_t points = 0;
  int max_n = 8;
  bool compare = false;
  std::string format = "csv";
  std::string perm_text;
  std::string marks;
  std::string stat_text;
  std::string suite_text;

  const auto positive = CLI::Range(1, std::numeric_limits<int>::max());
  const auto formats = CLI::IsMember({"csv", "json"});
  const auto stats = CLI::IsMember({"rec", "srec"});
  std::function<Outcome()> action;

  auto* rec_cmd = app.add_subcommand("rec-table", "counts c(n,k) of permutations with k records");
  auto* srec_cmd = app.add_subcommand("srec-table", "counts of permutations by sum of record positions");
  for (auto* cmd : {rec_cmd, srec_cmd}) {
    cmd->add_option("--n", n, "permutation size")->required()->check(positive);
    cmd->add_option("--format", format, "csv or json")->check(formats);
  }
  rec_cmd->callback([&] {
    action = [&] {
      const CountTable table = rec_table(n);
      return Outcome{format == "json" ? table_json(table) : table_csv(table)};
    };
  });
  srec_cmd->callback([&] {
    action = [&] {
      const CountTable table = srec_table(n);
      return Outcome{format == "json" ? table_json(table) : table_csv(table)};
    };
  });

  auto* records_cmd = app.add_subcommand("records", "record positions of one permutation");
  records_cmd->add_option("--perm", perm_text, "comma-separated one-line notation")->required();
  records_cmd->callback([&] {
    action = [&] { return Outcome{record_profile_json(records(Permutation::parse(perm_text)))}; };
  });

  auto* sample_cmd = app.add_subcommand("sample", "uniform random permutations, one per line");
  sample_cmd->add_option("--n", n, "permutation size")->required()->check(positive);
  sample_cmd->add_option("--seed", seed, "generator seed")->required();
  sample_cmd->add_option("--count", count, "number of permutations");
  sample_cmd->callback([&] {
    action = [&] {
      std::string document;
      for (const auto& p : sample_uniform_batch(n, seed, count)) document += p.to_string() + "\n";
      return Outcome{document};
    };
  });

  auto* pattern_cmd = app.add_subcommand("pattern", "exact probability of a record/non-record pattern");
  pattern_cmd->add_option("--n", n, "permutation size")->required()->check(positive);
  pattern_cmd->add_option("--marks", marks, "e.g. 2:Y,5:N")->required();
  pattern_cmd->callback([&] {
    action = [&] { return Outcome{pattern_probability(PatternSpec::parse(n, marks)).to_string() + "\n"}; };
  });

  auto* min_cmd = app.add_subcommand("min-product", "least product of record positions summing to k");
  min_cmd->add_option("--n", n, "permutation size")->required()->check(positive);
  min_cmd->add_option("--k", k, "sum of record positions")->required();
  min_cmd->add_option("--format", format, "csv or json")->check(formats);
  min_cmd->callback([&] {
    action = [&] {
      const ExtremalResult result = min_product(n, k);
      return Outcome{format == "json" ? extremal_json(result) : extremal_csv(result)};
    };
  });

  auto* curve_cmd = app.add_subcommand("curve", "scaled log-count curve against its limit");
  curve_cmd->add_option("--stat", stat_text, "rec or srec")->required()->check(stats);
  curve_cmd->add_option("--n", n, "permutation size")->required()->check(CLI::Range(2, 100000));
  curve_cmd->add_option("--points", points, "uniform grid size; breakpoints when omitted")
      ->check(CLI::Range(std::size_t{2}, std::size_t{10000000}));
  curve_cmd->callback([&] {
    action = [&] {
      const CountTable table = count_table(statistic_from(stat_text), n);
      const Sampling sampling = points == 0 ? Sampling::breakpoints : Sampling::grid;
      return Outcome{curve_csv(curve_samples(table, points, sampling))};
    };
  });

  auto* tau_cmd = app.add_subcommand("tau", "sup deviation times ln n over a range of n");
  tau_cmd->add_option("--stat", stat_text, "rec or srec")->required()->check(stats);
  tau_cmd->add_option("--n-min", n_min, "first n")->required()->check(CLI::Range(2, 100000));
  tau_cmd->add_option("--n-max", n_max, "last n")->required()->check(CLI::Range(2, 100000));
  tau_cmd->callback([&] {
    action = [&] {
      const auto series = tau_series(statistic_from(stat_text), n_min, n_max);
      return Outcome{deviation_csv(series)};
    };
  });

  auto* dev_cmd = app.add_subcommand("deviation", "sup deviation of the scaled curve for one n");
  dev_cmd->add_option("--stat", stat_text, "rec or srec")->required()->check(stats);
  dev_cmd->add_option("--n", n, "permutation size")->required()->check(CLI::Range(2, 100000));
  dev_cmd->add_option("--format", format, "csv or json")->check(formats);
  dev_cmd->callback([&] {
    action = [&] {
      const DeviationReport report = sup_deviation(n, statistic_from(stat_text));
      return Outcome{format == "json" ? deviation_json(report)
                                      : deviation_csv(std::span<const DeviationReport>(&report, 1))};
    };
  });

  auto* temme_cmd = app.add_subcommand("temme", "saddle-point estimate of c(n+1, m+1)");
  temme_cmd->add_option("--n", n, "n")->required()->check(CLI::Range(2, 10000000));
  temme_cmd->add_option("--m", m, "m, 1 <= m <= n-1")->required()->check(positive);
  temme_cmd->add_flag("--compare", compare, "add the exact value (n <= 5000)");
  temme_cmd->callback([&] {
    action = [&] {
      if (compare && n > 5000) throw SizeLimitError("--compare is limited to n <= 5000");
      const TemmeEstimate estimate = temme_estimate(n, m);
      std::optional<double> log_exact;
      if (compare) log_exact = big_ln(rec_table(n + 1)[m + 1]);
      return Outcome{temme_csv_header() + temme_csv_row(estimate, log_exact)};
    };
  });

  auto* verify_cmd = app.add_subcommand("verify", "run invariant suites against independent oracles");
  verify_cmd->add_option("--suite", suite_text, "core, bounds, scaling, temme or all")
      ->required()
      ->check(CLI::IsMember({"core", "bounds", "scaling", "temme", "all"}));
  verify_cmd->add_option("--max-n", max_n, "largest n exercised")->check(CLI::Range(1, 500));
  verify_cmd->callback([&] {
    action = [&] {
      const auto suites = *verify::parse_suites(suite_text);
      bool all_passed = false;
      std::string document =
          verify_report(verify::run_suites(suites, max_n, verify::configured_threads()), all_passed);
      return Outcome{std::move(document), all_passed ? kExitSuccess : kExitVerificationFailed};
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) return app.exit(e, out, err);
    err << "recstat: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    const Outcome outcome = action();
    if (output_path.empty()) {
      out << outcome.document;
      out.flush();
    } else {
      write_atomically(output_path, outcome.document);
    }
    return outcome.status;
  } catch (const std::exception& e) {
    err << "recstat: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace recstat::cli
