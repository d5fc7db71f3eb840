#include "verify/suites.hpp"

#include "recstat/extremal.hpp"
#include "recstat/permutation.hpp"
#include "recstat/probability.hpp"
#include "recstat/scaling.hpp"
#include "recstat/special_functions.hpp"
#include "recstat/tables.hpp"
#include "recstat/temme.hpp"
#include "verify/oracles.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <thread>
#include <utility>

namespace recstat::verify {
namespace {

constexpr double kLogSlack = 1e-9;

class Check {
 public:
  explicit Check(std::string name) : result_{std::move(name), true, {}} {}

  // Records the first failure only; later ones would repeat the story.
  template <class... Parts>
  void fail(const Parts&... parts) {
    if (!result_.passed) return;
    std::ostringstream detail;
    (detail << ... << parts);
    result_.passed = false;
    result_.detail = detail.str();
  }

  bool ok() const noexcept { return result_.passed; }
  CheckResult done() { return std::move(result_); }

 private:
  CheckResult result_;
};

template <class Visitor>
void for_each_lehmer_code(int n, Visitor&& visit) {
  std::vector<int> digits(static_cast<std::size_t>(n), 0);
  for (;;) {
    visit(static_cast<const std::vector<int>&>(digits));
    int i = n - 1;
    while (i >= 0 && digits[static_cast<std::size_t>(i)] == i) --i;
    if (i < 0) return;
    ++digits[static_cast<std::size_t>(i)];
    std::fill(digits.begin() + i + 1, digits.end(), 0);
  }
}

std::string upto(int limit, int max_n) { return std::to_string(std::min(limit, max_n)); }

std::vector<int> as_vector(const Permutation& p) { return {p.entries().begin(), p.entries().end()}; }

// ---------------------------------------------------------------- core

CheckResult lehmer_bijection(int max_n) {
  Check check("lehmer code is a bijection equal to the inversion table (n <= " + upto(6, max_n) + ")");
  for (int n = 1; n <= std::min(6, max_n) && check.ok(); ++n) {
    std::set<std::vector<int>> images;
    for_each_lehmer_code(n, [&](const std::vector<int>& digits) {
      const LehmerCode code(digits);
      const Permutation p = lehmer_decode(code);
      images.insert(as_vector(p));
      if (!(lehmer_encode(p) == code)) check.fail("encode(decode(r)) != r at ", p.to_string());
      if (oracle::inversion_table(as_vector(p)) != digits) {
        check.fail("decode(r) has a different inversion table, p = ", p.to_string());
      }
    });
    if (images.size() != static_cast<std::size_t>(oracle::factorial_product(n).get_ui())) {
      check.fail("n = ", n, ": ", images.size(), " distinct images");
    }
  }
  return check.done();
}

CheckResult records_match_definition(int max_n) {
  Check check("records agree with the definition and with the zeros of the Lehmer code (n <= " + upto(8, max_n) + ")");
  for (int n = 1; n <= std::min(8, max_n) && check.ok(); ++n) {
    oracle::for_each_permutation(n, [&](const std::vector<int>& a) {
      const Permutation p(a);
      const RecordProfile profile = records(p);
      const auto expected = oracle::record_positions(a);
      std::vector<int> zeros;
      const auto r = oracle::inversion_table(a);
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (r[i] == 0) zeros.push_back(static_cast<int>(i) + 1);
      }
      std::int64_t sum = 0;
      for (int v : expected) sum += v;
      if (profile.positions != expected || zeros != expected ||
          profile.rec != static_cast<int>(expected.size()) || profile.srec != sum) {
        check.fail("mismatch at ", p.to_string());
      }
    });
  }
  return check.done();
}

CheckResult tables_match_enumeration(int max_n) {
  Check check("rec and srec tables equal brute-force enumeration (n <= " + upto(8, max_n) + ")");
  for (int n = 1; n <= std::min(8, max_n) && check.ok(); ++n) {
    std::map<std::int64_t, long> rec_counts;
    std::map<std::int64_t, long> srec_counts;
    oracle::for_each_permutation(n, [&](const std::vector<int>& a) {
      const auto positions = oracle::record_positions(a);
      std::int64_t sum = 0;
      for (int v : positions) sum += v;
      ++rec_counts[static_cast<std::int64_t>(positions.size())];
      ++srec_counts[sum];
    });
    const CountTable rec = rec_table(n);
    const CountTable srec = srec_table(n);
    auto compare = [&](const CountTable& table, const std::map<std::int64_t, long>& counts) {
      for (std::int64_t k = table.min_k(); k <= table.max_k(); ++k) {
        const auto it = counts.find(k);
        const long expected = it == counts.end() ? 0 : it->second;
        if (table[k] != expected) {
          check.fail(to_string(table.kind()), " n = ", n, ", k = ", k, ": ", to_decimal(table[k]),
                     " != ", expected);
        }
      }
    };
    compare(rec, rec_counts);
    compare(srec, srec_counts);
    const auto [brute_rec, brute_srec] = brute_force_tables(n);
    if (!(brute_rec == rec) || !(brute_srec == srec)) check.fail("brute_force_tables differs at n = ", n);
  }
  return check.done();
}

CheckResult tables_match_polynomials(int max_n) {
  Check check("table rows equal the generating polynomial coefficients (rec n <= " + upto(60, max_n) + ", srec n <= " + upto(40, max_n) + ")");
  auto compare = [&](const CountTable& table, const oracle::Polynomial& poly) {
    if (static_cast<std::int64_t>(poly.size()) != table.max_k() + 1) {
      check.fail(to_string(table.kind()), " n = ", table.n(), ": degree mismatch");
      return;
    }
    for (std::int64_t k = 0; k <= table.max_k(); ++k) {
      if (table[k] != poly[static_cast<std::size_t>(k)]) {
        check.fail(to_string(table.kind()), " n = ", table.n(), ", k = ", k);
        return;
      }
    }
  };
  for (int n = 1; n <= std::min(60, max_n) && check.ok(); ++n) {
    compare(rec_table(n), oracle::rising_factorial_polynomial(n));
  }
  for (int n = 1; n <= std::min(40, max_n) && check.ok(); ++n) {
    compare(srec_table(n), oracle::record_sum_polynomial(n));
  }
  return check.done();
}

CheckResult row_sums(int max_n) {
  Check check("row sums equal n! (rec n <= " + upto(300, max_n) + ", srec n <= " + upto(150, max_n) + ")");
  auto run = [&](Statistic stat, int limit) {
    CountTable table = count_table(stat, 1);
    BigInt factorial = 1;
    for (int n = 1; n <= limit && check.ok(); ++n) {
      if (n > 1) table = extend_table(table);
      factorial *= n;
      if (table.total() != factorial) check.fail(to_string(stat), " n = ", n);
    }
  };
  run(Statistic::rec, std::min(300, max_n));
  run(Statistic::srec, std::min(150, max_n));
  return check.done();
}

CheckResult table_structure(int max_n) {
  Check check("table edge values and srec zeros (n <= " + upto(60, max_n) + ")");
  BigInt previous_factorial = 1;  // (n-1)!
  for (int n = 1; n <= std::min(60, max_n) && check.ok(); ++n) {
    if (n > 1) previous_factorial *= n - 1;
    const CountTable rec = rec_table(n);
    if (rec[0] != 0 || rec[1] != previous_factorial || rec[n] != 1) check.fail("rec edges at n = ", n);
    if (n >= 2 && rec[n - 1] != n * (n - 1) / 2) check.fail("c(n, n-1) at n = ", n);

    const CountTable srec = srec_table(n);
    const auto top = triangular(n);
    if (srec[1] != previous_factorial || srec[top] != 1) check.fail("srec edges at n = ", n);
    for (std::int64_t k = 1; k <= top; ++k) {
      const bool zero = n >= 2 && (k == 2 || k == top - 1);
      if ((sgn(srec[k]) == 0) != zero) check.fail("srec support at n = ", n, ", k = ", k);
      if (srec_feasible(n, k) == zero) check.fail("srec_feasible at n = ", n, ", k = ", k);
    }
  }
  return check.done();
}

CheckResult sampling_frequencies(int max_n) {
  const int n = std::min(8, max_n);
  constexpr std::size_t kCount = 20000;
  const double tolerance = 4.0 / std::sqrt(static_cast<double>(kCount));
  Check check("sampled record frequencies at position k are within 4/sqrt(N) of 1/k (n = " +
              std::to_string(n) + ", N = 20000)");
  constexpr std::uint64_t kSeed = 20240601;
  const auto batch = sample_uniform_batch(n, kSeed, kCount);
  if (!(batch.front() == sample_uniform(n, kSeed))) check.fail("batch[0] != sample_uniform");
  if (batch != sample_uniform_batch(n, kSeed, kCount)) check.fail("sampling is not deterministic");
  std::vector<std::size_t> hits(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& p : batch) {
    for (int position : oracle::record_positions(as_vector(p))) ++hits[static_cast<std::size_t>(position)];
  }
  for (int k = 1; k <= n; ++k) {
    const double frequency = static_cast<double>(hits[static_cast<std::size_t>(k)]) / kCount;
    if (std::abs(frequency - 1.0 / k) > tolerance) check.fail("k = ", k, ": frequency ", frequency);
  }
  return check.done();
}

std::vector<CheckResult> core_suite(int max_n) {
  std::vector<CheckResult> results;
  results.push_back(lehmer_bijection(max_n));
  results.push_back(records_match_definition(max_n));
  results.push_back(tables_match_enumeration(max_n));
  results.push_back(tables_match_polynomials(max_n));
  results.push_back(row_sums(max_n));
  results.push_back(table_structure(max_n));
  if (max_n >= 2) results.push_back(sampling_frequencies(max_n));
  return results;
}

// ---------------------------------------------------------------- bounds

CheckResult probability_sums(int max_n) {
  Check check("probability sums times n! equal the table counts (n <= " + upto(10, max_n) + ")");
  for (int n = 1; n <= std::min(10, max_n) && check.ok(); ++n) {
    const BigRational factorial(oracle::factorial_product(n));
    const CountTable rec = rec_table(n);
    const CountTable srec = srec_table(n);
    for (std::int64_t k = 0; k <= rec.max_k() + 1; ++k) {
      if (rec_prob_sum(n, k).value() * factorial != BigRational(rec[k])) check.fail("rec n = ", n, ", k = ", k);
    }
    for (std::int64_t k = 0; k <= srec.max_k() + 1; ++k) {
      if (srec_prob_sum(n, k).value() * factorial != BigRational(srec[k])) {
        check.fail("srec n = ", n, ", k = ", k);
      }
    }
  }
  return check.done();
}

PatternSpec full_pattern(int n, std::uint32_t mask) {
  PatternSpec spec{n, {}};
  spec.marks[1] = Mark::record;
  for (int v = 2; v <= n; ++v) {
    spec.marks[v] = (mask >> (v - 2)) & 1u ? Mark::record : Mark::no_record;
  }
  return spec;
}

CheckResult pattern_totals(int max_n) {
  Check check("pattern probabilities over all mark assignments sum to 1 (n <= " + upto(12, max_n) + ")");
  for (int n = 1; n <= std::min(12, max_n) && check.ok(); ++n) {
    BigRational total = 0;
    for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
      total += pattern_probability(full_pattern(n, mask)).value();
    }
    if (total != 1) check.fail("n = ", n, ": total ", total.get_str());
  }
  return check.done();
}

CheckResult pattern_frequencies(int max_n) {
  Check check("each full pattern probability equals its enumerated frequency (n <= " + upto(8, max_n) + ")");
  for (int n = 1; n <= std::min(8, max_n) && check.ok(); ++n) {
    std::vector<long> counts(std::size_t{1} << (n - 1), 0);
    oracle::for_each_permutation(n, [&](const std::vector<int>& a) {
      std::uint32_t mask = 0;
      for (int v : oracle::record_positions(a)) {
        if (v >= 2) mask |= 1u << (v - 2);
      }
      ++counts[mask];
    });
    const BigInt factorial = oracle::factorial_product(n);
    for (std::uint32_t mask = 0; mask < counts.size(); ++mask) {
      BigRational expected(BigInt(counts[mask]), factorial);
      expected.canonicalize();
      if (pattern_probability(full_pattern(n, mask)).value() != expected) {
        check.fail("n = ", n, ", mask = ", mask);
      }
    }
  }
  return check.done();
}

CheckResult rec_bounds(int max_n) {
  Check check("rec probability bounds bracket c(n,k)/n! (n <= " + upto(30, max_n) + ", slack 1e-9)");
  for (int n = 1; n <= std::min(30, max_n) && check.ok(); ++n) {
    const CountTable rec = rec_table(n);
    const double log_factorial = oracle::log_big(oracle::factorial_product(n));
    for (int k = 1; k <= n; ++k) {
      const double value = oracle::log_big(rec[k]) - log_factorial;
      const LogBounds bounds = rec_prob_bounds_at(n, k);
      if (!bounds.brackets(value, kLogSlack)) check.fail("n = ", n, ", k = ", k);
      const LogBounds via_x = rec_prob_bounds(n, static_cast<double>(k) / n);
      if (via_x.log_lower != bounds.log_lower || via_x.log_upper != bounds.log_upper) {
        check.fail("x = k/n does not select k at n = ", n, ", k = ", k);
      }
    }
  }
  return check.done();
}

CheckResult srec_bounds(int max_n) {
  Check check("srec probability and count bounds bracket the exact table (n <= " + upto(60, max_n) + ", slack 1e-9)");
  for (int n = 1; n <= std::min(60, max_n) && check.ok(); ++n) {
    const CountTable srec = srec_table(n);
    const double log_factorial = oracle::log_big(oracle::factorial_product(n));
    for (std::int64_t k = 1; k <= srec.max_k(); ++k) {
      if (sgn(srec[k]) == 0) continue;
      const double log_count = oracle::log_big(srec[k]);
      if (!srec_prob_bounds(n, k).brackets(log_count - log_factorial, kLogSlack)) {
        check.fail("probability bounds at n = ", n, ", k = ", k);
      }
      if (k >= 3 || k == 1) {
        if (!srec_count_bounds(n, k).brackets(log_count, kLogSlack)) {
          check.fail("count bounds at n = ", n, ", k = ", k);
        }
      }
    }
  }
  return check.done();
}

CheckResult min_product_exhaustive(int max_n) {
  Check check("min_product equals exhaustive subset minimum with the least witness (n <= " + upto(15, max_n) + ")");
  for (int n = 1; n <= std::min(15, max_n) && check.ok(); ++n) {
    const auto minima = oracle::subset_minima(n);
    for (std::int64_t k = 1; k <= triangular(n); ++k) {
      const auto it = minima.find(k);
      if (it == minima.end()) {
        if (srec_feasible(n, k)) check.fail("n = ", n, ", k = ", k, " reported feasible");
        continue;
      }
      const ExtremalResult result = min_product(n, k);
      if (result.m != it->second.product || result.witness != it->second.witness) {
        check.fail("n = ", n, ", k = ", k, ": m = ", to_decimal(result.m), ", expected ",
                   it->second.product);
      }
    }
  }
  return check.done();
}

CheckResult min_product_small_k(int max_n) {
  Check check("m(n,k) = k-1 with witness (1,k-1) for 3 <= k <= n (n <= " + upto(60, max_n) + ")");
  for (int n = 3; n <= std::min(60, max_n) && check.ok(); ++n) {
    const ExtremalTable& table = cached_extremal_table(n);
    for (int k = 3; k <= n; ++k) {
      const ExtremalResult result = table.min_product(k);
      if (result.m != k - 1 || result.witness != std::vector<int>{1, k - 1}) {
        check.fail("n = ", n, ", k = ", k);
      }
    }
  }
  return check.done();
}

CheckResult i0_forms(int max_n) {
  Check check("i0 closed form equals greedy form (n <= " + upto(200, max_n) + ") and a direct scan (n <= " + upto(40, max_n) + ")");
  for (int n = 2; n <= std::min(200, max_n) && check.ok(); ++n) {
    for (std::int64_t k = n + 1; k <= triangular(n); ++k) {
      const int closed = i0_closed(n, k);
      if (closed != i0_greedy(n, k)) check.fail("n = ", n, ", k = ", k);
      if (n <= 40 && closed != oracle::i0_by_scan(n, k)) check.fail("scan differs at n = ", n, ", k = ", k);
    }
  }
  return check.done();
}

CheckResult gamma_squeeze(int max_n) {
  Check check("Gamma bounds squeeze m(n,k) for k >= n+1 (n <= " + upto(40, max_n) + ", slack 1e-9)");
  for (int n = 2; n <= std::min(40, max_n) && check.ok(); ++n) {
    const ExtremalTable& table = cached_extremal_table(n);
    for (std::int64_t k = n + 1; k <= triangular(n); ++k) {
      if (!srec_feasible(n, k)) continue;
      const GammaBounds bounds = gamma_bounds(n, k);
      const double log_m = oracle::log_big(table.min_product(k).m);
      if (!(bounds.log_lower <= log_m + kLogSlack && log_m <= bounds.log_upper + kLogSlack)) {
        check.fail("n = ", n, ", k = ", k);
      }
    }
  }
  return check.done();
}

CheckResult i0_asymptotic(int max_n) {
  Check check("|n - i0 - n sqrt(1-x)| <= 3 at every breakpoint (4 <= n <= " + upto(500, max_n) + ")");
  for (int n = 4; n <= std::min(500, max_n) && check.ok(); ++n) {
    const auto top = triangular(n);
    for (std::int64_t k = n + 1; k <= top - 1; ++k) {
      const double x = static_cast<double>(k) / static_cast<double>(top);
      const double gap = n - i0_closed(n, floor_scaled(top, x)) - n * std::sqrt(1.0 - x);
      if (std::abs(gap) > 3.0) check.fail("n = ", n, ", k = ", k, ": gap ", gap);
    }
  }
  return check.done();
}

std::vector<CheckResult> bounds_suite(int max_n) {
  std::vector<CheckResult> results;
  results.push_back(probability_sums(max_n));
  results.push_back(pattern_totals(max_n));
  results.push_back(pattern_frequencies(max_n));
  results.push_back(rec_bounds(max_n));
  results.push_back(srec_bounds(max_n));
  results.push_back(min_product_exhaustive(max_n));
  if (max_n >= 3) results.push_back(min_product_small_k(max_n));
  if (max_n >= 2) {
    results.push_back(i0_forms(max_n));
    results.push_back(gamma_squeeze(max_n));
  }
  if (max_n >= 4) results.push_back(i0_asymptotic(max_n));
  return results;
}

// ---------------------------------------------------------------- scaling

CheckResult breakpoint_lookups(int max_n) {
  Check check("f_n and phi_n equal direct table lookups at every breakpoint (n <= " + upto(60, max_n) + ")");
  for (int n = 1; n <= std::min(60, max_n) && check.ok(); ++n) {
    const CountTable rec = rec_table(n);
    if (fn_value(rec, 0.0) != rec[1]) check.fail("f_n(0) at n = ", n);
    for (int k = 1; k <= n; ++k) {
      if (fn_value(rec, static_cast<double>(k) / n) != rec[k]) check.fail("f_n at n = ", n, ", k = ", k);
    }
    const CountTable srec = srec_table(n);
    const auto top = triangular(n);
    const double topd = static_cast<double>(top);
    if (phin_value(srec, 0.0) != srec[1] || phin_value(srec, 1.0) != 1) check.fail("phi_n ends at n = ", n);
    for (std::int64_t k = 3; k <= top - 2; ++k) {
      if (phin_value(srec, static_cast<double>(k) / topd) != srec[k]) {
        check.fail("phi_n at n = ", n, ", k = ", k);
      }
    }
    if (n >= 3 && phin_value(srec, static_cast<double>(top - 1) / topd) != 1) {
      check.fail("phi_n((N-1)/N) at n = ", n);
    }
  }
  return check.done();
}

CheckResult curve_endpoint(int max_n) {
  Check check("psi_n(1) = 0 for both statistics (2 <= n <= " + upto(100, max_n) + ")");
  for (int n = 2; n <= std::min(100, max_n); ++n) {
    for (Statistic stat : {Statistic::rec, Statistic::srec}) {
      if (scaled_value(count_table(stat, n), 1.0) != 0.0) check.fail(to_string(stat), " n = ", n);
    }
  }
  return check.done();
}

CheckResult segment_dominance(int max_n) {
  Check check("sup deviation dominates dense interior samples and matches ln n scaling (2 <= n <= " + upto(40, max_n) + ")");
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int n = 2; n <= std::min(40, max_n) && check.ok(); ++n) {
    for (Statistic stat : {Statistic::rec, Statistic::srec}) {
      const CountTable table = count_table(stat, n);
      const DeviationReport report = sup_deviation(table);
      double sampled = 0.0;
      for (int i = 0; i < 2000; ++i) {
        const double x = unit(rng);
        sampled = std::max(sampled, std::abs(scaled_value(table, x) - target_value(stat, x)));
      }
      for (const auto& segment : curve_segments(table)) {
        const double x = segment.lo;
        sampled = std::max(sampled, std::abs(scaled_value(table, x) - target_value(stat, x)));
      }
      if (sampled > report.sup_dev + 1e-12) check.fail(to_string(stat), " n = ", n, ": sample exceeds sup");
      const double at_argmax =
          std::abs(scaled_value(table, report.argmax_x) - target_value(stat, report.argmax_x));
      if (at_argmax > report.sup_dev + 1e-12) check.fail(to_string(stat), " n = ", n, ": argmax");
      if (std::abs(report.tau - report.sup_dev * std::log(static_cast<double>(n))) > 1e-15) {
        check.fail(to_string(stat), " n = ", n, ": tau");
      }
    }
  }
  return check.done();
}

CheckResult series_consistency(int max_n) {
  Check check("incremental tau series equals per-n deviation reports (2 <= n <= " + upto(30, max_n) + ")");
  const int top = std::min(30, max_n);
  for (Statistic stat : {Statistic::rec, Statistic::srec}) {
    const auto series = tau_series(stat, 2, top);
    for (const auto& report : series) {
      const DeviationReport direct = sup_deviation(report.n, stat);
      if (direct.sup_dev != report.sup_dev || direct.argmax_x != report.argmax_x) {
        check.fail(to_string(stat), " n = ", report.n);
      }
    }
  }
  return check.done();
}

CheckResult tau_certificate(Statistic stat, int limit, int max_n) {
  const int top = std::min(limit, max_n);
  Check check(std::string(to_string(stat)) + " tau(n) <= 1.1 max_{2<=n<=50} tau for n <= " + std::to_string(top));
  const auto series = tau_series(stat, 2, top);
  double c_emp = 0.0;
  for (const auto& report : series) {
    if (report.n <= 50) c_emp = std::max(c_emp, report.tau);
  }
  for (const auto& report : series) {
    if (report.tau > 1.1 * c_emp) check.fail("n = ", report.n, ": tau ", report.tau, " vs C_emp ", c_emp);
  }
  return check.done();
}

std::vector<CheckResult> scaling_suite(int max_n) {
  std::vector<CheckResult> results;
  results.push_back(breakpoint_lookups(max_n));
  if (max_n >= 2) {
    results.push_back(curve_endpoint(max_n));
    results.push_back(segment_dominance(max_n));
    results.push_back(series_consistency(max_n));
  }
  if (max_n >= 51) {
    results.push_back(tau_certificate(Statistic::rec, 200, max_n));
    results.push_back(tau_certificate(Statistic::srec, 150, max_n));
  }
  return results;
}

// ---------------------------------------------------------------- temme

CheckResult log_gamma_integers() {
  Check check("log_gamma(k) = ln((k-1)!) for integers k <= 171 (abs 1e-9)");
  BigInt factorial = 1;
  for (int k = 1; k <= 171; ++k) {
    if (k > 1) factorial *= k - 1;
    const double expected = oracle::log_big(factorial);
    if (std::abs(log_gamma(k) - expected) > 1e-9) check.fail("k = ", k);
  }
  return check.done();
}

CheckResult special_recurrences() {
  Check check("digamma and trigamma recurrences at 100 random points in [0.5, 1e4] (abs 1e-10)");
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> dist(0.5, 1e4);
  for (int i = 0; i < 100; ++i) {
    const double x = dist(rng);
    if (std::abs(digamma(x + 1.0) - digamma(x) - 1.0 / x) > 1e-10) check.fail("digamma at x = ", x);
    if (std::abs(trigamma(x) - trigamma(x + 1.0) - 1.0 / (x * x)) > 1e-10) check.fail("trigamma at x = ", x);
  }
  return check.done();
}

CheckResult special_values() {
  Check check("special function reference values at 1/2 and 1");
  const double pi = std::numbers::pi;
  if (std::abs(log_gamma(0.5) - 0.5 * std::log(pi)) > 1e-12) check.fail("log_gamma(1/2)");
  if (std::abs(digamma(1.0) + std::numbers::egamma) > 1e-12) check.fail("digamma(1)");
  if (std::abs(digamma(0.5) + std::numbers::egamma + 2.0 * std::numbers::ln2) > 1e-12) check.fail("digamma(1/2)");
  if (std::abs(trigamma(1.0) - pi * pi / 6.0) > 1e-12) check.fail("trigamma(1)");
  if (std::abs(trigamma(0.5) - pi * pi / 2.0) > 1e-12) check.fail("trigamma(1/2)");
  return check.done();
}

CheckResult saddle_small() {
  Check check("solve_u1(2,1) = sqrt(2) (abs 1e-9)");
  const double u1 = solve_u1(2, 1);
  if (std::abs(u1 - std::numbers::sqrt2) > 1e-9) check.fail("u1 = ", u1);
  return check.done();
}

CheckResult phi_prime_forms(int max_n) {
  Check check("phi' via digamma differences equals the direct sum (2 <= n <= " + upto(300, max_n) + ")");
  for (int n = 2; n <= std::min(300, max_n) && check.ok(); ++n) {
    for (int m = 1; m < n; ++m) {
      for (double u : {1e-3, 0.5, 1.0, 7.25, 100.0, 1e5}) {
        const double fast = phi_prime(u, n, m);
        const double direct = phi_prime_direct(u, n, m);
        const double scale = m / u + n / (u + 1.0);
        if (std::abs(fast - direct) > 1e-12 * scale) check.fail("n = ", n, ", m = ", m, ", u = ", u);
      }
    }
  }
  return check.done();
}

CheckResult saddle_residuals(int max_n) {
  Check check("u1 has a small residual and lies in the saddle bracket (50 <= n <= " + upto(5000, max_n) +
              ", x = 0.1..0.9)");
  for (int n : {50, 100, 200, 400, 1000, 5000}) {
    if (n > max_n) break;
    for (int tenth = 1; tenth <= 9; ++tenth) {
      const int m = static_cast<int>(floor_scaled(n, tenth / 10.0));
      const double u1 = solve_u1(n, m);
      const SaddleBracket bracket = saddle_bracket(n, m);
      if (!(bracket.lower <= u1 && u1 <= bracket.upper)) check.fail("bracket at n = ", n, ", m = ", m);
      if (std::abs(phi_prime(u1, n, m)) > 1e-10 * m / u1) check.fail("residual at n = ", n, ", m = ", m);
    }
  }
  return check.done();
}

CheckResult temme_trend(int max_n) {
  Check check("estimate of c(n, n/2) improves strictly over n = 20, 40, 80, 160");
  double previous = INFINITY;
  std::ostringstream errors;
  for (int n : {20, 40, 80, 160}) {
    if (n > max_n) break;
    const int m = n / 2;
    const double exact = oracle::log_big(rec_table(n)[m]);
    const double error = std::abs(std::expm1(stirling_estimate(n, m).log_estimate - exact));
    errors << ' ' << error;
    if (!(error < previous)) check.fail("errors:", errors.str());
    previous = error;
  }
  return check.done();
}

CheckResult scaled_limit_trend(int max_n) {
  Check check("|log_estimate/(n ln n) - (1-x)| decreases over n = 25..400 for x = 0.25, 0.5, 0.75");
  std::vector<int> ns;
  for (int n : {25, 50, 100, 200, 400}) {
    if (n <= max_n) ns.push_back(n);
  }
  for (double x : {0.25, 0.5, 0.75}) {
    const ScaledLimitTable table = scaled_limit_table(x, ns);
    double previous = INFINITY;
    for (const auto& point : table.points) {
      const double deviation = std::abs(point.value - (1.0 - x));
      if (!(deviation < previous)) check.fail("x = ", x, ", n = ", point.n);
      previous = deviation;
    }
  }
  return check.done();
}

std::vector<CheckResult> temme_suite(int max_n) {
  std::vector<CheckResult> results;
  results.push_back(log_gamma_integers());
  results.push_back(special_recurrences());
  results.push_back(special_values());
  results.push_back(saddle_small());
  if (max_n >= 2) results.push_back(phi_prime_forms(max_n));
  if (max_n >= 50) results.push_back(saddle_residuals(max_n));
  if (max_n >= 160) results.push_back(temme_trend(max_n));
  if (max_n >= 400) results.push_back(scaled_limit_trend(max_n));
  return results;
}

}  // namespace

std::string_view to_string(Suite suite) noexcept {
  switch (suite) {
    case Suite::core: return "core";
    case Suite::bounds: return "bounds";
    case Suite::scaling: return "scaling";
    case Suite::temme: return "temme";
  }
  return "unknown";
}

std::optional<std::vector<Suite>> parse_suites(std::string_view text) {
  const std::vector<Suite> all{Suite::core, Suite::bounds, Suite::scaling, Suite::temme};
  if (text == "all") return all;
  for (Suite suite : all) {
    if (text == to_string(suite)) return std::vector<Suite>{suite};
  }
  return std::nullopt;
}

std::vector<CheckResult> run_suite(Suite suite, int max_n) {
  switch (suite) {
    case Suite::core: return core_suite(max_n);
    case Suite::bounds: return bounds_suite(max_n);
    case Suite::scaling: return scaling_suite(max_n);
    case Suite::temme: return temme_suite(max_n);
  }
  return {};
}

std::vector<CheckResult> run_suites(std::span<const Suite> suites, int max_n, unsigned threads) {
  std::vector<std::vector<CheckResult>> slots(suites.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < suites.size(); i = next++) {
      try {
        slots[i] = run_suite(suites[i], max_n);
      } catch (const std::exception& e) {
        slots[i] = {{std::string(to_string(suites[i])) + " suite completes", false, e.what()}};
      }
    }
  };
  const auto count = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(suites.size(), 1));
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < count; ++t) pool.emplace_back(worker);
    worker();
  }
  std::vector<CheckResult> merged;
  for (auto& slot : slots) std::move(slot.begin(), slot.end(), std::back_inserter(merged));
  return merged;
}

unsigned configured_threads() {
  if (const char* value = std::getenv("RECSTAT_THREADS")) {
    char* end = nullptr;
    const long parsed = std::strtol(value, &end, 10);
    if (end != value && *end == '\0' && parsed > 0) return static_cast<unsigned>(parsed);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace recstat::verify
