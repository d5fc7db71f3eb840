#include "recstat/probability.hpp"

#include "recstat/extremal.hpp"
#include "recstat/special_functions.hpp"
#include "recstat/tables.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <numbers>
#include <string>

namespace recstat {
namespace {

void require_enumerable(int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1, got " + std::to_string(n));
  if (n > kMaxEnumerationSize) {
    throw SizeLimitError("subset enumeration is limited to n <= " +
                         std::to_string(kMaxEnumerationSize) + ", got " + std::to_string(n));
  }
}

// Weight of one record-position set: prod_{v in set} 1/v * prod_{v not in set} (1 - 1/v),
// over positions 2..n (position 1 is always a record and contributes 1/1).
// Bit (v - 2) of `mask` marks v as a record position.
BigRational set_weight(int n, unsigned mask) {
  BigRational weight(1);
  for (int v = 2; v <= n; ++v) {
    const BigRational inverse(1, v);
    if (mask & (1u << (v - 2))) {
      weight *= inverse;
    } else {
      weight *= BigRational(1) - inverse;
    }
  }
  return weight;
}

}  // namespace

ExactProbability::ExactProbability(BigRational value) : value_(std::move(value)) {
  value_.canonicalize();
  if (sgn(value_) < 0 || value_ > 1) {
    throw std::domain_error("probability " + value_.get_str() + " outside [0, 1]");
  }
}

std::string ExactProbability::to_string() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

PatternSpec PatternSpec::parse(int n, std::string_view text) {
  PatternSpec spec{n, {}};
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    const auto field = text.substr(start, end - start);
    const auto colon = field.find(':');
    int position = 0;
    const auto pos_text = field.substr(0, colon == std::string_view::npos ? 0 : colon);
    const auto [ptr, ec] =
        std::from_chars(pos_text.data(), pos_text.data() + pos_text.size(), position);
    const auto mark_text = colon == std::string_view::npos ? std::string_view{}
                                                            : field.substr(colon + 1);
    if (pos_text.empty() || ec != std::errc() || ptr != pos_text.data() + pos_text.size() ||
        (mark_text != "Y" && mark_text != "N")) {
      throw std::invalid_argument("malformed mark '" + std::string(field) +
                                  "', expected <position>:Y or <position>:N");
    }
    const auto mark = mark_text == "Y" ? Mark::record : Mark::no_record;
    if (!spec.marks.emplace(position, mark).second) {
      throw std::invalid_argument("position " + std::to_string(position) + " marked twice");
    }
    start = end + 1;
  }
  return spec;
}

ExactProbability pattern_probability(const PatternSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("pattern size must be >= 1");
  BigRational p(1);
  for (const auto& [position, mark] : spec.marks) {
    if (position < 1 || position > spec.n) {
      throw std::invalid_argument("marked position " + std::to_string(position) +
                                  " outside 1.." + std::to_string(spec.n));
    }
    if (position == 1) {
      if (mark == Mark::no_record) {
        throw InfeasibleError("position 1 is always a record and cannot be marked N");
      }
      continue;
    }
    const BigRational inverse(1, position);
    p *= mark == Mark::record ? inverse : BigRational(1) - inverse;
  }
  return ExactProbability(std::move(p));
}

ExactProbability rec_prob_sum(int n, std::int64_t k) {
  require_enumerable(n);
  if (k < 1 || k > n) return ExactProbability();
  BigRational sum(0);
  const unsigned subsets = 1u << (n - 1);
  for (unsigned mask = 0; mask < subsets; ++mask) {
    if (std::popcount(mask) + 1 == k) sum += set_weight(n, mask);
  }
  return ExactProbability(std::move(sum));
}

ExactProbability srec_prob_sum(int n, std::int64_t k) {
  require_enumerable(n);
  if (k < 1 || k > triangular(n)) return ExactProbability();
  BigRational sum(0);
  const unsigned subsets = 1u << (n - 1);
  for (unsigned mask = 0; mask < subsets; ++mask) {
    std::int64_t positions = 1;
    for (int v = 2; v <= n; ++v) {
      if (mask & (1u << (v - 2))) positions += v;
    }
    if (positions == k) sum += set_weight(n, mask);
  }
  return ExactProbability(std::move(sum));
}

LogBounds rec_prob_bounds_at(int n, std::int64_t k) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (k < 1 || k > n) {
    throw std::invalid_argument("k = " + std::to_string(k) + " outside [1, " +
                                std::to_string(n) + "]");
  }
  const double nd = n;
  const double log_n_factorial = log_gamma(nd + 1.0);
  return {log_gamma(nd - static_cast<double>(k) + 1.0) - std::log(nd) - log_n_factorial,
          nd * std::numbers::ln2 - log_gamma(static_cast<double>(k) + 1.0)};
}

LogBounds rec_prob_bounds(int n, double x) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (!(x >= 1.0 / n) || x > 1.0) {
    throw std::invalid_argument("x must lie in [1/n, 1]");
  }
  // x >= 1/n, but n * x may round just below 1.
  const auto k = std::max<std::int64_t>(1, floor_scaled(n, x));
  return rec_prob_bounds_at(n, k);
}

LogBounds srec_prob_bounds(int n, std::int64_t k) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (!srec_feasible(n, k)) {
    throw InfeasibleError("no record-position tuple sums to k = " + std::to_string(k) +
                          " for n = " + std::to_string(n));
  }
  const double log_m = big_ln(cached_extremal_table(n).min_product(k).m);
  const double nd = n;
  return {-std::log(nd) - log_m, nd * std::numbers::ln2 - log_m};
}

}  // namespace recstat
