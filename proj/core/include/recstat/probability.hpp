#pragma once

#include "recstat/types.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace recstat {

/// An exact probability in [0, 1], kept in lowest terms.
class ExactProbability {
 public:
  ExactProbability() = default;
  explicit ExactProbability(BigRational value);

  const BigRational& value() const noexcept { return value_; }

  /// "p/q" in lowest terms; integers are written "0/1" and "1/1".
  std::string to_string() const;

  friend bool operator==(const ExactProbability& a, const ExactProbability& b) {
    return a.value_ == b.value_;
  }

 private:
  BigRational value_{0};
};

enum class Mark { record, no_record };

/// Y/N record marks on positions of a permutation of size n.
struct PatternSpec {
  int n = 0;
  std::map<int, Mark> marks;

  /// Parses "2:Y,5:N"; an empty string means no marks.
  static PatternSpec parse(int n, std::string_view marks);
};

/// Probability that a uniform permutation has a record at every Y position
/// and none at any N position.
ExactProbability pattern_probability(const PatternSpec& spec);

/// P(rec = k) by summing independent-position weights over all record sets
/// {1 = v_1 < ... < v_k}. Enumerates 2^(n-1) sets, so n <= 12.
ExactProbability rec_prob_sum(int n, std::int64_t k);

/// P(srec = k) by the same enumeration restricted to sets summing to k.
ExactProbability srec_prob_sum(int n, std::int64_t k);

inline constexpr int kMaxEnumerationSize = 12;

/// Log-domain bounds (n-[nx])!/(n n!) <= P(rec = [nx]) <= 2^n/[nx]!.
LogBounds rec_prob_bounds(int n, double x);

/// Same bounds addressed by k = [nx] directly (1 <= k <= n).
LogBounds rec_prob_bounds_at(int n, std::int64_t k);

/// Log-domain bounds 1/(n m(n,k)) <= P(srec = k) <= 2^n/m(n,k).
LogBounds srec_prob_bounds(int n, std::int64_t k);

}  // namespace recstat
