#pragma once

// Independent reference computations. Nothing here calls the recurrences,
// DP tables or special functions under test; each oracle works straight from
// the definitions (enumeration, polynomial products, subset search).

#include "recstat/types.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

namespace recstat::oracle {

/// Visits every permutation of {1..n} in lexicographic order.
template <class Visitor>
void for_each_permutation(int n, Visitor&& visit) {
  std::vector<int> entries(static_cast<std::size_t>(n));
  std::iota(entries.begin(), entries.end(), 1);
  do {
    visit(static_cast<const std::vector<int>&>(entries));
  } while (std::next_permutation(entries.begin(), entries.end()));
}

/// Record positions by the quadratic definition: a_j is a record when
/// a_i < a_j for every i < j.
inline std::vector<int> record_positions(const std::vector<int>& a) {
  std::vector<int> positions;
  for (std::size_t j = 0; j < a.size(); ++j) {
    bool record = true;
    for (std::size_t i = 0; i < j && record; ++i) record = a[i] < a[j];
    if (record) positions.push_back(static_cast<int>(j) + 1);
  }
  return positions;
}

/// r_i = #{j < i : a_j > a_i} by direct counting.
inline std::vector<int> inversion_table(const std::vector<int>& a) {
  std::vector<int> r(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) r[i] += a[j] > a[i] ? 1 : 0;
  }
  return r;
}

/// Dense polynomial with big-integer coefficients, index = power of q.
using Polynomial = std::vector<BigInt>;

inline Polynomial multiply(const Polynomial& a, const Polynomial& b) {
  Polynomial out(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

/// Coefficients of q(q+1)...(q+n-1) by repeated polynomial multiplication.
inline Polynomial rising_factorial_polynomial(int n) {
  Polynomial p{BigInt(0), BigInt(1)};
  for (int j = 1; j < n; ++j) p = multiply(p, Polynomial{BigInt(j), BigInt(1)});
  return p;
}

/// Coefficients of q(q^2+1)(q^3+2)...(q^n+n-1).
inline Polynomial record_sum_polynomial(int n) {
  Polynomial p{BigInt(0), BigInt(1)};
  for (int j = 2; j <= n; ++j) {
    Polynomial factor(static_cast<std::size_t>(j) + 1, BigInt(0));
    factor[0] = j - 1;
    factor[static_cast<std::size_t>(j)] = 1;
    p = multiply(p, factor);
  }
  return p;
}

struct SubsetMinimum {
  std::uint64_t product = 0;
  std::vector<int> witness;
};

/// For each feasible k, the least product over {1} + S with S a subset of
/// {2..n} summing to k - 1, and the lexicographically smallest such tuple.
/// Exhaustive over 2^(n-1) subsets; products fit in 64 bits for n <= 20.
inline std::map<std::int64_t, SubsetMinimum> subset_minima(int n) {
  std::map<std::int64_t, SubsetMinimum> best;
  const std::uint32_t subsets = 1u << (n - 1);
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    std::vector<int> tuple{1};
    std::int64_t sum = 1;
    std::uint64_t product = 1;
    for (int v = 2; v <= n; ++v) {
      if (mask & (1u << (v - 2))) {
        tuple.push_back(v);
        sum += v;
        product *= static_cast<std::uint64_t>(v);
      }
    }
    auto [it, inserted] = best.try_emplace(sum, SubsetMinimum{product, tuple});
    if (!inserted && (product < it->second.product ||
                      (product == it->second.product && tuple < it->second.witness))) {
      it->second = SubsetMinimum{product, tuple};
    }
  }
  return best;
}

/// ln(n!) as a plain sum of logarithms.
inline double log_factorial_sum(int n) {
  double sum = 0.0;
  for (int j = 2; j <= n; ++j) sum += std::log(static_cast<double>(j));
  return sum;
}

/// n! by a running product.
inline BigInt factorial_product(int n) {
  BigInt value = 1;
  for (int j = 2; j <= n; ++j) value *= j;
  return value;
}

/// Natural log of a positive big integer from its mantissa and binary exponent.
inline double log_big(const BigInt& value) {
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, value.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exponent) * std::log(2.0);
}

/// Greatest i0 with k - 1 >= n + (n-1) + ... + (n - i0), scanning i0 upward
/// and summing each candidate series afresh.
inline int i0_by_scan(int n, std::int64_t k) {
  int answer = -1;
  for (int candidate = 0; candidate < n; ++candidate) {
    std::int64_t series = 0;
    for (int i = 0; i <= candidate; ++i) series += n - i;
    if (series <= k - 1) answer = candidate;
  }
  return answer;
}

}  // namespace recstat::oracle
