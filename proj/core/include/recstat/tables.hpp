#pragma once

#include "recstat/types.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace recstat {

/// Which record statistic a table or curve describes: the number of records
/// (coefficients c(n,k)) or the sum of record positions (coefficients C(n,k)).
enum class Statistic { rec, srec };

std::string_view to_string(Statistic stat) noexcept;
std::optional<Statistic> parse_statistic(std::string_view text) noexcept;

/// Exact coefficient row of T_n(q) = q(q+1)...(q+n-1) (rec) or
/// P_n(q) = q(q^2+1)(q^3+2)...(q^n+n-1) (srec).
///
/// Rows are dense over [min_k(), max_k()], i.e. [0, n] for rec and
/// [1, n(n+1)/2] for srec. Zero coefficients inside that range are stored.
class CountTable {
 public:
  CountTable(int n, Statistic kind, std::vector<BigInt> coeffs);

  int n() const noexcept { return n_; }
  Statistic kind() const noexcept { return kind_; }
  std::int64_t min_k() const noexcept { return kind_ == Statistic::rec ? 0 : 1; }
  std::int64_t max_k() const noexcept;

  /// Coefficient of q^k; zero outside the stored range.
  const BigInt& operator[](std::int64_t k) const noexcept;

  BigInt total() const;

  friend bool operator==(const CountTable&, const CountTable&) = default;

 private:
  int n_;
  Statistic kind_;
  std::vector<BigInt> coeffs_;  // coeffs_[k - min_k()]
};

/// c(n, k) for all k, by c(n,k) = c(n-1,k-1) + (n-1) c(n-1,k).
CountTable rec_table(int n);

/// C(n, k) for all k, by C(n,k) = C(n-1,k-n) + (n-1) C(n-1,k).
CountTable srec_table(int n);

/// Either of the above, by statistic.
CountTable count_table(Statistic stat, int n);

/// Row n+1 from row n of the same statistic (one recurrence step).
CountTable extend_table(const CountTable& previous);

/// Histograms of rec and srec over all n! permutations (n <= 9).
std::pair<CountTable, CountTable> brute_force_tables(int n);

/// Natural log of a positive big integer, relative error below 1e-15.
double big_ln(const BigInt& value);

}  // namespace recstat
