#include "recstat/tables.hpp"

#include "recstat/permutation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace recstat {
namespace {

void require_positive(int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1, got " + std::to_string(n));
}

CountTable first_row(Statistic stat) {
  // T_1 = P_1 = q.
  if (stat == Statistic::rec) return CountTable(1, stat, {BigInt(0), BigInt(1)});
  return CountTable(1, stat, {BigInt(1)});
}

}  // namespace

BigInt factorial(unsigned n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

std::string_view to_string(Statistic stat) noexcept {
  return stat == Statistic::rec ? "rec" : "srec";
}

std::optional<Statistic> parse_statistic(std::string_view text) noexcept {
  if (text == "rec") return Statistic::rec;
  if (text == "srec") return Statistic::srec;
  return std::nullopt;
}

CountTable::CountTable(int n, Statistic kind, std::vector<BigInt> coeffs)
    : n_(n), kind_(kind), coeffs_(std::move(coeffs)) {
  require_positive(n);
  const auto expected = static_cast<std::size_t>(max_k() - min_k() + 1);
  if (coeffs_.size() != expected) {
    throw std::invalid_argument("coefficient row of length " + std::to_string(coeffs_.size()) +
                                ", expected " + std::to_string(expected));
  }
}

std::int64_t CountTable::max_k() const noexcept {
  return kind_ == Statistic::rec ? n_ : triangular(n_);
}

const BigInt& CountTable::operator[](std::int64_t k) const noexcept {
  static const BigInt zero(0);
  if (k < min_k() || k > max_k()) return zero;
  return coeffs_[static_cast<std::size_t>(k - min_k())];
}

BigInt CountTable::total() const {
  BigInt sum(0);
  for (const auto& c : coeffs_) sum += c;
  return sum;
}

CountTable extend_table(const CountTable& previous) {
  const int n = previous.n() + 1;
  const auto multiplier = static_cast<unsigned long>(n - 1);
  const bool rec = previous.kind() == Statistic::rec;
  // rec:  T_n = T_{n-1} (q + n - 1),  c(n,k) = c(n-1,k-1) + (n-1) c(n-1,k)
  // srec: P_n = P_{n-1} (q^n + n - 1), C(n,k) = C(n-1,k-n) + (n-1) C(n-1,k)
  const std::int64_t shift = rec ? 1 : n;
  const std::int64_t lo = rec ? 0 : 1;
  const std::int64_t hi = rec ? n : triangular(n);

  std::vector<BigInt> coeffs(static_cast<std::size_t>(hi - lo + 1));
  for (std::int64_t k = lo; k <= hi; ++k) {
    BigInt& out = coeffs[static_cast<std::size_t>(k - lo)];
    out = previous[k - shift];
    mpz_addmul_ui(out.get_mpz_t(), previous[k].get_mpz_t(), multiplier);
  }
  return CountTable(n, previous.kind(), std::move(coeffs));
}

CountTable count_table(Statistic stat, int n) {
  require_positive(n);
  CountTable table = first_row(stat);
  while (table.n() < n) table = extend_table(table);
  return table;
}

CountTable rec_table(int n) { return count_table(Statistic::rec, n); }

CountTable srec_table(int n) { return count_table(Statistic::srec, n); }

std::pair<CountTable, CountTable> brute_force_tables(int n) {
  require_positive(n);
  if (n > 9) {
    throw SizeLimitError("brute-force enumeration is limited to n <= 9, got " + std::to_string(n));
  }
  std::vector<unsigned long> rec_counts(static_cast<std::size_t>(n) + 1, 0);
  std::vector<unsigned long> srec_counts(static_cast<std::size_t>(triangular(n)), 0);

  std::vector<int> entries(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) entries[static_cast<std::size_t>(i)] = i + 1;
  do {
    const auto profile = records(Permutation(entries));
    ++rec_counts[static_cast<std::size_t>(profile.rec)];
    ++srec_counts[static_cast<std::size_t>(profile.srec - 1)];
  } while (std::next_permutation(entries.begin(), entries.end()));

  std::vector<BigInt> rec(rec_counts.begin(), rec_counts.end());
  std::vector<BigInt> srec(srec_counts.begin(), srec_counts.end());
  return {CountTable(n, Statistic::rec, std::move(rec)),
          CountTable(n, Statistic::srec, std::move(srec))};
}

double big_ln(const BigInt& value) {
  if (sgn(value) <= 0) throw std::domain_error("logarithm of a non-positive integer");
  if (mpz_sizeinbase(value.get_mpz_t(), 2) <= 53) return std::log(value.get_d());
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, value.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exponent) * std::numbers::ln2;
}

}  // namespace recstat
