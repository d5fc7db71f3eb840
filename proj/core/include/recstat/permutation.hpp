#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace recstat {

/// A permutation of {1, ..., n} in one-line notation.
class Permutation {
 public:
  /// Validates that `entries` is a bijection of {1, ..., n}, n >= 1.
  explicit Permutation(std::vector<int> entries);

  static Permutation identity(int n);

  /// Parses comma-separated one-line notation, e.g. "4,7,5,1,6,8,2,3".
  static Permutation parse(std::string_view text);

  int size() const noexcept { return static_cast<int>(entries_.size()); }
  std::span<const int> entries() const noexcept { return entries_; }

  /// Zero-based access: operator[](0) is a_1.
  int operator[](std::size_t i) const noexcept { return entries_[i]; }

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> entries_;
};

/// Inversion table r_i = #{j < i : a_j > a_i}, with 0 <= r_i <= i - 1.
class LehmerCode {
 public:
  explicit LehmerCode(std::vector<int> digits);

  int size() const noexcept { return static_cast<int>(digits_.size()); }
  std::span<const int> digits() const noexcept { return digits_; }
  int operator[](std::size_t i) const noexcept { return digits_[i]; }

  friend bool operator==(const LehmerCode&, const LehmerCode&) = default;

 private:
  std::vector<int> digits_;
};

struct RecordProfile {
  std::vector<int> positions;  // 1-based, strictly increasing
  int rec = 0;
  std::int64_t srec = 0;
};

/// Left-to-right maxima by a running-maximum scan.
RecordProfile records(const Permutation& p);

LehmerCode lehmer_encode(const Permutation& p);
Permutation lehmer_decode(const LehmerCode& code);

/// Deterministic uniform sample from the symmetric group on n letters.
///
/// A std::mt19937_64 engine seeded with `seed` draws r_i uniformly from
/// [0, i-1] for i = 1..n (unbiased rejection on the raw 64-bit output, no
/// std::uniform_int_distribution), and the resulting Lehmer code is decoded.
/// Both the engine and the reduction are fully specified, so the output is
/// reproducible across platforms and standard libraries.
Permutation sample_uniform(int n, std::uint64_t seed);

/// `count` successive samples from one engine stream; the first element
/// equals sample_uniform(n, seed).
std::vector<Permutation> sample_uniform_batch(int n, std::uint64_t seed, std::size_t count);

}  // namespace recstat
