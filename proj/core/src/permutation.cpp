#include "recstat/permutation.hpp"

#include <charconv>
#include <random>
#include <stdexcept>
#include <string>

namespace recstat {
namespace {

// Fenwick tree over values 1..n holding 0/1 occupancy.
class OccupancyTree {
 public:
  explicit OccupancyTree(int n) : tree_(static_cast<std::size_t>(n) + 1, 0) {}

  void add(int index, int delta) {
    for (auto i = static_cast<std::size_t>(index); i < tree_.size(); i += i & (~i + 1)) {
      tree_[i] += delta;
    }
  }

  int prefix(int index) const {
    int sum = 0;
    for (auto i = static_cast<std::size_t>(index); i > 0; i -= i & (~i + 1)) {
      sum += tree_[i];
    }
    return sum;
  }

  // Smallest index whose prefix count reaches `rank` (1-based).
  int select(int rank) const {
    std::size_t pos = 0;
    std::size_t step = 1;
    while (step * 2 < tree_.size()) step *= 2;
    for (; step > 0; step /= 2) {
      if (pos + step < tree_.size() && tree_[pos + step] < rank) {
        pos += step;
        rank -= tree_[pos];
      }
    }
    return static_cast<int>(pos + 1);
  }

 private:
  std::vector<int> tree_;
};

// Uniform integer in [0, bound) from raw 64-bit engine output.
std::uint64_t bounded(std::mt19937_64& engine, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t draw = engine();
    if (draw >= threshold) return draw % bound;
  }
}

Permutation sample_from(std::mt19937_64& engine, int n) {
  std::vector<int> digits(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    digits[static_cast<std::size_t>(i - 1)] =
        static_cast<int>(bounded(engine, static_cast<std::uint64_t>(i)));
  }
  return lehmer_decode(LehmerCode(std::move(digits)));
}

}  // namespace

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
  const auto n = entries_.size();
  if (n == 0) throw std::invalid_argument("permutation must be nonempty");
  std::vector<bool> seen(n + 1, false);
  for (int value : entries_) {
    if (value < 1 || static_cast<std::size_t>(value) > n) {
      throw std::invalid_argument("permutation entry " + std::to_string(value) +
                                  " outside 1.." + std::to_string(n));
    }
    if (seen[static_cast<std::size_t>(value)]) {
      throw std::invalid_argument("permutation entry " + std::to_string(value) + " repeated");
    }
    seen[static_cast<std::size_t>(value)] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw std::invalid_argument("permutation size must be >= 1");
  std::vector<int> entries(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) entries[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(entries));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> entries;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    auto field = text.substr(start, end - start);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    int value = 0;
    const auto* last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(field.data(), last, value);
    if (field.empty() || ec != std::errc() || ptr != last) {
      throw std::invalid_argument("malformed permutation entry '" + std::string(field) + "'");
    }
    entries.push_back(value);
    start = end + 1;
  }
  return Permutation(std::move(entries));
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(entries_[i]);
  }
  return out;
}

LehmerCode::LehmerCode(std::vector<int> digits) : digits_(std::move(digits)) {
  if (digits_.empty()) throw std::invalid_argument("Lehmer code must be nonempty");
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (digits_[i] < 0 || static_cast<std::size_t>(digits_[i]) > i) {
      throw std::invalid_argument("Lehmer digit r_" + std::to_string(i + 1) + " = " +
                                  std::to_string(digits_[i]) + " outside [0, " +
                                  std::to_string(i) + "]");
    }
  }
}

RecordProfile records(const Permutation& p) {
  RecordProfile profile;
  int running_max = 0;
  for (int i = 0; i < p.size(); ++i) {
    if (p[static_cast<std::size_t>(i)] > running_max) {
      running_max = p[static_cast<std::size_t>(i)];
      profile.positions.push_back(i + 1);
      profile.srec += i + 1;
    }
  }
  profile.rec = static_cast<int>(profile.positions.size());
  return profile;
}

LehmerCode lehmer_encode(const Permutation& p) {
  const int n = p.size();
  OccupancyTree seen(n);
  std::vector<int> digits(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int value = p[static_cast<std::size_t>(i)];
    digits[static_cast<std::size_t>(i)] = i - seen.prefix(value);
    seen.add(value, 1);
  }
  return LehmerCode(std::move(digits));
}

Permutation lehmer_decode(const LehmerCode& code) {
  // a_i is the (r_i + 1)-th largest value not used at positions i+1..n.
  const int n = code.size();
  OccupancyTree remaining(n);
  for (int v = 1; v <= n; ++v) remaining.add(v, 1);
  std::vector<int> entries(static_cast<std::size_t>(n));
  for (int i = n; i >= 1; --i) {
    const int value = remaining.select(i - code[static_cast<std::size_t>(i - 1)]);
    entries[static_cast<std::size_t>(i - 1)] = value;
    remaining.add(value, -1);
  }
  return Permutation(std::move(entries));
}

Permutation sample_uniform(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sample size must be >= 1");
  std::mt19937_64 engine(seed);
  return sample_from(engine, n);
}

std::vector<Permutation> sample_uniform_batch(int n, std::uint64_t seed, std::size_t count) {
  if (n < 1) throw std::invalid_argument("sample size must be >= 1");
  std::mt19937_64 engine(seed);
  std::vector<Permutation> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(sample_from(engine, n));
  return out;
}

}  // namespace recstat
