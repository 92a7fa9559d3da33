// include/powerlab/repetitions.hpp
//
// Fractional powers in finite prefixes: index of a given factor, maximal
// repetitions (runs), the prefix index estimate with its witness, the
// largest integer power, and a quadratic brute-force oracle.
//
// The estimate for a prefix is a lower bound of the index of the infinite
// word it was cut from; for uniformly recurrent words it converges upward as
// the prefix grows.
#ifndef POWERLAB_REPETITIONS_HPP
#define POWERLAB_REPETITIONS_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "powerlab/words.hpp"

namespace powerlab {

/// Non-negative exact rational with a positive denominator, kept reduced.
class Ratio {
 public:
  Ratio() = default;
  Ratio(std::int64_t num, std::int64_t den);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  std::int64_t floor() const noexcept { return num_ / den_; }
  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string str() const;

  friend bool operator==(const Ratio&, const Ratio&) = default;
  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// A maximal repetition: letters[i] == letters[i + period] on
/// [start, start + length - period), not extendable either way, with minimal
/// period.
struct Run {
  std::size_t start = 0;
  std::size_t period = 1;
  std::size_t length = 1;

  Ratio exponent() const {
    return Ratio(static_cast<std::int64_t>(length), static_cast<std::int64_t>(period));
  }
  bool operator==(const Run&) const = default;
};

struct IntegerPower {
  std::uint64_t exponent = 1;
  Word witness;  // w with w^exponent a factor
};

struct IndexReport {
  std::size_t prefix_length = 0;
  Ratio index_estimate{1, 1};
  Run witness;
  IntegerPower max_integer_power;
  std::optional<std::map<std::string, Ratio>> per_factor;
};

/// max over occurrences i of w of (longest match of prefix[i..] against
/// www...)/|w|; zero when w does not occur. Letters compare by symbol.
Ratio factor_index_in(const Word& prefix, const Word& w);

/// All runs with exponent >= 2, sorted by start then period.
std::vector<Run> max_runs(const Word& prefix);

/// Max exponent over runs (fractional extensions included, minimum 1).
/// Witness ties break towards the smallest period, then the smallest start.
IndexReport word_index_estimate(const Word& prefix);

/// Same as word_index_estimate, additionally filling per_factor with the
/// index of every distinct factor of length <= max_factor_length.
IndexReport word_index_estimate(const Word& prefix, std::size_t max_factor_length);

IntegerPower max_integer_power(const Word& prefix);

inline constexpr std::size_t kBruteForceLimit = 5000;

/// For every (start, period) extend the periodic match to the right as far as
/// possible and return the largest length/period (at least 1). Throws
/// std::length_error beyond kBruteForceLimit letters.
Ratio brute_force_index(const Word& prefix);

}  // namespace powerlab

#endif  // POWERLAB_REPETITIONS_HPP
