// src/repetitions.cpp
#include "powerlab/repetitions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "suffix_index.hpp"

namespace powerlab {

Ratio::Ratio(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
  if (den_ <= 0) throw std::invalid_argument("ratio denominator must be positive");
  if (num_ < 0) throw std::invalid_argument("ratio must be non-negative");
  const std::int64_t g = std::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

std::string Ratio::str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
  const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  return lhs <=> rhs;
}

Ratio factor_index_in(const Word& prefix, const Word& w) {
  if (w.empty()) throw std::invalid_argument("factor must be nonempty");
  const std::string text = prefix.str();
  const std::string pattern = w.str();
  const std::size_t m = pattern.size();
  std::size_t best = 0;
  for (std::size_t i = text.find(pattern); i != std::string::npos; i = text.find(pattern, i + 1)) {
    std::size_t len = m;
    while (i + len < text.size() && text[i + len] == pattern[len % m]) ++len;
    best = std::max(best, len);
  }
  return Ratio(static_cast<std::int64_t>(best), static_cast<std::int64_t>(m));
}

namespace {

std::vector<std::uint32_t> as_text(const Word& w, bool reversed_order) {
  const auto sigma = static_cast<std::uint32_t>(w.alphabet().size());
  std::vector<std::uint32_t> t(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    t[i] = reversed_order ? sigma - 1 - w[i] : w[i];
  }
  return t;
}

// Every run (with exponent >= 2) has a Lyndon root that is the longest Lyndon
// word starting at its position, for one of the two letter orders. Each such
// candidate is extended with forward and backward LCE queries.
std::vector<Run> runs_with(const Word& prefix, const detail::LceIndex& fwd,
                           const detail::LceIndex& bwd) {
  const std::size_t n = prefix.size();
  const auto sigma = static_cast<std::uint32_t>(prefix.alphabet().size());
  std::vector<Run> runs;
  for (bool reversed_order : {false, true}) {
    std::vector<std::uint32_t> rank;
    if (reversed_order) {
      const auto sa = detail::suffix_array(as_text(prefix, true), sigma);
      rank.resize(n);
      for (std::size_t r = 0; r < n; ++r) rank[sa[r]] = static_cast<std::uint32_t>(r);
    } else {
      rank = fwd.rank();
    }
    const auto lyndon = detail::lyndon_array(rank);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t p = lyndon[i];
      const std::size_t j = i + p;
      if (j >= n) continue;
      const std::size_t ahead = fwd.lce(i, j);
      // common suffix of prefix[0, i) and prefix[0, j)
      const std::size_t behind = i == 0 ? 0 : bwd.lce(n - i, n - j);
      if (ahead + behind < p) continue;
      runs.push_back(Run{i - behind, p, p + ahead + behind});
    }
  }
  std::sort(runs.begin(), runs.end(), [](const Run& a, const Run& b) {
    return std::tie(a.start, a.period) < std::tie(b.start, b.period);
  });
  runs.erase(std::unique(runs.begin(), runs.end()), runs.end());
  return runs;
}

// Lexicographically best (max exponent, then min period, then min start).
bool better(const Run& a, const Run& b) {
  const auto ea = a.exponent(), eb = b.exponent();
  if (ea != eb) return ea > eb;
  if (a.period != b.period) return a.period < b.period;
  return a.start < b.start;
}

IndexReport estimate(const Word& prefix) {
  if (prefix.empty()) throw std::invalid_argument("index of the empty word");
  const std::size_t n = prefix.size();
  const auto sigma = static_cast<std::uint32_t>(prefix.alphabet().size());
  auto text = as_text(prefix, false);
  std::vector<std::uint32_t> rev(text.rbegin(), text.rend());
  detail::LceIndex fwd(text, sigma);
  detail::LceIndex bwd(rev, sigma);
  const auto runs = runs_with(prefix, fwd, bwd);

  IndexReport report;
  report.prefix_length = n;
  Run best{0, 1, 1};
  if (!runs.empty()) {
    best = runs.front();
    for (const Run& r : runs) {
      if (better(r, best)) best = r;
    }
  } else {
    // Square-free: every periodic extension is shorter than twice its
    // period, so scan all (start, period) pairs.
    for (std::size_t p = 1; p < n; ++p) {
      for (std::size_t i = 0; i + p < n; ++i) {
        const Run cand{i, p, p + fwd.lce(i, i + p)};
        if (better(cand, best)) best = cand;
      }
    }
  }
  report.witness = best;
  report.index_estimate = best.exponent();
  if (best.exponent().floor() >= 2) {
    report.max_integer_power = {static_cast<std::uint64_t>(best.exponent().floor()),
                                prefix.substr(best.start, best.period)};
  } else {
    report.max_integer_power = {1, prefix.substr(0, 1)};
  }
  return report;
}

}  // namespace

std::vector<Run> max_runs(const Word& prefix) {
  if (prefix.empty()) return {};
  const auto sigma = static_cast<std::uint32_t>(prefix.alphabet().size());
  auto text = as_text(prefix, false);
  std::vector<std::uint32_t> rev(text.rbegin(), text.rend());
  detail::LceIndex fwd(text, sigma);
  detail::LceIndex bwd(rev, sigma);
  return runs_with(prefix, fwd, bwd);
}

IndexReport word_index_estimate(const Word& prefix) { return estimate(prefix); }

IndexReport word_index_estimate(const Word& prefix, std::size_t max_factor_length) {
  IndexReport report = estimate(prefix);
  std::map<std::string, Ratio> per_factor;
  const std::string text = prefix.str();
  for (std::size_t len = 1; len <= std::min(max_factor_length, text.size()); ++len) {
    for (std::size_t i = 0; i + len <= text.size(); ++i) {
      std::string f = text.substr(i, len);
      if (per_factor.contains(f)) continue;
      per_factor.emplace(f, factor_index_in(prefix, prefix.substr(i, len)));
    }
  }
  report.per_factor = std::move(per_factor);
  return report;
}

IntegerPower max_integer_power(const Word& prefix) { return estimate(prefix).max_integer_power; }

Ratio brute_force_index(const Word& prefix) {
  if (prefix.size() > kBruteForceLimit) {
    throw std::length_error("prefix too long for the brute-force oracle (" +
                            std::to_string(prefix.size()) + " > " +
                            std::to_string(kBruteForceLimit) + ")");
  }
  const auto w = prefix.letters();
  const std::size_t n = w.size();
  Ratio best(1, 1);
  for (std::size_t start = 0; start < n; ++start) {
    for (std::size_t period = 1; start + period <= n; ++period) {
      std::size_t len = period;
      while (start + len < n && w[start + len] == w[start + len - period]) ++len;
      const Ratio r(static_cast<std::int64_t>(len), static_cast<std::int64_t>(period));
      if (r > best) best = r;
    }
  }
  return best;
}

}  // namespace powerlab
