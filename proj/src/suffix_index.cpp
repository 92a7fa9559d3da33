// src/suffix_index.cpp
#include "suffix_index.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <utility>

namespace powerlab::detail {

std::vector<std::uint32_t> suffix_array(std::span<const std::uint32_t> text, std::uint32_t sigma) {
  const std::size_t n = text.size();
  std::vector<std::uint32_t> sa(n), rank(n), tmp(n);
  if (n == 0) return sa;
  std::vector<std::uint32_t> cnt(std::max<std::size_t>(sigma, n) + 1, 0);

  for (std::size_t i = 0; i < n; ++i) {
    if (text[i] >= sigma) throw std::invalid_argument("symbol outside [0, sigma)");
    ++cnt[text[i]];
  }
  for (std::size_t c = 1; c < cnt.size(); ++c) cnt[c] += cnt[c - 1];
  for (std::size_t i = n; i-- > 0;) sa[--cnt[text[i]]] = static_cast<std::uint32_t>(i);
  rank[sa[0]] = 0;
  std::uint32_t classes = 1;
  for (std::size_t i = 1; i < n; ++i) {
    if (text[sa[i]] != text[sa[i - 1]]) ++classes;
    rank[sa[i]] = classes - 1;
  }

  // Prefix doubling: order by (rank[i], rank[i + k]) with a missing second
  // half sorting first.
  for (std::size_t k = 1; classes < n; k <<= 1) {
    std::size_t p = 0;
    for (std::size_t i = n - std::min(k, n); i < n; ++i) tmp[p++] = static_cast<std::uint32_t>(i);
    for (std::size_t j = 0; j < n; ++j) {
      if (sa[j] >= k) tmp[p++] = static_cast<std::uint32_t>(sa[j] - k);
    }
    std::fill(cnt.begin(), cnt.begin() + classes + 1, 0);
    for (std::size_t i = 0; i < n; ++i) ++cnt[rank[i]];
    for (std::size_t c = 1; c <= classes; ++c) cnt[c] += cnt[c - 1];
    for (std::size_t i = n; i-- > 0;) sa[--cnt[rank[tmp[i]]]] = tmp[i];

    auto second = [&](std::uint32_t i) -> std::int64_t {
      return i + k < n ? static_cast<std::int64_t>(rank[i + k]) : -1;
    };
    tmp[sa[0]] = 0;
    classes = 1;
    for (std::size_t i = 1; i < n; ++i) {
      const std::uint32_t a = sa[i - 1], b = sa[i];
      if (rank[a] != rank[b] || second(a) != second(b)) ++classes;
      tmp[b] = classes - 1;
    }
    std::swap(rank, tmp);
  }
  return sa;
}

LceIndex::LceIndex(std::span<const std::uint32_t> text, std::uint32_t sigma)
    : n_(text.size()), sa_(suffix_array(text, sigma)), rank_(n_) {
  for (std::size_t r = 0; r < n_; ++r) rank_[sa_[r]] = static_cast<std::uint32_t>(r);

  // Kasai: lcp[r] = lcp(sa[r-1], sa[r]), lcp[0] = 0.
  std::vector<std::uint32_t> lcp(n_, 0);
  std::size_t h = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    if (rank_[i] == 0) {
      h = 0;
      continue;
    }
    const std::size_t j = sa_[rank_[i] - 1];
    while (i + h < n_ && j + h < n_ && text[i + h] == text[j + h]) ++h;
    lcp[rank_[i]] = static_cast<std::uint32_t>(h);
    if (h > 0) --h;
  }

  table_.push_back(std::move(lcp));
  for (std::size_t k = 1; (std::size_t{1} << k) <= n_; ++k) {
    const auto& prev = table_.back();
    const std::size_t half = std::size_t{1} << (k - 1);
    std::vector<std::uint32_t> level(n_ - (std::size_t{1} << k) + 1);
    for (std::size_t i = 0; i < level.size(); ++i) level[i] = std::min(prev[i], prev[i + half]);
    table_.push_back(std::move(level));
  }
}

std::size_t LceIndex::lce(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) return 0;
  if (i == j) return n_ - i;
  std::size_t a = rank_[i], b = rank_[j];
  if (a > b) std::swap(a, b);
  // min over lcp[a+1 .. b]
  const std::size_t lo = a + 1;
  const std::size_t len = b - a;
  const std::size_t k = static_cast<std::size_t>(std::bit_width(len)) - 1;
  return std::min(table_[k][lo], table_[k][b + 1 - (std::size_t{1} << k)]);
}

std::vector<std::uint32_t> lyndon_array(const std::vector<std::uint32_t>& rank) {
  const std::size_t n = rank.size();
  std::vector<std::uint32_t> out(n);
  std::vector<std::uint32_t> stack;
  for (std::size_t i = n; i-- > 0;) {
    while (!stack.empty() && rank[stack.back()] > rank[i]) stack.pop_back();
    const std::size_t next = stack.empty() ? n : stack.back();
    out[i] = static_cast<std::uint32_t>(next - i);
    stack.push_back(static_cast<std::uint32_t>(i));
  }
  return out;
}

}  // namespace powerlab::detail
