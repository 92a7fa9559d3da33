// src/suffix_index.hpp
//
// Suffix array, LCP and constant-time longest-common-extension queries over
// an integer text. Private to the library.
#ifndef POWERLAB_SUFFIX_INDEX_HPP
#define POWERLAB_SUFFIX_INDEX_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace powerlab::detail {

/// Suffixes in lexicographic order; a proper prefix sorts first.
/// Text symbols must lie in [0, sigma).
std::vector<std::uint32_t> suffix_array(std::span<const std::uint32_t> text, std::uint32_t sigma);

class LceIndex {
 public:
  LceIndex(std::span<const std::uint32_t> text, std::uint32_t sigma);

  /// Length of the longest common prefix of the suffixes at i and j.
  std::size_t lce(std::size_t i, std::size_t j) const;

  const std::vector<std::uint32_t>& rank() const noexcept { return rank_; }

 private:
  std::size_t n_;
  std::vector<std::uint32_t> sa_;
  std::vector<std::uint32_t> rank_;
  // table_[k][i] = min lcp over [i, i + 2^k)
  std::vector<std::vector<std::uint32_t>> table_;
};

/// lyndon[i] = length of the longest Lyndon word starting at i, derived from
/// suffix ranks as the distance to the next smaller rank.
std::vector<std::uint32_t> lyndon_array(const std::vector<std::uint32_t>& rank);

}  // namespace powerlab::detail

#endif  // POWERLAB_SUFFIX_INDEX_HPP
