// include/powerlab/words.hpp
//
// Finite words over explicit alphabets, morphisms, shifts, factor complexity
// and balance. Infinite words only ever appear as finite prefixes.
#ifndef POWERLAB_WORDS_HPP
#define POWERLAB_WORDS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace powerlab {

using Letter = std::uint8_t;

/// Ordered set of single-character symbols; a letter is an index into it.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::string symbols);

  static Alphabet binary() { return Alphabet("01"); }
  static Alphabet ternary() { return Alphabet("ABC"); }

  std::size_t size() const noexcept { return symbols_.size(); }
  char symbol(Letter i) const { return symbols_.at(i); }
  std::optional<Letter> index_of(char c) const;
  const std::string& symbols() const noexcept { return symbols_; }

  bool operator==(const Alphabet&) const = default;

 private:
  std::string symbols_;
};

class Word {
 public:
  Word() = default;
  explicit Word(Alphabet alphabet, std::vector<Letter> letters = {});

  /// Parses text over the given alphabet; throws std::invalid_argument on a
  /// foreign character.
  static Word parse(std::string_view text, const Alphabet& alphabet);
  /// Infers the alphabet: {0,1} and {A,B,C} when the text fits them,
  /// otherwise the sorted set of distinct characters.
  static Word parse(std::string_view text);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  Word substr(std::size_t pos, std::size_t len) const;
  Word prefix(std::size_t len) const { return substr(0, len); }
  std::size_t count(Letter letter) const;

  void push_back(Letter letter);
  void append(const Word& other);

  std::string str() const;

  friend Word operator+(const Word& a, const Word& b);
  bool operator==(const Word&) const = default;

 private:
  Alphabet alphabet_;
  std::vector<Letter> letters_;
};

/// A morphism A* -> B*, fixed by one nonempty image per source letter.
class Morphism {
 public:
  Morphism(Alphabet source, Alphabet target, std::vector<Word> images);

  const Alphabet& source() const noexcept { return source_; }
  const Alphabet& target() const noexcept { return target_; }
  const Word& image(Letter letter) const { return images_.at(letter); }

  Word apply(const Word& w) const;

 private:
  Alphabet source_;
  Alphabet target_;
  std::vector<Word> images_;
};

// A -> 0, B -> 01, C -> 1
Morphism sigma01();
// A -> 0, B -> 10, C -> 1
Morphism sigma10();
// A -> 0, B -> 0 1^{k+1}, C -> 0 1^k
Morphism phi(std::size_t k);
// 0 <-> 1
Morphism letter_exchange();
/// Letter i of `alphabet` maps to letter perm[i] of the same alphabet.
Morphism letter_permutation(const Alphabet& alphabet, const std::vector<Letter>& perm);

Word apply_morphism(const Morphism& m, const Word& w);

/// Letters i..end: the length-bookkept prefix image of the shift applied i times.
Word shift(const Word& w, std::size_t i);
/// w0 w1 ... w_{n-1} -> w1 ... w_{n-1} w0
Word cyclic_shift(const Word& w);

/// Number of distinct length-n factors.
std::size_t factor_complexity(const Word& w, std::size_t n);

struct Factor {
  std::size_t start = 0;
  std::size_t length = 0;
};

struct BalanceResult {
  bool balanced = true;
  // On failure: two factors of equal length whose counts of letter 1 differ
  // by at least 2.
  std::optional<std::pair<Factor, Factor>> counterexample;
};

/// Checks factors of every length n <= n_max (binary alphabet only).
BalanceResult is_balanced(const Word& w, std::size_t n_max);

/// One word per line; blank lines are skipped.
std::vector<Word> read_words(std::string_view text);
std::string write_words(std::span<const Word> words);

}  // namespace powerlab

#endif  // POWERLAB_WORDS_HPP
