// src/words.cpp
#include "powerlab/words.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace powerlab {

Alphabet::Alphabet(std::string symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw std::invalid_argument("empty alphabet");
  if (symbols_.size() > 256) throw std::invalid_argument("alphabet too large");
  std::string sorted = symbols_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("duplicate symbol in alphabet '" + symbols_ + "'");
  }
}

std::optional<Letter> Alphabet::index_of(char c) const {
  auto pos = symbols_.find(c);
  if (pos == std::string::npos) return std::nullopt;
  return static_cast<Letter>(pos);
}

Word::Word(Alphabet alphabet, std::vector<Letter> letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
  for (Letter l : letters_) {
    if (l >= alphabet_.size()) throw std::invalid_argument("letter outside alphabet");
  }
}

Word Word::parse(std::string_view text, const Alphabet& alphabet) {
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    auto idx = alphabet.index_of(text[i]);
    if (!idx) {
      throw std::invalid_argument("character '" + std::string(1, text[i]) + "' at position " +
                                  std::to_string(i) + " is not in alphabet '" +
                                  alphabet.symbols() + "'");
    }
    letters.push_back(*idx);
  }
  Word w;
  w.alphabet_ = alphabet;
  w.letters_ = std::move(letters);
  return w;
}

Word Word::parse(std::string_view text) {
  std::set<char> distinct(text.begin(), text.end());
  auto within = [&](std::string_view symbols) {
    return std::all_of(distinct.begin(), distinct.end(),
                       [&](char c) { return symbols.find(c) != std::string_view::npos; });
  };
  if (within("01")) return parse(text, Alphabet::binary());
  if (within("ABC")) return parse(text, Alphabet::ternary());
  return parse(text, Alphabet(std::string(distinct.begin(), distinct.end())));
}

Word Word::substr(std::size_t pos, std::size_t len) const {
  if (pos > letters_.size()) throw std::out_of_range("substr start beyond word end");
  len = std::min(len, letters_.size() - pos);
  Word w;
  w.alphabet_ = alphabet_;
  w.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                    letters_.begin() + static_cast<std::ptrdiff_t>(pos + len));
  return w;
}

std::size_t Word::count(Letter letter) const {
  return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), letter));
}

void Word::push_back(Letter letter) {
  if (letter >= alphabet_.size()) throw std::invalid_argument("letter outside alphabet");
  letters_.push_back(letter);
}

void Word::append(const Word& other) {
  if (!(other.alphabet_ == alphabet_)) throw std::invalid_argument("alphabet mismatch in concatenation");
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
}

std::string Word::str() const {
  std::string s;
  s.reserve(letters_.size());
  for (Letter l : letters_) s.push_back(alphabet_.symbol(l));
  return s;
}

Word operator+(const Word& a, const Word& b) {
  Word w = a;
  w.append(b);
  return w;
}

Morphism::Morphism(Alphabet source, Alphabet target, std::vector<Word> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_.size()) throw std::invalid_argument("one image per source letter required");
  for (const Word& w : images_) {
    if (w.empty()) throw std::invalid_argument("morphism images must be nonempty");
    if (!(w.alphabet() == target_)) throw std::invalid_argument("image outside target alphabet");
  }
}

Word Morphism::apply(const Word& w) const {
  if (!(w.alphabet() == source_)) {
    throw std::invalid_argument("word over '" + w.alphabet().symbols() +
                                "' does not match morphism source '" + source_.symbols() + "'");
  }
  std::vector<Letter> out;
  std::size_t total = 0;
  for (Letter l : w.letters()) total += images_[l].size();
  out.reserve(total);
  for (Letter l : w.letters()) {
    auto img = images_[l].letters();
    out.insert(out.end(), img.begin(), img.end());
  }
  return Word(target_, std::move(out));
}

Morphism sigma01() {
  const Alphabet bin = Alphabet::binary();
  return Morphism(Alphabet::ternary(), bin,
                  {Word::parse("0", bin), Word::parse("01", bin), Word::parse("1", bin)});
}

Morphism sigma10() {
  const Alphabet bin = Alphabet::binary();
  return Morphism(Alphabet::ternary(), bin,
                  {Word::parse("0", bin), Word::parse("10", bin), Word::parse("1", bin)});
}

Morphism phi(std::size_t k) {
  const Alphabet bin = Alphabet::binary();
  const std::string ones(k, '1');
  return Morphism(Alphabet::ternary(), bin,
                  {Word::parse("0", bin), Word::parse("0" + ones + "1", bin),
                   Word::parse("0" + ones, bin)});
}

Morphism letter_exchange() {
  const Alphabet bin = Alphabet::binary();
  return Morphism(bin, bin, {Word::parse("1", bin), Word::parse("0", bin)});
}

Morphism letter_permutation(const Alphabet& alphabet, const std::vector<Letter>& perm) {
  if (perm.size() != alphabet.size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<Word> images;
  images.reserve(perm.size());
  for (Letter target : perm) images.emplace_back(alphabet, std::vector<Letter>{target});
  return Morphism(alphabet, alphabet, std::move(images));
}

Word apply_morphism(const Morphism& m, const Word& w) { return m.apply(w); }

Word shift(const Word& w, std::size_t i) {
  if (i > w.size()) throw std::out_of_range("shift beyond word length");
  return w.substr(i, w.size() - i);
}

Word cyclic_shift(const Word& w) {
  if (w.empty()) throw std::invalid_argument("cyclic shift of the empty word");
  Word out = w.substr(1, w.size() - 1);
  out.push_back(w[0]);
  return out;
}

std::size_t factor_complexity(const Word& w, std::size_t n) {
  if (n > w.size()) throw std::out_of_range("factor length exceeds word length");
  if (n == 0) return 1;
  const auto letters = w.letters();
  std::string_view view(reinterpret_cast<const char*>(letters.data()), letters.size());
  std::unordered_set<std::string_view> seen;
  for (std::size_t i = 0; i + n <= view.size(); ++i) seen.insert(view.substr(i, n));
  return seen.size();
}

BalanceResult is_balanced(const Word& w, std::size_t n_max) {
  if (w.alphabet().size() != 2) throw std::invalid_argument("balance is defined for binary words");
  const auto letters = w.letters();
  const std::size_t len = letters.size();
  std::vector<std::size_t> ones(len + 1, 0);
  for (std::size_t i = 0; i < len; ++i) ones[i + 1] = ones[i] + (letters[i] == 1 ? 1 : 0);
  BalanceResult result;
  for (std::size_t n = 1; n <= std::min(n_max, len); ++n) {
    std::size_t lo_at = 0, hi_at = 0;
    std::size_t lo = ones[n], hi = ones[n];
    for (std::size_t i = 1; i + n <= len; ++i) {
      const std::size_t c = ones[i + n] - ones[i];
      if (c < lo) {
        lo = c;
        lo_at = i;
      }
      if (c > hi) {
        hi = c;
        hi_at = i;
      }
    }
    if (hi - lo > 1) {
      result.balanced = false;
      result.counterexample = std::make_pair(Factor{lo_at, n}, Factor{hi_at, n});
      return result;
    }
  }
  return result;
}

std::vector<Word> read_words(std::string_view text) {
  std::vector<Word> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
      line.remove_suffix(1);
    }
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    if (!line.empty()) out.push_back(Word::parse(line));
    pos = nl + 1;
  }
  return out;
}

std::string write_words(std::span<const Word> words) {
  std::string out;
  for (const Word& w : words) {
    out += w.str();
    out.push_back('\n');
  }
  return out;
}

}  // namespace powerlab
