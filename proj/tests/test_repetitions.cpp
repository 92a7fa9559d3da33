#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>
#include <tuple>

#include "powerlab/exactreal.hpp"
#include "powerlab/repetitions.hpp"
#include "powerlab/sturmian.hpp"
#include "powerlab/threeiet.hpp"

using namespace powerlab;

namespace {

Word W(const char* s) { return Word::parse(s); }

Word random_word(std::mt19937_64& rng, const Alphabet& a, std::size_t len) {
  std::uniform_int_distribution<int> letter(0, static_cast<int>(a.size()) - 1);
  Word w(a);
  for (std::size_t i = 0; i < len; ++i) w.push_back(static_cast<Letter>(letter(rng)));
  return w;
}

// All words of the given length over `a`, enumerated as base-|a| counters.
std::vector<Word> all_words(const Alphabet& a, std::size_t len) {
  std::vector<Word> out;
  std::vector<Letter> digits(len, 0);
  for (;;) {
    out.emplace_back(a, digits);
    std::size_t i = 0;
    while (i < len && ++digits[i] == a.size()) digits[i++] = 0;
    if (i == len) break;
  }
  return out;
}

// Runs by definition: every periodic segment of exponent >= 2 that cannot be
// extended, with its minimal period, deduplicated.
std::vector<Run> naive_runs(const std::string& s) {
  const std::size_t n = s.size();
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> found;
  for (std::size_t p = 1; 2 * p <= n; ++p) {
    for (std::size_t i = 0; i + 2 * p <= n; ++i) {
      if (i > 0 && s[i - 1] == s[i - 1 + p]) continue;
      std::size_t len = p;
      while (i + len < n && s[i + len] == s[i + len - p]) ++len;
      if (len < 2 * p) continue;
      std::size_t minimal = p;
      for (std::size_t q = 1; q < p; ++q) {
        bool ok = true;
        for (std::size_t k = i; k + q < i + len && ok; ++k) ok = s[k] == s[k + q];
        if (ok) {
          minimal = q;
          break;
        }
      }
      if (minimal == p) found.emplace(i, p, len);
    }
  }
  std::vector<Run> out;
  for (const auto& [i, p, len] : found) out.push_back(Run{i, p, len});
  return out;
}

// Largest j with some w^j a factor, straight from the definition.
std::uint64_t naive_integer_power(const std::string& s) {
  std::uint64_t best = 1;
  for (std::size_t p = 1; p <= s.size(); ++p) {
    for (std::size_t i = 0; i + p <= s.size(); ++i) {
      std::uint64_t j = 1;
      while (i + (j + 1) * p <= s.size() && s.compare(i + j * p, p, s, i, p) == 0) ++j;
      best = std::max(best, j);
    }
  }
  return best;
}

}  // namespace

TEST_CASE("ratio arithmetic") {
  CHECK(Ratio(6, 4) == Ratio(3, 2));
  CHECK(Ratio(6, 4).str() == "3/2");
  CHECK(Ratio(8, 3) > Ratio(5, 2));
  CHECK(Ratio(8, 3).floor() == 2);
  CHECK_THROWS(Ratio(1, 0));
}

TEST_CASE("factor_index_in examples") {
  CHECK(factor_index_in(W("abababc"), W("ab")) == Ratio(3, 1));
  CHECK(factor_index_in(W("0100101"), W("010")) == Ratio(2, 1));
  CHECK(factor_index_in(W("aaa"), W("b")) == Ratio(0, 1));
  CHECK(factor_index_in(W("aabaabaa"), W("aab")) == Ratio(8, 3));
  CHECK_THROWS(factor_index_in(W("aaa"), Word(Alphabet("a"))));
}

TEST_CASE("max_runs examples") {
  const auto runs = max_runs(W("aabaabaa"));
  CHECK(std::find(runs.begin(), runs.end(), Run{0, 3, 8}) != runs.end());
  CHECK(max_runs(W("abc")).empty());
  const auto a4 = max_runs(W("aaaa"));
  REQUIRE(a4.size() == 1);
  CHECK(a4.front() == Run{0, 1, 4});
  CHECK(a4.front().exponent() == Ratio(4, 1));
  CHECK(max_runs(W("a")).empty());
}

TEST_CASE("word_index_estimate examples") {
  const IndexReport r = word_index_estimate(W("aabaabaa"));
  CHECK(r.index_estimate == Ratio(8, 3));
  CHECK(r.witness == Run{0, 3, 8});
  CHECK(r.prefix_length == 8);
  CHECK(word_index_estimate(W("abcab")).index_estimate == Ratio(5, 3));
  CHECK(word_index_estimate(W("abc")).index_estimate == Ratio(1, 1));
  CHECK(word_index_estimate(W("a")).index_estimate == Ratio(1, 1));

  const Word fib = characteristic_prefix(CFExpansion::periodic({}, {1}), 10000);
  const Ratio est = word_index_estimate(fib).index_estimate;
  CHECK(est >= Ratio(34, 10));
  CHECK(QuadraticReal::rational(est.num(), est.den()) <= qr_parse("(5+1*sqrt(5))/2"));
}

TEST_CASE("per-factor indices") {
  const IndexReport r = word_index_estimate(W("aabaabaa"), 3);
  REQUIRE(r.per_factor);
  CHECK(r.per_factor->at("aab") == Ratio(8, 3));
  CHECK(r.per_factor->at("a") == Ratio(2, 1));
  CHECK(r.per_factor->at("ba") == Ratio(1, 1));
  CHECK(r.per_factor->at("aba") == Ratio(7, 3));
  CHECK(r.per_factor->size() == 2 + 3 + 3);
}

TEST_CASE("max_integer_power examples") {
  const IntegerPower p = max_integer_power(W("aabaabaa"));
  CHECK(p.exponent == 2);
  CHECK(p.witness.str() == "aab");
  const IntegerPower a = max_integer_power(W("aaaa"));
  CHECK(a.exponent == 4);
  CHECK(a.witness.str() == "a");
  const Word fib = characteristic_prefix(CFExpansion::periodic({}, {1}), 1000);
  CHECK(max_integer_power(fib).exponent == 3);
  CHECK(max_integer_power(W("abc")).exponent == 1);
}

TEST_CASE("brute_force_index examples") {
  CHECK(brute_force_index(W("aaa")) == Ratio(3, 1));
  CHECK(brute_force_index(W("0100101")) == Ratio(2, 1));
  CHECK(brute_force_index(W("abcabca")) == Ratio(7, 3));
  Word big(Alphabet::binary(), std::vector<Letter>(kBruteForceLimit + 1, 0));
  CHECK_THROWS_AS(brute_force_index(big), std::length_error);
}

TEST_CASE("property: oracle equivalence on 500 random words") {
  std::mt19937_64 rng(20250101);
  std::uniform_int_distribution<std::size_t> len(1, 300);
  for (int i = 0; i < 500; ++i) {
    const Alphabet a = (i % 2) ? Alphabet::binary() : Alphabet::ternary();
    const Word w = random_word(rng, a, len(rng));
    CHECK(word_index_estimate(w).index_estimate == brute_force_index(w));
  }
}

TEST_CASE("property: exhaustive small words") {
  std::size_t checked = 0;
  for (std::size_t len = 1; len <= 14; ++len) {
    for (const Word& w : all_words(Alphabet::binary(), len)) {
      CHECK(word_index_estimate(w).index_estimate == brute_force_index(w));
      ++checked;
    }
  }
  for (std::size_t len = 1; len <= 8; ++len) {
    for (const Word& w : all_words(Alphabet::ternary(), len)) {
      CHECK(word_index_estimate(w).index_estimate == brute_force_index(w));
      ++checked;
    }
  }
  CHECK(checked > 40000);
}

TEST_CASE("property: runs match the definition") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> len(1, 120);
  for (int i = 0; i < 300; ++i) {
    const Alphabet a = (i % 3 == 0) ? Alphabet::ternary() : Alphabet::binary();
    const Word w = random_word(rng, a, len(rng));
    CHECK(max_runs(w) == naive_runs(w.str()));
  }
  for (const Word& w : all_words(Alphabet::binary(), 11)) CHECK(max_runs(w) == naive_runs(w.str()));
}

TEST_CASE("property: integer power consistency") {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<std::size_t> len(1, 150);
  for (int i = 0; i < 300; ++i) {
    const Word w = random_word(rng, (i % 2) ? Alphabet::binary() : Alphabet::ternary(), len(rng));
    const IndexReport r = word_index_estimate(w);
    CHECK(r.max_integer_power.exponent == naive_integer_power(w.str()));
    if (r.index_estimate >= Ratio(2, 1)) {
      CHECK(static_cast<std::int64_t>(r.max_integer_power.exponent) == r.index_estimate.floor());
      CHECK(r.max_integer_power.witness == w.substr(r.witness.start, r.witness.period));
    }
    // the witness run realizes the estimate
    CHECK(r.witness.exponent() == r.index_estimate);
    CHECK(factor_index_in(w, w.substr(r.witness.start, r.witness.period)) >= r.index_estimate);
  }
}

TEST_CASE("property: monotone along prefixes of generated words") {
  const QuadraticReal eps = qr_parse("(-1+1*sqrt(2))/1");
  const Word iet = threeiet_word(ThreeIetParams::validate(eps, qr_parse("7/10"), 0), 3000);
  const Word fib = characteristic_prefix(CFExpansion::periodic({}, {1}), 3000);
  const Word sturm = sturmian_word(SturmianParams::validate(eps, 0), 3000);
  for (const Word* w : {&iet, &fib, &sturm}) {
    Ratio prev(1, 1);
    for (std::size_t n = 1; n <= w->size(); n += 37) {
      const Ratio cur = word_index_estimate(w->prefix(n)).index_estimate;
      CHECK(cur >= prev);
      prev = cur;
    }
  }
}

TEST_CASE("property: golden prefixes agree with the oracle") {
  const QuadraticReal phi_eps = qr_parse("(-1+1*sqrt(5))/2");
  const QuadraticReal silver = qr_parse("(-1+1*sqrt(2))/1");
  const std::vector<Word> golden{
      characteristic_prefix(CFExpansion::periodic({}, {1}), 2000),
      characteristic_prefix(CFExpansion::periodic({}, {2}), 2000),
      characteristic_prefix(CFExpansion::periodic({1}, {2}), 2000),
      threeiet_word(ThreeIetParams::validate(phi_eps, qr_parse("4/5"), 0), 2000),
      threeiet_word(ThreeIetParams::validate(silver, qr_parse("7/10"), 0), 2000),
      sturmian_word(SturmianParams::validate(phi_eps, 0), 2000),
      W("ACABAC"), W("0100101"), W("0101001"), W("aabaabaa"), W("AACABAC")};
  for (const Word& w : golden) CHECK(word_index_estimate(w).index_estimate == brute_force_index(w));
}
