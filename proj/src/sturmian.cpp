// src/sturmian.cpp
#include "powerlab/sturmian.hpp"

#include <algorithm>
#include <string>

namespace powerlab {

namespace {

constexpr std::size_t kMaxStandardLength = std::size_t{1} << 28;

void require_same_field(const QuadraticReal& a, const QuadraticReal& b, const char* what) {
  try {
    common_radicand(a, b);
  } catch (const IncompatibleField& e) {
    throw ParameterError(std::string(what) + " must lie in one quadratic field: " + e.what());
  }
}

bool in_unit_open(const QuadraticReal& x) { return x > QuadraticReal(0) && x < QuadraticReal(1); }
bool in_unit_half_open(const QuadraticReal& x) {
  return x >= QuadraticReal(0) && x < QuadraticReal(1);
}

std::vector<Letter> repeat_then(const std::vector<Letter>& base, std::uint64_t times,
                                const std::vector<Letter>& tail, std::size_t cap) {
  std::vector<Letter> out;
  for (std::uint64_t t = 0; t < times && out.size() < cap; ++t) {
    out.insert(out.end(), base.begin(), base.end());
  }
  if (out.size() < cap) out.insert(out.end(), tail.begin(), tail.end());
  if (out.size() > cap) out.resize(cap);
  return out;
}

}  // namespace

SturmianParams SturmianParams::validate(QuadraticReal epsilon, QuadraticReal x0) {
  require_same_field(epsilon, x0, "eps and x0");
  if (epsilon.is_rational()) throw ParameterError("eps must be irrational");
  if (!in_unit_open(epsilon)) throw ParameterError("eps must lie in (0,1)");
  if (!in_unit_half_open(x0)) throw ParameterError("x0 must lie in [0,1)");
  return SturmianParams(std::move(epsilon), std::move(x0));
}

RotationParams RotationParams::validate(QuadraticReal alpha, QuadraticReal beta,
                                        QuadraticReal x0) {
  require_same_field(alpha, beta, "alpha and beta");
  require_same_field(alpha, x0, "alpha and x0");
  require_same_field(beta, x0, "beta and x0");
  if (alpha.is_rational()) throw ParameterError("alpha must be irrational");
  if (!in_unit_open(alpha)) throw ParameterError("alpha must lie in (0,1)");
  if (!in_unit_open(beta)) throw ParameterError("beta must lie in (0,1)");
  if (!in_unit_half_open(x0)) throw ParameterError("x0 must lie in [0,1)");
  return RotationParams(std::move(alpha), std::move(beta), std::move(x0));
}

Word rotation_word(const RotationParams& params, std::size_t n) {
  std::vector<Letter> letters;
  letters.reserve(n);
  const QuadraticReal one(1);
  QuadraticReal y = params.x0();
  for (std::size_t i = 0; i < n; ++i) {
    letters.push_back(y < params.beta() ? 0 : 1);
    y = y + params.alpha();
    if (y >= one) y = y - one;
  }
  return Word(Alphabet::binary(), std::move(letters));
}

Word sturmian_word(const SturmianParams& params, std::size_t n) {
  auto rot = RotationParams::validate(QuadraticReal(1) - params.epsilon(), params.epsilon(),
                                      params.x0());
  return rotation_word(rot, n);
}

Word standard_word(const CFExpansion& cf, int level) {
  if (level < -1) throw std::out_of_range("standard words start at level -1");
  std::vector<Letter> older{1};   // s_{-1}
  std::vector<Letter> current{0}; // s_0
  if (level == -1) return Word(Alphabet::binary(), older);
  for (int m = 0; m < level; ++m) {
    const auto a = cf.coefficient(static_cast<std::size_t>(m) + 1);
    std::vector<Letter> next;
    if (m == 0) {
      next = repeat_then(current, a - 1, older, kMaxStandardLength + 1);
    } else {
      next = repeat_then(current, a, older, kMaxStandardLength + 1);
    }
    if (next.size() > kMaxStandardLength) throw std::length_error("standard word too long");
    older = std::move(current);
    current = std::move(next);
  }
  return Word(Alphabet::binary(), std::move(current));
}

Word characteristic_prefix(const CFExpansion& cf, std::size_t n) {
  std::vector<Letter> older{0};   // s_0
  std::vector<Letter> current;    // s_1
  current = repeat_then(older, cf.coefficient(1) - 1, {1}, n);
  std::size_t level = 1;
  while (current.size() < n) {
    const auto a = cf.coefficient(level + 1);
    // Truncating at n is safe: s_{m+1} starts with s_m, so only the final
    // level ever gets cut.
    std::vector<Letter> next = repeat_then(current, a, older, n);
    older = std::move(current);
    current = std::move(next);
    ++level;
  }
  current.resize(n);
  return Word(Alphabet::binary(), std::move(current));
}

IndexFormulaReport sturmian_index_formula(const CFExpansion& cf, std::size_t n_max) {
  if (!cf.has_coefficient(n_max + 1)) {
    throw std::out_of_range("insufficient coefficients: need a_1..a_" + std::to_string(n_max + 1));
  }
  IndexFormulaReport report;
  report.n_max = n_max;
  const auto conv = convergents(cf, n_max);
  for (std::size_t n = 0; n <= n_max; ++n) {
    const mpz_class q_prev = n == 0 ? mpz_class(0) : conv[n - 1].q;
    const mpz_class& q = conv[n].q;
    const mpz_class a(std::to_string(cf.coefficient(n + 1)));
    QuadraticReal term = QuadraticReal::rational(2 + a) + QuadraticReal::rational(q_prev - 2, q);
    if (n == 0 || term > report.truncated_sup) {
      report.truncated_sup = term;
      report.argmax = n;
    }
    report.terms.push_back(std::move(term));
  }

  if (const auto& tail = cf.tail()) {
    report.max_partial_quotient = *cf.tail_max();
    const auto& period = tail->period;
    const std::size_t k = period.size();
    // Along a_{N+1} = period[j], q_{N-1}/q_N = [0; a_N, a_{N-1}, ..., a_1]
    // tends to the purely periodic [0; period[j-1], period[j-2], ...].
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<std::uint64_t> backwards(k);
      for (std::size_t t = 1; t <= k; ++t) backwards[t - 1] = period[(j + k - t) % k];
      QuadraticReal limit =
          QuadraticReal(static_cast<long>(2 + period[j])) + purely_periodic_value(backwards);
      if (!report.periodic_limit || limit > *report.periodic_limit) report.periodic_limit = limit;
    }
    report.supremum = std::max(report.truncated_sup, *report.periodic_limit);
  } else {
    report.window_only = true;
    for (std::size_t n = 1; n <= n_max + 1; ++n) {
      report.max_partial_quotient = std::max(report.max_partial_quotient, cf.coefficient(n));
    }
  }
  return report;
}

const char* to_string(BlockTag tag) { return tag == BlockTag::Long ? "Long" : "Short"; }

Word BlockParse::long_block() const {
  Word w(e.alphabet());
  for (std::uint64_t i = 0; i <= k; ++i) w.append(e);
  w.append(f);
  return w;
}

Word BlockParse::short_block() const {
  Word w(e.alphabet());
  for (std::uint64_t i = 0; i < k; ++i) w.append(e);
  w.append(f);
  return w;
}

Word BlockParse::reassemble() const {
  const Word lb = long_block(), sb = short_block();
  Word w(e.alphabet());
  for (BlockTag t : blocks) w.append(t == BlockTag::Long ? lb : sb);
  return w;
}

BlockParse block_decompose(const Word& prefix, const CFExpansion& cf, std::size_t level) {
  if (level < 1) throw std::out_of_range("block level must be at least 1");
  if (!cf.has_coefficient(level + 1)) {
    throw std::out_of_range("block level " + std::to_string(level) + " needs a_" +
                            std::to_string(level + 1));
  }
  BlockParse parse;
  parse.level = level;
  parse.e = standard_word(cf, static_cast<int>(level));
  parse.f = standard_word(cf, static_cast<int>(level) - 1);
  parse.k = cf.coefficient(level + 1);
  if (!(prefix.alphabet() == Alphabet::binary())) {
    throw std::invalid_argument("block parsing needs a binary word");
  }
  const Word long_b = parse.long_block();
  const Word short_b = parse.short_block();
  const auto text = prefix.letters();
  const std::size_t n = text.size();

  auto matches_at = [&](const Word& block, std::size_t pos, std::size_t len) {
    const auto b = block.letters();
    return std::equal(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(len),
                      text.begin() + static_cast<std::ptrdiff_t>(pos));
  };
  auto fits = [&](const Word& block, std::size_t pos) {
    return pos + block.size() <= n && matches_at(block, pos, block.size());
  };
  auto accepts_tail = [&](std::size_t pos) {
    const std::size_t rest = n - pos;
    if (rest >= long_b.size()) return false;
    return matches_at(long_b, pos, rest) || (rest <= short_b.size() && matches_at(short_b, pos, rest));
  };

  struct Frame {
    std::size_t pos;
    int next_choice;
  };
  std::vector<Frame> stack{{0, 0}};
  std::vector<BlockTag> tags;
  std::vector<bool> dead(n + 1, false);
  while (!stack.empty()) {
    Frame& top = stack.back();
    const std::size_t pos = top.pos;
    if (top.next_choice == 0) {
      top.next_choice = 1;
      if (fits(long_b, pos) && !dead[pos + long_b.size()]) {
        tags.push_back(BlockTag::Long);
        stack.push_back({pos + long_b.size(), 0});
      }
      continue;
    }
    if (top.next_choice == 1) {
      top.next_choice = 2;
      if (fits(short_b, pos) && !dead[pos + short_b.size()]) {
        tags.push_back(BlockTag::Short);
        stack.push_back({pos + short_b.size(), 0});
      }
      continue;
    }
    if (pos > 0 && accepts_tail(pos)) {
      parse.blocks = std::move(tags);
      parse.consumed = pos;
      parse.tail = n - pos;
      return parse;
    }
    dead[pos] = true;
    stack.pop_back();
    if (!tags.empty()) tags.pop_back();
  }
  throw std::invalid_argument("prefix does not begin with a block E^{k+1}F or E^kF at level " +
                              std::to_string(level));
}

}  // namespace powerlab
