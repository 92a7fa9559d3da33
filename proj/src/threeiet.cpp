// src/threeiet.cpp
#include "powerlab/threeiet.hpp"

#include <algorithm>

#include "powerlab/sturmian.hpp"

namespace powerlab {

ThreeIetParams ThreeIetParams::validate(QuadraticReal epsilon, QuadraticReal ell,
                                        QuadraticReal x0) {
  try {
    common_radicand(epsilon, ell);
    common_radicand(epsilon, x0);
    common_radicand(ell, x0);
  } catch (const IncompatibleField& e) {
    throw ParameterError(std::string("eps, ell and x0 must lie in one quadratic field: ") + e.what());
  }
  const QuadraticReal zero(0), one(1);
  if (epsilon.is_rational()) throw ParameterError("eps must be irrational");
  if (!(epsilon > zero && epsilon < one)) throw ParameterError("eps must lie in (0,1)");
  const QuadraticReal lower = std::max(epsilon, one - epsilon);
  if (ell <= lower) throw ParameterError("constraint violated: ell <= max(eps, 1-eps)");
  if (ell >= one) throw ParameterError("constraint violated: ell >= 1");
  if (x0 < zero || x0 >= ell) throw ParameterError("x0 must lie in [0, ell)");

  ThreeIetParams p;
  p.a_end_ = ell - one + epsilon;
  p.shift_a_ = one - epsilon;
  p.shift_b_ = one - epsilon - epsilon;
  p.shift_c_ = -epsilon;
  p.epsilon_ = std::move(epsilon);
  p.ell_ = std::move(ell);
  p.x0_ = std::move(x0);
  return p;
}

ThreeIetParams ThreeIetParams::with_x0(QuadraticReal x0) const {
  return validate(epsilon_, ell_, std::move(x0));
}

Step step(const ThreeIetParams& params, const QuadraticReal& x) {
  if (x.sign() < 0 || x >= params.ell()) throw std::domain_error("point outside [0, ell)");
  Step s{kLetterA, {}};
  if (x < params.a_end()) {
    s.letter = kLetterA;
    s.next = x + params.shift_a();
  } else if (x < params.b_end()) {
    s.letter = kLetterB;
    s.next = x + params.shift_b();
  } else {
    s.letter = kLetterC;
    s.next = x + params.shift_c();
  }
  if (s.next.sign() < 0 || s.next >= params.ell()) {
    throw std::logic_error("orbit left [0, ell) at " + x.to_string());
  }
  return s;
}

Word threeiet_word(const ThreeIetParams& params, std::size_t n) {
  std::vector<Letter> letters;
  letters.reserve(n);
  QuadraticReal x = params.x0();
  for (std::size_t i = 0; i < n; ++i) {
    Step s = step(params, x);
    letters.push_back(s.letter);
    x = std::move(s.next);
  }
  return Word(Alphabet::ternary(), std::move(letters));
}

Word phi_image(const Word& u, std::size_t k) {
  if (!(u.alphabet() == Alphabet::ternary())) throw std::invalid_argument("Phi_k needs a word over {A,B,C}");
  return phi(k).apply(u);
}

namespace {

void require_binary(const Word& w) {
  if (!(w.alphabet() == Alphabet::binary())) throw std::invalid_argument("ternarization needs binary words");
}

// Two-cursor scan; returns the ternary word and how far each cursor got.
struct Scan {
  std::vector<Letter> letters;
  std::size_t i = 0;
  std::size_t j = 0;
  bool ok = true;
};

Scan scan(std::span<const Letter> a, std::span<const Letter> b) {
  Scan s;
  while (s.i < a.size() && s.j < b.size()) {
    const Letter x = a[s.i], y = b[s.j];
    if (x == 0 && y == 0) {
      s.letters.push_back(kLetterA);
      ++s.i;
      ++s.j;
    } else if (x == 1 && y == 1) {
      s.letters.push_back(kLetterC);
      ++s.i;
      ++s.j;
    } else if (x == 0 && y == 1) {
      if (s.i + 1 >= a.size() || s.j + 1 >= b.size() || a[s.i + 1] != 1 || b[s.j + 1] != 0) {
        s.ok = false;
        return s;
      }
      s.letters.push_back(kLetterB);
      s.i += 2;
      s.j += 2;
    } else {
      s.ok = false;
      return s;
    }
  }
  return s;
}

}  // namespace

std::optional<Word> ternarize(const Word& w1, const Word& w2) {
  require_binary(w1);
  require_binary(w2);
  Scan s = scan(w1.letters(), w2.letters());
  if (!s.ok || s.i != w1.size() || s.j != w2.size()) return std::nullopt;
  return Word(Alphabet::ternary(), std::move(s.letters));
}

std::optional<PrefixTernarization> ternarize_prefix(const Word& w1, const Word& w2) {
  require_binary(w1);
  require_binary(w2);
  const std::size_t len = std::min(w1.size(), w2.size());
  auto a = w1.letters().first(len);
  auto b = w2.letters().first(len);
  if (len > 0 && a[len - 1] == 0 && b[len - 1] == 1) {
    a = a.first(len - 1);
    b = b.first(len - 1);
  }
  Scan s = scan(a, b);
  if (!s.ok || s.i != a.size() || s.j != b.size()) return std::nullopt;
  return PrefixTernarization{Word(Alphabet::ternary(), std::move(s.letters)), a.size(), b.size()};
}

bool is_amicable(const Word& w1, const Word& w2) { return ternarize(w1, w2).has_value(); }

SturmianCertificate sturmian_certificate(const Word& w, std::size_t n_max) {
  SturmianCertificate cert;
  if (w.size() < 20 * n_max) {
    cert.applicable = false;
    return cert;
  }
  for (std::size_t n = 1; n <= n_max; ++n) {
    if (factor_complexity(w, n) != n + 1) {
      cert.complexity_ok = false;
      cert.complexity_failure_at = n;
      break;
    }
  }
  cert.balanced = is_balanced(w, n_max).balanced;
  return cert;
}

AbmpReport verify_abmp(const ThreeIetParams& params, std::size_t n, std::size_t n_max) {
  AbmpReport report;
  report.prefix_length = n;
  report.n_max = n_max;
  const Word u = threeiet_word(params, n);
  const Word w1 = sigma01().apply(u);
  const Word w2 = sigma10().apply(u);
  report.image_length = w1.size();

  const auto ter = ternarize_prefix(w1, w2);
  report.ternarization_roundtrip = ter.has_value() && ter->word == u;
  report.details.push_back(report.ternarization_roundtrip
                               ? "ternarization reproduces the 3iet prefix"
                               : "ternarization does not reproduce the 3iet prefix");

  report.sigma01_certificate = sturmian_certificate(w1, n_max);
  report.sigma10_certificate = sturmian_certificate(w2, n_max);
  for (const auto& [name, cert] : {std::pair{"sigma01", report.sigma01_certificate},
                                   std::pair{"sigma10", report.sigma10_certificate}}) {
    if (!cert.applicable) {
      report.details.push_back(std::string(name) + " image too short for certificates up to n=" +
                               std::to_string(n_max) + "; skipped");
    } else if (!cert.complexity_ok) {
      report.details.push_back(std::string(name) + " complexity differs from n+1 at n=" +
                               std::to_string(*cert.complexity_failure_at));
    } else if (!cert.balanced) {
      report.details.push_back(std::string(name) + " image is not balanced");
    }
  }

  // sigma01 of the 3iet orbit is the rotation by 1 - eps cut at eps, read
  // from the same starting point.
  auto rot = RotationParams::validate(QuadraticReal(1) - params.epsilon(), params.epsilon(),
                                      params.x0());
  report.sigma01_equals_rotation = rotation_word(rot, w1.size()) == w1;
  if (!report.sigma01_equals_rotation) {
    report.details.push_back("sigma01 image differs from the rotation word");
  }
  return report;
}

std::uint64_t max_partial_quotient(const QuadraticReal& epsilon) {
  const CFExpansion cf = cf_expand(epsilon, 1);
  const auto k = cf.tail_max();
  if (!k) throw std::runtime_error("periodic tail of the continued fraction of eps not found");
  return *k;
}

BoundReport bound_check(const ThreeIetParams& params, std::size_t n) {
  BoundReport report;
  report.k = max_partial_quotient(params.epsilon());
  report.lower = report.k / 2;
  report.upper = report.k + 3;
  report.prefix_length = n;
  const IndexReport idx = word_index_estimate(threeiet_word(params, n));
  report.index_estimate = idx.index_estimate;
  report.max_integer_power = idx.max_integer_power.exponent;
  const auto upper = static_cast<std::int64_t>(report.upper);
  const auto lower = static_cast<std::int64_t>(report.lower);
  report.verdict_upper = report.index_estimate <= Ratio(upper, 1);
  report.verdict_integer = report.max_integer_power <= report.k + 2;
  report.lower_witness = report.index_estimate >= Ratio(lower, 1);
  return report;
}

std::optional<std::size_t> first_lower_witness(const ThreeIetParams& params, std::size_t n_max) {
  if (n_max == 0) return std::nullopt;
  const auto lower = static_cast<std::int64_t>(max_partial_quotient(params.epsilon()) / 2);
  const Word u = threeiet_word(params, n_max);
  auto reached = [&](std::size_t len) {
    return word_index_estimate(u.prefix(len)).index_estimate >= Ratio(lower, 1);
  };
  if (!reached(n_max)) return std::nullopt;
  // The estimate is nondecreasing in the prefix length.
  std::size_t lo = 1, hi = n_max;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (reached(mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

}  // namespace powerlab
