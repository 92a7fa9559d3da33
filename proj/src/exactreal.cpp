// src/exactreal.cpp
#include "powerlab/exactreal.hpp"

#include <gmp.h>

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <tuple>
#include <utility>

namespace powerlab {

namespace {

// Radicands whose unfactored remainder exceeds this cannot be certified
// square-free by trial division to kTrialBound plus a perfect-square test.
constexpr unsigned long kTrialBound = 1000000UL;

// d = f^2 * core with core square-free.
std::pair<mpz_class, mpz_class> split_square(mpz_class d) {
  mpz_class f = 1;
  mpz_class core = 1;
  for (unsigned long i = 2; i <= kTrialBound; ++i) {
    if (mpz_class(i) * i > d) break;
    if (mpz_divisible_ui_p(d.get_mpz_t(), i) == 0) continue;
    unsigned e = 0;
    while (mpz_divisible_ui_p(d.get_mpz_t(), i) != 0) {
      mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), i);
      ++e;
    }
    for (unsigned k = 0; k < e / 2; ++k) f *= i;
    if (e % 2 == 1) core *= i;
  }
  if (d > 1) {
    if (mpz_perfect_square_p(d.get_mpz_t()) != 0) {
      mpz_class s;
      mpz_sqrt(s.get_mpz_t(), d.get_mpz_t());
      f *= s;
    } else {
      // Any remaining square factor would need a prime above kTrialBound
      // appearing twice plus another cofactor.
      mpz_class limit = mpz_class(kTrialBound) * kTrialBound * kTrialBound;
      if (d >= limit) throw std::domain_error("radicand too large to certify square-free");
      core *= d;
    }
  }
  return {f, core};
}

// Sign of a + b*sqrt(d) for integers a, b and square-free d > 1 (or b == 0).
int sign_of(const mpz_class& a, const mpz_class& b, const mpz_class& d) {
  const int sa = sgn(a);
  const int sb = sgn(b);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  const mpz_class lhs = a * a;
  const mpz_class rhs = b * b * d;
  const int c = cmp(lhs, rhs);  // never 0: sqrt(d) is irrational
  return sa > 0 ? c : -c;
}

}  // namespace

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::invalid_argument(what + " at position " + std::to_string(position)),
      position_(position) {}

QuadraticReal::QuadraticReal() : p_(0), q_(0), d_(0), r_(1) {}

QuadraticReal::QuadraticReal(long value) : p_(value), q_(0), d_(0), r_(1) {}

QuadraticReal QuadraticReal::make(mpz_class p, mpz_class q, mpz_class d, mpz_class r) {
  if (r == 0) throw std::domain_error("zero denominator");
  if (d < 0) throw std::domain_error("negative radicand");
  QuadraticReal x;
  x.p_ = std::move(p);
  x.q_ = std::move(q);
  x.d_ = std::move(d);
  x.r_ = std::move(r);
  x.canonicalize();
  return x;
}

QuadraticReal QuadraticReal::rational(mpz_class num, mpz_class den) {
  return make(std::move(num), 0, 0, std::move(den));
}

void QuadraticReal::canonicalize() {
  if (r_ < 0) {
    p_ = -p_;
    q_ = -q_;
    r_ = -r_;
  }
  if (q_ == 0 || d_ == 0) {
    q_ = 0;
    d_ = 0;
  } else {
    auto [f, core] = split_square(d_);
    if (core == 1) {
      p_ += q_ * f;
      q_ = 0;
      d_ = 0;
    } else {
      q_ *= f;
      d_ = core;
    }
  }
  mpz_class g = gcd(gcd(p_, q_), r_);
  if (g > 1) {
    mpz_divexact(p_.get_mpz_t(), p_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(q_.get_mpz_t(), q_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(r_.get_mpz_t(), r_.get_mpz_t(), g.get_mpz_t());
  }
}

int QuadraticReal::sign() const { return sign_of(p_, q_, d_); }

QuadraticReal QuadraticReal::operator-() const {
  QuadraticReal x = *this;
  x.p_ = -x.p_;
  x.q_ = -x.q_;
  return x;
}

QuadraticReal QuadraticReal::reciprocal() const {
  if (is_zero()) throw std::domain_error("division by zero");
  // r / (p + q sqrt d) = r (p - q sqrt d) / (p^2 - q^2 d)
  mpz_class norm = p_ * p_ - q_ * q_ * d_;
  return make(r_ * p_, -r_ * q_, d_, norm);
}

mpz_class QuadraticReal::floor() const {
  mpz_class estimate;
  if (is_rational()) {
    mpz_fdiv_q(estimate.get_mpz_t(), p_.get_mpz_t(), r_.get_mpz_t());
    return estimate;
  }
  // floor((p + y)/r) = floor((p + floor(y))/r) for irrational y and r > 0.
  mpz_class y2 = q_ * q_ * d_;
  mpz_class s;
  mpz_sqrt(s.get_mpz_t(), y2.get_mpz_t());
  if (q_ < 0) s = -s - 1;
  mpz_class num = p_ + s;
  mpz_fdiv_q(estimate.get_mpz_t(), num.get_mpz_t(), r_.get_mpz_t());
  // Verify estimate <= x < estimate + 1 exactly.
  while (qr_compare(*this, rational(estimate)) == std::strong_ordering::less) estimate -= 1;
  while (qr_compare(*this, rational(estimate + 1)) != std::strong_ordering::less) estimate += 1;
  return estimate;
}

QuadraticReal QuadraticReal::fract() const { return *this - rational(floor()); }

std::string QuadraticReal::to_string() const {
  if (is_rational()) {
    if (r_ == 1) return p_.get_str();
    return p_.get_str() + "/" + r_.get_str();
  }
  std::string s = "(" + p_.get_str();
  s += (q_ < 0 ? "-" : "+");
  mpz_class aq = abs(q_);
  s += aq.get_str() + "*sqrt(" + d_.get_str() + "))/" + r_.get_str();
  return s;
}

std::string QuadraticReal::to_decimal(int significant_digits) const {
  const mp_bitcnt_t bits = static_cast<mp_bitcnt_t>(significant_digits) * 4 + 128;
  mpf_class num(p_, bits);
  if (!is_rational()) {
    mpf_class root(d_, bits);
    mpf_sqrt(root.get_mpf_t(), root.get_mpf_t());
    num += mpf_class(q_, bits) * root;
  }
  mpf_class value(num / mpf_class(r_, bits), bits);
  std::vector<char> buf(static_cast<std::size_t>(significant_digits) + 64);
  gmp_snprintf(buf.data(), buf.size(), "%.*Fg", significant_digits, value.get_mpf_t());
  return std::string(buf.data());
}

double QuadraticReal::to_double() const { return std::stod(to_decimal(20)); }

mpz_class common_radicand(const QuadraticReal& a, const QuadraticReal& b) {
  if (a.is_rational()) return b.radicand();
  if (b.is_rational()) return a.radicand();
  if (a.radicand() != b.radicand()) {
    throw IncompatibleField("operands in Q(sqrt(" + a.radicand().get_str() + ")) and Q(sqrt(" +
                            b.radicand().get_str() + "))");
  }
  return a.radicand();
}

QuadraticReal operator+(const QuadraticReal& a, const QuadraticReal& b) {
  mpz_class d = common_radicand(a, b);
  return QuadraticReal::make(a.p_ * b.r_ + b.p_ * a.r_, a.q_ * b.r_ + b.q_ * a.r_, d, a.r_ * b.r_);
}

QuadraticReal operator-(const QuadraticReal& a, const QuadraticReal& b) { return a + (-b); }

QuadraticReal operator*(const QuadraticReal& a, const QuadraticReal& b) {
  mpz_class d = common_radicand(a, b);
  return QuadraticReal::make(a.p_ * b.p_ + a.q_ * b.q_ * d, a.p_ * b.q_ + b.p_ * a.q_, d,
                             a.r_ * b.r_);
}

QuadraticReal operator/(const QuadraticReal& a, const QuadraticReal& b) {
  common_radicand(a, b);
  return a * b.reciprocal();
}

std::strong_ordering operator<=>(const QuadraticReal& a, const QuadraticReal& b) {
  return qr_compare(a, b);
}

std::strong_ordering qr_compare(const QuadraticReal& a, const QuadraticReal& b) {
  mpz_class d = common_radicand(a, b);
  // Denominators are positive, so the sign of the cross-multiplied
  // difference is the sign of a - b.
  mpz_class x = a.p() * b.r() - b.p() * a.r();
  mpz_class y = a.q() * b.r() - b.q() * a.r();
  const int s = sign_of(x, y, d);
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Number-literal parser

namespace {

class LiteralParser {
 public:
  explicit LiteralParser(std::string_view text) : text_(text) {}

  QuadraticReal parse() {
    skip_ws();
    QuadraticReal value = peek() == '(' ? parse_radical() : parse_rational();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(std::string_view token) {
    for (char c : token) {
      if (peek() != c) fail(std::string("expected '") + std::string(token) + "'");
      ++pos_;
    }
  }

  mpz_class parse_uint() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
    if (pos_ == start) fail("expected digits");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  mpz_class parse_int() {
    char c = peek();
    if (c == '-' || c == '+') {
      ++pos_;
      mpz_class v = parse_uint();
      return c == '-' ? mpz_class(-v) : v;
    }
    return parse_uint();
  }

  mpz_class parse_denominator() {
    skip_ws();
    const std::size_t at = pos_;
    mpz_class den = parse_uint();
    if (den == 0) throw ParseError("zero denominator", at);
    return den;
  }

  QuadraticReal parse_rational() {
    mpz_class num = parse_int();
    mpz_class den = 1;
    if (peek() == '/') {
      ++pos_;
      den = parse_denominator();
    }
    return QuadraticReal::rational(num, den);
  }

  QuadraticReal parse_radical() {
    expect("(");
    mpz_class p = parse_int();
    char s = peek();
    if (s != '+' && s != '-') fail("expected '+' or '-'");
    ++pos_;
    mpz_class q = parse_uint();
    if (s == '-') q = -q;
    expect("*");
    expect("sqrt(");
    if (peek() == '-') fail("negative radicand");
    mpz_class d = parse_uint();
    expect(")");
    expect(")");
    expect("/");
    mpz_class r = parse_denominator();
    return QuadraticReal::make(p, q, d, r);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

QuadraticReal qr_parse(std::string_view text) { return LiteralParser(text).parse(); }

// ---------------------------------------------------------------------------
// Continued fractions

CFExpansion::CFExpansion(std::vector<std::uint64_t> coefficients)
    : coefficients_(std::move(coefficients)) {
  for (auto a : coefficients_) {
    if (a == 0) throw std::invalid_argument("partial quotients a_n (n >= 1) must be positive");
  }
}

CFExpansion CFExpansion::periodic(std::vector<std::uint64_t> preperiod,
                                  std::vector<std::uint64_t> period) {
  if (period.empty()) throw std::invalid_argument("empty period");
  std::vector<std::uint64_t> all = preperiod;
  all.insert(all.end(), period.begin(), period.end());
  CFExpansion cf(std::move(all));
  cf.tail_ = PeriodicTail{preperiod.size(), std::move(period), std::move(preperiod)};
  return cf;
}

std::uint64_t CFExpansion::coefficient(std::size_t n) const {
  if (n == 0) return 0;
  if (n <= coefficients_.size()) return coefficients_[n - 1];
  if (!tail_) throw std::out_of_range("insufficient coefficients: a_" + std::to_string(n));
  if (n <= tail_->preperiod) return tail_->head[n - 1];
  const std::size_t k = tail_->period.size();
  return tail_->period[(n - 1 - tail_->preperiod) % k];
}

bool CFExpansion::has_coefficient(std::size_t n) const {
  return n == 0 || n <= coefficients_.size() || tail_.has_value();
}

std::optional<std::uint64_t> CFExpansion::tail_max() const {
  if (!tail_) return std::nullopt;
  std::uint64_t m = 0;
  for (std::size_t n = 1; n <= tail_->preperiod + tail_->period.size(); ++n) {
    m = std::max(m, coefficient(n));
  }
  return m;
}

QuadraticReal CFExpansion::value() const {
  if (source_) return *source_;
  QuadraticReal x;
  if (tail_) {
    x = purely_periodic_value(tail_->period);
    for (std::size_t i = tail_->preperiod; i-- > 0;) {
      x = (QuadraticReal(static_cast<long>(coefficients_[i])) + x).reciprocal();
    }
    return x;
  }
  for (std::size_t i = coefficients_.size(); i-- > 0;) {
    x = (QuadraticReal::rational(mpz_class(std::to_string(coefficients_[i]))) + x).reciprocal();
  }
  return x;
}

CFExpansion CFExpansion::parse_list(std::string_view text) {
  std::vector<std::uint64_t> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string item(text.substr(pos, comma - pos));
    item.erase(std::remove_if(item.begin(), item.end(),
                              [](unsigned char c) { return std::isspace(c) != 0; }),
               item.end());
    if (item.empty() || !std::all_of(item.begin(), item.end(),
                                     [](unsigned char c) { return std::isdigit(c) != 0; })) {
      throw ParseError("expected a non-negative integer in coefficient list", pos);
    }
    values.push_back(std::stoull(item));
    pos = comma + 1;
  }
  if (values.front() != 0) throw std::invalid_argument("a0 must be 0 for values in (0,1)");
  values.erase(values.begin());
  return CFExpansion(std::move(values));
}

CFExpansion cf_expand(const QuadraticReal& x, std::size_t n_terms) {
  if (n_terms == 0) throw std::invalid_argument("n_terms must be at least 1");
  if (!(x > QuadraticReal(0) && x < QuadraticReal(1))) {
    throw std::domain_error("continued fraction expansion needs a value in (0,1)");
  }
  CFExpansion cf;
  cf.source_ = x;
  // Periods of quadratic irrationals can exceed n_terms; keep searching a
  // while after n_terms so the tail is recorded.
  const std::size_t budget = n_terms + 20000;
  std::map<std::tuple<mpz_class, mpz_class, mpz_class>, std::size_t> seen;
  std::vector<std::uint64_t> coeffs;
  QuadraticReal y = x.reciprocal();
  while (coeffs.size() < budget) {
    if (!y.is_rational()) {
      auto key = std::make_tuple(y.p(), y.q(), y.r());
      auto it = seen.find(key);
      if (it != seen.end()) {
        const std::size_t start = it->second;  // index into coeffs
        const auto split = coeffs.begin() + static_cast<std::ptrdiff_t>(start);
        cf.tail_ = PeriodicTail{start, std::vector<std::uint64_t>(split, coeffs.end()),
                                std::vector<std::uint64_t>(coeffs.begin(), split)};
        break;
      }
      seen.emplace(std::move(key), coeffs.size());
    } else if (coeffs.size() >= n_terms) {
      break;
    }
    mpz_class a = y.floor();
    if (!a.fits_ulong_p()) throw std::overflow_error("partial quotient exceeds 64 bits");
    coeffs.push_back(a.get_ui());
    QuadraticReal rest = y - QuadraticReal::rational(a);
    if (rest.is_zero()) {
      cf.terminated_ = true;
      break;
    }
    y = rest.reciprocal();
  }
  if (cf.tail_) {
    cf.coefficients_ = std::move(coeffs);
    cf.coefficients_.resize(std::min(cf.coefficients_.size(), n_terms));
    while (cf.coefficients_.size() < n_terms) {
      cf.coefficients_.push_back(cf.coefficient(cf.coefficients_.size() + 1));
    }
  } else {
    if (coeffs.size() > n_terms) coeffs.resize(n_terms);
    cf.coefficients_ = std::move(coeffs);
  }
  return cf;
}

std::vector<Convergent> convergents(const CFExpansion& cf, std::size_t n_max) {
  std::vector<Convergent> out;
  out.reserve(n_max + 1);
  mpz_class p_prev = 1, q_prev = 0;  // N = -1
  mpz_class p = 0, q = 1;             // N = 0
  out.push_back({p, q});
  for (std::size_t n = 1; n <= n_max; ++n) {
    if (!cf.has_coefficient(n)) {
      throw std::out_of_range("insufficient coefficients for convergent " + std::to_string(n));
    }
    mpz_class a(std::to_string(cf.coefficient(n)));
    mpz_class p_next = a * p + p_prev;
    mpz_class q_next = a * q + q_prev;
    p_prev = std::exchange(p, p_next);
    q_prev = std::exchange(q, q_next);
    out.push_back({p, q});
  }
  return out;
}

bool approximates_within_inverse_square(const QuadraticReal& x, const Convergent& c) {
  QuadraticReal diff = x - QuadraticReal::rational(c.p, c.q);
  if (diff.sign() < 0) diff = -diff;
  return diff < QuadraticReal::rational(1, c.q * c.q);
}

QuadraticReal purely_periodic_value(const std::vector<std::uint64_t>& period) {
  if (period.empty()) throw std::invalid_argument("empty period");
  // x = f_{c1} o ... o f_{ck}(x) with f_c(t) = 1/(c + t) = [[0,1],[1,c]].
  mpz_class a = 1, b = 0, c = 0, d = 1;
  for (std::uint64_t ci : period) {
    mpz_class cc(std::to_string(ci));
    // [[a,b],[c,d]] * [[0,1],[1,cc]]
    mpz_class na = b, nb = a + b * cc;
    mpz_class nc = d, nd = c + d * cc;
    a = na; b = nb; c = nc; d = nd;
  }
  // c x^2 + (d - a) x - b = 0, positive root.
  mpz_class disc = (d - a) * (d - a) + 4 * b * c;
  return QuadraticReal::make(a - d, 1, disc, 2 * c);
}

}  // namespace powerlab
