// include/powerlab/exactreal.hpp
//
// Exact arithmetic in a real quadratic field Q(sqrt(D)), continued fraction
// expansion with period detection, convergents, and the number-literal
// parser used by every command-line flag that takes a number.
//
// A QuadraticReal holds (p + q*sqrt(D)) / r in canonical form:
//   - r > 0 and gcd(p, q, r) = 1
//   - rational values are stored with q = 0 and D = 0
//   - D is square-free whenever q != 0
// Two values are equal iff their canonical fields are identical. Ordering is
// decided with integer arithmetic only.
#ifndef POWERLAB_EXACTREAL_HPP
#define POWERLAB_EXACTREAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace powerlab {

/// Thrown when two irrational operands live in different quadratic fields.
class IncompatibleField : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown by number-literal parsing; carries the 0-based character offset.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class QuadraticReal {
 public:
  QuadraticReal();  // zero
  QuadraticReal(long value);  // NOLINT(google-explicit-constructor)

  /// Builds (p + q*sqrt(d))/r and canonicalizes. Throws std::domain_error when
  /// r == 0 or d < 0.
  static QuadraticReal make(mpz_class p, mpz_class q, mpz_class d, mpz_class r);
  static QuadraticReal rational(mpz_class num, mpz_class den = 1);

  const mpz_class& p() const noexcept { return p_; }
  const mpz_class& q() const noexcept { return q_; }
  const mpz_class& radicand() const noexcept { return d_; }
  const mpz_class& r() const noexcept { return r_; }

  bool is_rational() const noexcept { return q_ == 0; }
  bool is_zero() const noexcept { return p_ == 0 && q_ == 0; }
  int sign() const;

  QuadraticReal operator-() const;
  QuadraticReal reciprocal() const;

  mpz_class floor() const;
  QuadraticReal fract() const;

  /// Grammar form: `p/r` for rationals, `(p+q*sqrt(D))/r` otherwise.
  std::string to_string() const;
  /// Decimal rendering with the given number of significant digits.
  std::string to_decimal(int significant_digits = 15) const;
  double to_double() const;

  friend QuadraticReal operator+(const QuadraticReal& a, const QuadraticReal& b);
  friend QuadraticReal operator-(const QuadraticReal& a, const QuadraticReal& b);
  friend QuadraticReal operator*(const QuadraticReal& a, const QuadraticReal& b);
  friend QuadraticReal operator/(const QuadraticReal& a, const QuadraticReal& b);

  friend bool operator==(const QuadraticReal& a, const QuadraticReal& b) = default;
  friend std::strong_ordering operator<=>(const QuadraticReal& a, const QuadraticReal& b);

 private:
  void canonicalize();

  mpz_class p_;
  mpz_class q_;
  mpz_class d_;
  mpz_class r_;
};

/// Common radicand of two operands, or throws IncompatibleField.
mpz_class common_radicand(const QuadraticReal& a, const QuadraticReal& b);

/// Three-way exact comparison; throws IncompatibleField on mixed radicands.
std::strong_ordering qr_compare(const QuadraticReal& a, const QuadraticReal& b);

/// Parses `rat | "(" int sign uint "*" "sqrt(" uint ")" ")" "/" uint`.
/// Whitespace is ignored.
QuadraticReal qr_parse(std::string_view text);

struct PeriodicTail {
  std::size_t preperiod = 0;             // number of a_n (n >= 1) before the period
  std::vector<std::uint64_t> period;     // repeating block
  std::vector<std::uint64_t> head;       // a_1 .. a_preperiod

  bool operator==(const PeriodicTail&) const = default;
};

struct Convergent {
  mpz_class p;
  mpz_class q;
};

/// Partial quotients [0; a1, a2, ...] of a value in (0,1). Coefficients past
/// the stored ones are served from the periodic tail when one is known.
class CFExpansion {
 public:
  CFExpansion() = default;
  /// Finite list a1..aM (a0 is implicitly 0).
  explicit CFExpansion(std::vector<std::uint64_t> coefficients);
  /// Eventually periodic expansion [0; pre..., period, period, ...].
  static CFExpansion periodic(std::vector<std::uint64_t> preperiod,
                              std::vector<std::uint64_t> period);

  /// a_n for n >= 1; throws std::out_of_range when unavailable.
  std::uint64_t coefficient(std::size_t n) const;
  /// True when a_n (n >= 1) is available, directly or through the tail.
  bool has_coefficient(std::size_t n) const;

  const std::vector<std::uint64_t>& stored() const noexcept { return coefficients_; }
  const std::optional<PeriodicTail>& tail() const noexcept { return tail_; }
  bool terminated() const noexcept { return terminated_; }
  const std::optional<QuadraticReal>& source() const noexcept { return source_; }

  /// Max coefficient over the preperiod and the period (requires a tail).
  std::optional<std::uint64_t> tail_max() const;

  /// Exact value of a periodic expansion.
  QuadraticReal value() const;

  /// `0,a1,a2,...` as accepted by the --cf flag.
  static CFExpansion parse_list(std::string_view text);

 private:
  friend CFExpansion cf_expand(const QuadraticReal& x, std::size_t n_terms);

  std::vector<std::uint64_t> coefficients_;
  std::optional<PeriodicTail> tail_;
  bool terminated_ = false;
  std::optional<QuadraticReal> source_;
};

/// First n_terms partial quotients of x in (0,1), with period detection for
/// quadratic irrationals. Rational inputs stop early with terminated() set.
CFExpansion cf_expand(const QuadraticReal& x, std::size_t n_terms);

/// (p_N, q_N) for N = 0..n_max with p_{-1} = 1, q_{-1} = 0, p_0 = 0, q_0 = 1.
std::vector<Convergent> convergents(const CFExpansion& cf, std::size_t n_max);

/// |x - p/q| < 1/q^2, decided exactly.
bool approximates_within_inverse_square(const QuadraticReal& x, const Convergent& c);

/// Exact value of the purely periodic expansion [0; period, period, ...].
QuadraticReal purely_periodic_value(const std::vector<std::uint64_t>& period);

}  // namespace powerlab

#endif  // POWERLAB_EXACTREAL_HPP
