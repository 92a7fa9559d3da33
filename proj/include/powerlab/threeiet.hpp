// include/powerlab/threeiet.hpp
//
// The exchange of three intervals with permutation (3,2,1) on [0, ell):
//
//   I_A = [0, ell - 1 + eps)    x -> x + 1 - eps
//   I_B = [ell - 1 + eps, eps)  x -> x + 1 - 2 eps
//   I_C = [eps, ell)            x -> x - eps
//
// with eps irrational in (0,1) and max(eps, 1 - eps) < ell < 1. Boundary
// points belong to the interval they open. Also: the sigma01/sigma10
// projections to binary words, ternarization of amicable pairs, and the
// prefix-scale checks of the index bounds.
#ifndef POWERLAB_THREEIET_HPP
#define POWERLAB_THREEIET_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "powerlab/errors.hpp"
#include "powerlab/exactreal.hpp"
#include "powerlab/repetitions.hpp"
#include "powerlab/words.hpp"

namespace powerlab {

inline constexpr Letter kLetterA = 0;
inline constexpr Letter kLetterB = 1;
inline constexpr Letter kLetterC = 2;

class ThreeIetParams {
 public:
  /// Throws ParameterError naming the violated constraint.
  static ThreeIetParams validate(QuadraticReal epsilon, QuadraticReal ell, QuadraticReal x0);

  const QuadraticReal& epsilon() const noexcept { return epsilon_; }
  const QuadraticReal& ell() const noexcept { return ell_; }
  const QuadraticReal& x0() const noexcept { return x0_; }
  /// Right end of I_A (= left end of I_B): ell - 1 + eps.
  const QuadraticReal& a_end() const noexcept { return a_end_; }
  /// Right end of I_B (= left end of I_C): eps.
  const QuadraticReal& b_end() const noexcept { return epsilon_; }

  // Translations applied on I_A, I_B, I_C.
  const QuadraticReal& shift_a() const noexcept { return shift_a_; }
  const QuadraticReal& shift_b() const noexcept { return shift_b_; }
  const QuadraticReal& shift_c() const noexcept { return shift_c_; }

  /// Same eps and ell, another starting point.
  ThreeIetParams with_x0(QuadraticReal x0) const;

 private:
  ThreeIetParams() = default;

  QuadraticReal epsilon_;
  QuadraticReal ell_;
  QuadraticReal x0_;
  QuadraticReal a_end_;
  QuadraticReal shift_a_;  // 1 - eps
  QuadraticReal shift_b_;  // 1 - 2 eps
  QuadraticReal shift_c_;  // -eps
};

struct Step {
  Letter letter;
  QuadraticReal next;
};

/// Codes x and applies the transformation. Throws std::domain_error when x
/// is outside [0, ell).
Step step(const ThreeIetParams& params, const QuadraticReal& x);

/// u_0 .. u_{n-1} coding the orbit of x0.
Word threeiet_word(const ThreeIetParams& params, std::size_t n);

/// Letter-wise image under Phi_k: A -> 0, B -> 0 1^{k+1}, C -> 0 1^k.
Word phi_image(const Word& u, std::size_t k);

/// The ternary w with sigma01(w) = w1 and sigma10(w) = w2, or nullopt when
/// the pair is not amicable (including a dangling tail or length mismatch).
std::optional<Word> ternarize(const Word& w1, const Word& w2);

/// Ternarization of prefixes: a trailing (0,1) column that could begin a B is
/// trimmed before scanning.
struct PrefixTernarization {
  Word word;
  std::size_t used_length_1 = 0;
  std::size_t used_length_2 = 0;
};
std::optional<PrefixTernarization> ternarize_prefix(const Word& w1, const Word& w2);

/// w1 is amicable with w2 (w1 plays the sigma01 role).
bool is_amicable(const Word& w1, const Word& w2);

/// Complexity n+1 for 1 <= n <= n_max, and balance up to n_max.
struct SturmianCertificate {
  bool applicable = true;  // false when the word is too short for n_max
  bool complexity_ok = true;
  std::optional<std::size_t> complexity_failure_at;
  bool balanced = true;

  bool passed() const { return !applicable || (complexity_ok && balanced); }
};

SturmianCertificate sturmian_certificate(const Word& w, std::size_t n_max);

struct AbmpReport {
  std::size_t prefix_length = 0;
  std::size_t image_length = 0;
  std::size_t n_max = 0;
  bool ternarization_roundtrip = false;
  SturmianCertificate sigma01_certificate;
  SturmianCertificate sigma10_certificate;
  bool sigma01_equals_rotation = false;
  std::vector<std::string> details;

  bool all_passed() const {
    return ternarization_roundtrip && sigma01_certificate.passed() &&
           sigma10_certificate.passed() && sigma01_equals_rotation;
  }
};

/// Images shorter than 20 * n_max letters leave the certificates marked not
/// applicable.
AbmpReport verify_abmp(const ThreeIetParams& params, std::size_t n, std::size_t n_max);

/// Max partial quotient of eps over its exact periodic tail.
std::uint64_t max_partial_quotient(const QuadraticReal& epsilon);

struct BoundReport {
  std::uint64_t k = 0;
  std::uint64_t lower = 0;  // floor(K/2)
  std::uint64_t upper = 0;  // K + 3
  std::size_t prefix_length = 0;
  Ratio index_estimate;
  std::uint64_t max_integer_power = 1;
  bool verdict_upper = false;    // estimate <= K + 3
  bool verdict_integer = false;  // integer power <= K + 2
  bool lower_witness = false;    // estimate >= floor(K/2) already

  bool passed() const { return verdict_upper && verdict_integer; }
};

BoundReport bound_check(const ThreeIetParams& params, std::size_t n);

/// Smallest prefix length n <= n_max at which the index estimate reaches
/// floor(K/2), or nullopt.
std::optional<std::size_t> first_lower_witness(const ThreeIetParams& params, std::size_t n_max);

}  // namespace powerlab

#endif  // POWERLAB_THREEIET_HPP
