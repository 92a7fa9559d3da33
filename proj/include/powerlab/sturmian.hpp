// include/powerlab/sturmian.hpp
//
// Sturmian words as codings of a two-interval exchange, codings of
// rotations, standard words and the characteristic word, the exact index
// formula for Sturmian words, and the two-block parser of the
// characteristic word.
//
// Letter conventions. The orbit coding puts letter 0 on [0, eps), so letter
// 0 has frequency eps. The standard-word recursion starts from s_{-1} = 1,
// s_0 = 0 and yields a characteristic word whose letter 1 has frequency eps.
// Both objects are produced as defined; comparisons between them go through
// letter_exchange() explicitly.
#ifndef POWERLAB_STURMIAN_HPP
#define POWERLAB_STURMIAN_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "powerlab/errors.hpp"
#include "powerlab/exactreal.hpp"
#include "powerlab/words.hpp"

namespace powerlab {

/// Two-interval exchange: x -> x + 1 - eps on [0, eps) (letter 0),
/// x -> x - eps on [eps, 1) (letter 1).
class SturmianParams {
 public:
  /// Throws ParameterError unless eps is irrational in (0,1) and x0 in [0,1).
  static SturmianParams validate(QuadraticReal epsilon, QuadraticReal x0);

  const QuadraticReal& epsilon() const noexcept { return epsilon_; }
  const QuadraticReal& x0() const noexcept { return x0_; }

 private:
  SturmianParams(QuadraticReal e, QuadraticReal x) : epsilon_(std::move(e)), x0_(std::move(x)) {}
  QuadraticReal epsilon_;
  QuadraticReal x0_;
};

/// u_n = 0 iff {x0 + n*alpha} lies in [0, beta).
class RotationParams {
 public:
  /// Throws ParameterError unless alpha is irrational in (0,1), beta in
  /// (0,1) and x0 in [0,1), all in one quadratic field.
  static RotationParams validate(QuadraticReal alpha, QuadraticReal beta, QuadraticReal x0);

  const QuadraticReal& alpha() const noexcept { return alpha_; }
  const QuadraticReal& beta() const noexcept { return beta_; }
  const QuadraticReal& x0() const noexcept { return x0_; }

 private:
  RotationParams(QuadraticReal a, QuadraticReal b, QuadraticReal x)
      : alpha_(std::move(a)), beta_(std::move(b)), x0_(std::move(x)) {}
  QuadraticReal alpha_;
  QuadraticReal beta_;
  QuadraticReal x0_;
};

Word rotation_word(const RotationParams& params, std::size_t n);

/// The orbit coding of x0; the rotation by 1 - eps with partition point eps.
Word sturmian_word(const SturmianParams& params, std::size_t n);

/// s_{-1} = 1, s_0 = 0, s_1 = s_0^{a_1 - 1} s_{-1}, s_{n+1} = s_n^{a_{n+1}} s_{n-1}.
/// The recursion is applied literally, so a_1 = 1 gives s_1 = 1.
Word standard_word(const CFExpansion& cf, int level);

/// Length-n prefix of the characteristic word, the limit of the s_n.
Word characteristic_prefix(const CFExpansion& cf, std::size_t n);

/// Values of 2 + a_{N+1} + (q_{N-1} - 2)/q_N for N = 0..n_max with q_{-1} = 0.
struct IndexFormulaReport {
  std::size_t n_max = 0;
  std::vector<QuadraticReal> terms;
  QuadraticReal truncated_sup;
  std::size_t argmax = 0;
  // Limit of the terms along the period (max over phases); periodic cf only.
  std::optional<QuadraticReal> periodic_limit;
  // max(truncated_sup, periodic_limit) when the cf is periodic.
  std::optional<QuadraticReal> supremum;
  bool finite = true;
  // True when finiteness and K were judged from a finite window of
  // coefficients rather than a known periodic tail.
  bool window_only = false;
  std::uint64_t max_partial_quotient = 0;
};

IndexFormulaReport sturmian_index_formula(const CFExpansion& cf, std::size_t n_max);

enum class BlockTag { Long, Short };

const char* to_string(BlockTag tag);

struct BlockParse {
  std::size_t level = 0;
  Word e;               // s_n
  Word f;               // s_{n-1}
  std::uint64_t k = 0;  // a_{n+1}
  std::vector<BlockTag> blocks;
  std::size_t consumed = 0;
  std::size_t tail = 0;

  Word long_block() const;   // E^{k+1} F
  Word short_block() const;  // E^k F
  /// Concatenation of the tagged blocks.
  Word reassemble() const;
};

/// Parses a prefix of the characteristic word into blocks E^{k+1}F and E^kF
/// with E = s_n, F = s_{n-1}, k = a_{n+1}. Long blocks are tried first and
/// dead ends are backtracked. The unparsed tail is shorter than the long
/// block. Throws std::invalid_argument when no block starts the prefix and
/// std::out_of_range for an unusable level.
BlockParse block_decompose(const Word& prefix, const CFExpansion& cf, std::size_t level);

}  // namespace powerlab

#endif  // POWERLAB_STURMIAN_HPP
