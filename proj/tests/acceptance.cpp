// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.
#include <boost/multiprecision/cpp_dec_float.hpp>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "powerlab/exactreal.hpp"
#include "powerlab/experiments.hpp"
#include "powerlab/repetitions.hpp"
#include "powerlab/sturmian.hpp"
#include "powerlab/threeiet.hpp"
#include "powerlab/words.hpp"

using namespace powerlab;
using Dec60 = boost::multiprecision::number<boost::multiprecision::cpp_dec_float<60>>;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

QuadraticReal Q(const char* s) { return qr_parse(s); }

const QuadraticReal kGolden = qr_parse("(-1+1*sqrt(5))/2");
const QuadraticReal kSilver = qr_parse("(-1+1*sqrt(2))/1");

Dec60 decimal(const QuadraticReal& x) {
  Dec60 p(x.p().get_str()), q(x.q().get_str()), d(x.radicand().get_str()), r(x.r().get_str());
  return (p + q * boost::multiprecision::sqrt(d)) / r;
}

Outcome amicable_pair() {
  const Word w = Word::parse("ACABAC");
  const std::string s01 = apply_morphism(sigma01(), w).str();
  const std::string s10 = apply_morphism(sigma10(), w).str();
  const auto t = ternarize(Word::parse("0100101"), Word::parse("0101001"));
  const bool ok = s01 == "0100101" && s10 == "0101001" && t && t->str() == "ACABAC";
  return {ok, "sigma01=" + s01 + " sigma10=" + s10 + " ternarization=" + (t ? t->str() : "none")};
}

Outcome index_formula() {
  const CFExpansion cf = cf_expand(kGolden, 1);
  const Ratio est = word_index_estimate(characteristic_prefix(cf, 10000)).index_estimate;
  const bool bracket = est >= Ratio(340, 100) && est <= Ratio(361804, 100000);

  const IndexFormulaReport r = sturmian_index_formula(cf, 12);
  const auto cs = convergents(cf, 12);
  const QuadraticReal expected =
      QuadraticReal(3) + QuadraticReal::rational(cs[11].q - 2, cs[12].q);
  const bool truncated = r.truncated_sup == expected;

  const QuadraticReal closed = Q("(5+1*sqrt(5))/2");
  bool limit = r.periodic_limit && *r.periodic_limit == closed;
  Dec60 gap = 1;
  if (r.periodic_limit) {
    gap = abs(decimal(*r.periodic_limit) - (5 + boost::multiprecision::sqrt(Dec60(5))) / 2);
    limit = limit && gap < Dec60("1e-12");
  }
  std::ostringstream d;
  d << "estimate=" << est.str() << " (" << est.to_double() << ") truncated_sup=" << r.truncated_sup.to_string()
    << " expected=" << expected.to_string() << " limit="
    << (r.periodic_limit ? r.periodic_limit->to_string() : "none") << " decimal_gap<1e-12=" << (gap < Dec60("1e-12"));
  return {bracket && truncated && limit, d.str()};
}

Outcome projection_grid() {
  const std::vector<QuadraticReal> slopes{kGolden, kSilver, Q("(0+1*sqrt(2))/2")};
  const std::vector<QuadraticReal> ells{Q("7/10"), Q("4/5"), Q("9/10")};
  const std::vector<QuadraticReal> starts{QuadraticReal(0), Q("1/10")};
  std::size_t triples = 0, skipped = 0, failures = 0;
  for (const auto& eps : slopes) {
    for (const auto& ell : ells) {
      for (const auto& x0 : starts) {
        std::optional<ThreeIetParams> params;
        try {
          params = ThreeIetParams::validate(eps, ell, x0);
        } catch (const ParameterError&) {
          ++skipped;
          continue;
        }
        ++triples;
        const AbmpReport rep = verify_abmp(*params, 500, 12);
        const bool certified = rep.sigma01_certificate.applicable && rep.sigma10_certificate.applicable;
        if (!rep.all_passed() || !certified) ++failures;
      }
    }
  }
  std::ostringstream d;
  d << triples << " admissible triples checked (" << skipped
    << " grid points excluded by max(eps,1-eps) < ell < 1), failures=" << failures;
  return {triples > 0 && failures == 0, d.str()};
}

Outcome upper_bounds() {
  const BoundReport s = bound_check(ThreeIetParams::validate(kSilver, Q("7/10"), 0), 100000);
  const BoundReport g = bound_check(ThreeIetParams::validate(kGolden, Q("4/5"), 0), 100000);
  const bool ok = s.k == 2 && s.index_estimate <= Ratio(5, 1) && s.max_integer_power <= 4 && g.k == 1 &&
                  g.index_estimate <= Ratio(4, 1) && g.max_integer_power <= 3;
  std::ostringstream d;
  d << "sqrt2-1: K=" << s.k << " estimate=" << s.index_estimate.str() << " power=" << s.max_integer_power
    << "; golden: K=" << g.k << " estimate=" << g.index_estimate.str() << " power=" << g.max_integer_power;
  return {ok, d.str()};
}

Outcome lower_witness() {
  const auto s = first_lower_witness(ThreeIetParams::validate(kSilver, Q("7/10"), 0), 100000);
  const auto g = first_lower_witness(ThreeIetParams::validate(kGolden, Q("4/5"), 0), 100000);
  std::ostringstream d;
  d << "sqrt2-1 reaches floor(K/2)=1 at N=" << (s ? std::to_string(*s) : "never")
    << "; golden reaches floor(K/2)=0 at N=" << (g ? std::to_string(*g) : "never");
  return {s.has_value() && g.has_value(), d.str()};
}

Outcome oracle_equivalence() {
  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<std::size_t> len(1, 300);
  std::size_t mismatches = 0, checked = 0;
  for (int i = 0; i < 500; ++i) {
    const Alphabet a = (i % 2) ? Alphabet::binary() : Alphabet::ternary();
    std::uniform_int_distribution<int> letter(0, static_cast<int>(a.size()) - 1);
    Word w(a);
    const std::size_t n = len(rng);
    for (std::size_t k = 0; k < n; ++k) w.push_back(static_cast<Letter>(letter(rng)));
    mismatches += !(word_index_estimate(w).index_estimate == brute_force_index(w));
    ++checked;
  }
  const std::vector<Word> golden{
      Word::parse("ACABAC"), Word::parse("0100101"), Word::parse("0101001"), Word::parse("AACABAC"),
      Word::parse("aabaabaa"), Word::parse("abcabca"), Word::parse("abcab"), Word::parse("1011010110110"),
      characteristic_prefix(cf_expand(kGolden, 1), 5000), characteristic_prefix(cf_expand(kSilver, 1), 5000),
      threeiet_word(ThreeIetParams::validate(kGolden, Q("4/5"), 0), 5000),
      threeiet_word(ThreeIetParams::validate(kSilver, Q("7/10"), 0), 5000)};
  for (const Word& w : golden) {
    mismatches += !(word_index_estimate(w).index_estimate == brute_force_index(w));
    ++checked;
  }
  return {mismatches == 0, std::to_string(checked) + " words compared, mismatches=" + std::to_string(mismatches)};
}

Outcome block_structure() {
  const CFExpansion cf = cf_expand(kGolden, 1);
  const Word prefix = characteristic_prefix(cf, 200);
  bool ok = true;
  std::ostringstream d;
  for (std::size_t level : {2, 3, 4}) {
    const BlockParse p = block_decompose(prefix, cf, level);
    const bool good = p.reassemble() == prefix.prefix(p.consumed) && p.consumed + p.tail == prefix.size() &&
                      p.tail < p.long_block().size();
    ok = ok && good;
    d << "n=" << level << ": " << p.blocks.size() << " blocks, tail " << p.tail << (good ? "" : " BAD") << "; ";
  }
  return {ok, d.str()};
}

Outcome divergence() {
  ExperimentSpec spec;
  spec.kind = ExperimentKind::EllSweep;
  spec.epsilons = {kGolden};
  spec.ells = {Q("7/10"), Q("9/10"), Q("99/100")};
  spec.lengths = {20000};
  const Table t = run_experiment(spec);
  auto ratio = [](const Json& v) {
    const std::string s = v.get<std::string>();
    const auto slash = s.find('/');
    return Ratio(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  };
  bool u_bounded = true;
  std::ostringstream d;
  for (const Json& row : t.rows) {
    u_bounded = u_bounded && ratio(row["index_u"]) <= Ratio(4, 1);
    d << "ell=" << row["ell"].get<std::string>() << ": u " << row["index_u"].get<std::string>() << ", Phi0 "
      << row["index_phi0"].get<std::string>() << "; ";
  }
  const bool separated = t.rows.size() == 3 && ratio(t.rows[2]["index_phi0"]) >= Ratio(10, 1);
  return {u_bounded && separated, d.str()};
}

Outcome exact_orbit() {
  const ThreeIetParams p = ThreeIetParams::validate(kSilver, Q("7/10"), 0);
  const Dec60 eps = decimal(p.epsilon()), ell = decimal(p.ell()), a_end = ell - 1 + eps;
  QuadraticReal x = p.x0();
  Dec60 y = 0;
  const QuadraticReal zero;
  std::size_t disagreements = 0, escapes = 0;
  for (int i = 0; i < 100000; ++i) {
    const Step s = step(p, x);
    Letter dl;
    if (y < a_end) {
      dl = kLetterA;
      y += 1 - eps;
    } else if (y < eps) {
      dl = kLetterB;
      y += 1 - 2 * eps;
    } else {
      dl = kLetterC;
      y -= eps;
    }
    disagreements += dl != s.letter;
    x = s.next;
    escapes += x < zero || x >= p.ell();
  }
  return {disagreements == 0 && escapes == 0,
          "100000 steps, letter disagreements=" + std::to_string(disagreements) +
              ", points outside [0, ell)=" + std::to_string(escapes)};
}

struct Criterion {
  int id;
  const char* name;
  double budget_ms;  // zero: no runtime bound
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "golden amicable pair: sigma images and ternarization", 1.0, amicable_pair},
      {2, "Fibonacci index bracketing and index formula values", 5000.0, index_formula},
      {3, "amicable Sturmian projections on the parameter grid", 30000.0, projection_grid},
      {4, "upper index and integer power bounds at N=1e5", 60000.0, upper_bounds},
      {5, "lower bound floor(K/2) reached by N=1e5", 0.0, lower_witness},
      {6, "run-based index equals the brute-force oracle", 30000.0, oracle_equivalence},
      {7, "block structure of the Fibonacci word", 0.0, block_structure},
      {8, "Phi_0 image index separates from the 3iet index", 0.0, divergence},
      {9, "exact orbit soundness against 60-digit decimals", 60000.0, exact_orbit},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = c.budget_ms <= 0 || ms < c.budget_ms;
    const bool pass = o.pass && in_time;
    failed += !pass;
    std::printf("[%s] criterion %d: %s | %s | %.3f ms%s\n", pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), ms,
                in_time ? "" : " (over budget)");
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
