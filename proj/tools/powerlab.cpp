// tools/powerlab.cpp
//
// powerlab generate {sturmian|rotation|3iet|characteristic|standard} ...
// powerlab index   (--word W | --file F | generation flags) [--oracle] [--per-factor L]
// powerlab verify  {abmp|bounds|blocks|theorem3} ...
// powerlab experiment {ell-sweep|bounds-grid|index-convergence} ...
//
// Exit codes: 0 ok, 1 internal error, 2 invalid input, 3 oracle mismatch,
// 4 a verdict failed.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "powerlab/errors.hpp"
#include "powerlab/exactreal.hpp"
#include "powerlab/experiments.hpp"
#include "powerlab/json_io.hpp"
#include "powerlab/repetitions.hpp"
#include "powerlab/sturmian.hpp"
#include "powerlab/threeiet.hpp"
#include "powerlab/words.hpp"

using namespace powerlab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitOracle = 3;
constexpr int kExitVerdict = 4;

struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string kind;
  std::string eps, alpha, beta, x0 = "0", cf, word, file, out, format = "json";
  std::vector<std::string> ells;
  std::vector<std::string> epsilons;
  std::vector<std::size_t> lengths;
  std::size_t n = 0;
  int level = 0;
  std::size_t n_max = 12;
  std::size_t per_factor = 0;
  bool oracle = false;
};

QuadraticReal number(const std::string& text, const char* flag) {
  if (text.empty()) throw InvalidInput(std::string("missing ") + flag);
  try {
    return qr_parse(text);
  } catch (const ParseError& e) {
    throw InvalidInput(std::string(flag) + ": " + e.what());
  }
}

std::size_t require_n(const Options& o) {
  if (o.n == 0) throw InvalidInput("missing -N (prefix length must be positive)");
  return o.n;
}

CFExpansion continued_fraction(const Options& o) {
  if (!o.cf.empty()) {
    try {
      return CFExpansion::parse_list(o.cf);
    } catch (const std::invalid_argument& e) {
      throw InvalidInput(std::string("--cf: ") + e.what());
    }
  }
  if (o.eps.empty()) throw InvalidInput("need --cf or --eps");
  const QuadraticReal eps = number(o.eps, "--eps");
  SturmianParams::validate(eps, QuadraticReal());
  return cf_expand(eps, 64);
}

// Too few coefficients for the requested length is an input problem.
Word characteristic(const CFExpansion& cf, std::size_t n) {
  try {
    return characteristic_prefix(cf, n);
  } catch (const std::out_of_range& e) {
    throw InvalidInput(e.what());
  }
}

ThreeIetParams iet_params(const Options& o) {
  if (o.ells.size() != 1) throw InvalidInput("need exactly one --ell");
  return ThreeIetParams::validate(number(o.eps, "--eps"), number(o.ells.front(), "--ell"),
                                  number(o.x0, "--x0"));
}

Word generate(const Options& o) {
  const std::string& k = o.kind;
  if (k == "sturmian") {
    return sturmian_word(SturmianParams::validate(number(o.eps, "--eps"), number(o.x0, "--x0")),
                         require_n(o));
  }
  if (k == "rotation") {
    return rotation_word(RotationParams::validate(number(o.alpha, "--alpha"),
                                                  number(o.beta, "--beta"), number(o.x0, "--x0")),
                         require_n(o));
  }
  if (k == "3iet") return threeiet_word(iet_params(o), require_n(o));
  if (k == "characteristic") return characteristic(continued_fraction(o), require_n(o));
  if (k == "standard") {
    try {
      return standard_word(continued_fraction(o), o.level);
    } catch (const std::out_of_range& e) {
      throw InvalidInput(e.what());
    }
  }
  throw InvalidInput("unknown word kind '" + k + "'");
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + o.out);
  f << text;
}

void emit(const Options& o, const Json& j) { emit(o, j.dump(2) + "\n"); }

int cmd_generate(const Options& o) {
  emit(o, generate(o).str() + "\n");
  return kExitOk;
}

Word index_input(const Options& o) {
  if (!o.word.empty()) return Word::parse(o.word);
  if (!o.file.empty()) {
    std::ifstream f(o.file, std::ios::binary);
    if (!f) throw InvalidInput("cannot read " + o.file);
    std::stringstream ss;
    ss << f.rdbuf();
    const auto words = read_words(ss.str());
    if (words.size() != 1) throw InvalidInput("expected exactly one word in " + o.file);
    return words.front();
  }
  if (o.kind.empty()) throw InvalidInput("need --word, --file or --kind with generation flags");
  return generate(o);
}

int cmd_index(const Options& o) {
  const Word w = index_input(o);
  if (w.size() == 0) throw InvalidInput("empty word");
  const IndexReport report = o.per_factor > 0 ? word_index_estimate(w, o.per_factor)
                                              : word_index_estimate(w);
  Json j = to_json(report);
  j["index"] = ratio_text(report.index_estimate);
  j["index_decimal"] = ratio_decimal(report.index_estimate);
  int code = kExitOk;
  if (o.oracle) {
    if (w.size() > kBruteForceLimit) {
      throw InvalidInput("--oracle supports at most " + std::to_string(kBruteForceLimit) + " letters");
    }
    const Ratio brute = brute_force_index(w);
    j["oracle"] = {{"index", ratio_text(brute)}, {"agree", brute == report.index_estimate}};
    if (!(brute == report.index_estimate)) code = kExitOracle;
  }
  emit(o, j);
  if (code == kExitOracle) std::cerr << "oracle mismatch\n";
  return code;
}

int cmd_verify(const Options& o) {
  Json j;
  bool passed = false;
  if (o.kind == "abmp") {
    const AbmpReport r = verify_abmp(iet_params(o), require_n(o), o.n_max);
    j = to_json(r);
    passed = r.all_passed();
  } else if (o.kind == "bounds") {
    const BoundReport r = bound_check(iet_params(o), require_n(o));
    j = to_json(r);
    passed = r.passed();
  } else if (o.kind == "blocks") {
    if (o.level < 1) throw InvalidInput("--level must be at least 1");
    const CFExpansion cf = continued_fraction(o);
    const Word prefix = characteristic(cf, require_n(o));
    BlockParse parse;
    try {
      parse = block_decompose(prefix, cf, static_cast<std::size_t>(o.level));
    } catch (const std::out_of_range& e) {
      throw InvalidInput(e.what());
    } catch (const std::invalid_argument& e) {
      j = {{"level", o.level}, {"error", e.what()}, {"passed", false}};
      emit(o, j);
      return kExitVerdict;
    }
    j = to_json(parse);
    passed = parse.reassemble() == prefix.prefix(parse.consumed) &&
             parse.tail < parse.long_block().size();
    j["passed"] = passed;
  } else if (o.kind == "theorem3") {
    const CFExpansion cf = continued_fraction(o);
    IndexFormulaReport r;
    try {
      r = sturmian_index_formula(cf, o.n_max);
    } catch (const std::out_of_range& e) {
      throw InvalidInput(e.what());
    }
    j = to_json(r);
    const std::size_t n = o.n > 0 ? o.n : 10000;
    const IndexReport est = word_index_estimate(characteristic(cf, n));
    const QuadraticReal bound = r.supremum ? *r.supremum : r.truncated_sup;
    const QuadraticReal value =
        QuadraticReal::rational(est.index_estimate.num(), est.index_estimate.den());
    passed = value <= bound;
    j["prefix_length"] = n;
    j["index_estimate"] = ratio_text(est.index_estimate);
    j["index_estimate_decimal"] = ratio_decimal(est.index_estimate);
    j["estimate_within_sup"] = passed;
    j["passed"] = passed;
  } else {
    throw InvalidInput("unknown check '" + o.kind + "'");
  }
  emit(o, j);
  return passed ? kExitOk : kExitVerdict;
}

int cmd_experiment(const Options& o) {
  ExperimentSpec spec;
  try {
    spec.kind = parse_experiment_kind(o.kind);
  } catch (const std::invalid_argument& e) {
    throw InvalidInput(e.what());
  }
  if (o.format != "csv" && o.format != "json") throw InvalidInput("--format must be csv or json");
  std::vector<std::string> eps_texts = o.epsilons;
  if (!o.eps.empty()) eps_texts.insert(eps_texts.begin(), o.eps);
  for (const auto& e : eps_texts) spec.epsilons.push_back(number(e, "--eps"));
  for (const auto& l : o.ells) spec.ells.push_back(number(l, "--ell"));
  spec.x0 = number(o.x0, "--x0");
  spec.lengths = o.lengths;
  if (spec.lengths.empty() && o.n > 0) spec.lengths.push_back(o.n);
  const Table table = run_experiment(spec);
  if (o.format == "csv") {
    emit(o, to_csv(table));
  } else {
    emit(o, to_json(table));
  }
  return kExitOk;
}

void add_generation_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--eps", o.eps, "eps (number literal)");
  cmd->add_option("--ell", o.ells, "ell (number literal)")->delimiter(',');
  cmd->add_option("--x0", o.x0, "starting point (number literal)");
  cmd->add_option("--alpha", o.alpha, "rotation angle");
  cmd->add_option("--beta", o.beta, "rotation partition point");
  cmd->add_option("--cf", o.cf, "continued fraction 0,a1,a2,...");
  cmd->add_option("-N", o.n, "prefix length");
  cmd->add_option("--level", o.level, "standard word level");
  cmd->add_option("--out", o.out, "output path (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Repetitions in Sturmian and 3iet words"};
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("generate", "print a word prefix");
  gen->add_option("kind", o.kind, "sturmian|rotation|3iet|characteristic|standard")->required();
  add_generation_flags(gen, o);

  auto* idx = app.add_subcommand("index", "index estimate of a finite word");
  idx->add_option("--word", o.word, "word given inline");
  idx->add_option("--file", o.file, "file holding one word");
  idx->add_option("--kind", o.kind, "generate the word instead");
  idx->add_flag("--oracle", o.oracle, "cross-check with the brute-force index");
  idx->add_option("--per-factor", o.per_factor, "also report factors up to this length");
  add_generation_flags(idx, o);

  auto* ver = app.add_subcommand("verify", "check a statement on prefixes");
  ver->add_option("check", o.kind, "abmp|bounds|blocks|theorem3")->required();
  ver->add_option("--nmax", o.n_max, "factor length bound (abmp) or N_max (theorem3)");
  add_generation_flags(ver, o);

  auto* exp = app.add_subcommand("experiment", "parameter sweeps");
  exp->add_option("kind", o.kind, "ell-sweep|bounds-grid|index-convergence")->required();
  exp->add_option("--eps-list", o.epsilons, "additional eps values")->delimiter(';');
  exp->add_option("--lengths", o.lengths, "prefix lengths")->delimiter(',');
  exp->add_option("--format", o.format, "csv|json");
  add_generation_flags(exp, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*gen) return cmd_generate(o);
    if (*idx) return cmd_index(o);
    if (*ver) return cmd_verify(o);
    if (*exp) return cmd_experiment(o);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}
