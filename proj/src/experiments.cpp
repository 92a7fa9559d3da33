// src/experiments.cpp
#include "powerlab/experiments.hpp"

#include <functional>
#include <future>
#include <stdexcept>

#include "powerlab/repetitions.hpp"
#include "powerlab/sturmian.hpp"
#include "powerlab/threeiet.hpp"

namespace powerlab {

ExperimentKind parse_experiment_kind(std::string_view name) {
  if (name == "ell-sweep") return ExperimentKind::EllSweep;
  if (name == "bounds-grid") return ExperimentKind::BoundsGrid;
  if (name == "index-convergence") return ExperimentKind::IndexConvergence;
  throw std::invalid_argument("unknown experiment '" + std::string(name) + "'");
}

namespace {

std::size_t single_length(const ExperimentSpec& spec) {
  if (spec.lengths.size() != 1) throw ParameterError("this experiment takes exactly one prefix length");
  if (spec.lengths.front() == 0) throw ParameterError("prefix length must be positive");
  return spec.lengths.front();
}

Json ell_sweep_row(const ThreeIetParams& params, std::size_t n, std::uint64_t k) {
  const Word u = threeiet_word(params, n);
  const std::size_t b_count = u.count(kLetterB);
  const IndexReport iu = word_index_estimate(u);
  const Word image = phi_image(u, 0);
  const IndexReport iphi = word_index_estimate(image);
  const Ratio freq(static_cast<std::int64_t>(b_count), static_cast<std::int64_t>(n));
  Json row;
  row["eps"] = params.epsilon().to_string();
  row["ell"] = params.ell().to_string();
  row["ell_decimal"] = params.ell().to_decimal(15);
  row["prefix_length"] = n;
  row["b_count"] = b_count;
  row["b_frequency"] = ratio_text(freq);
  row["b_frequency_decimal"] = ratio_decimal(freq);
  row["K"] = k;
  row["index_u"] = ratio_text(iu.index_estimate);
  row["index_u_decimal"] = ratio_decimal(iu.index_estimate);
  row["max_power_u"] = iu.max_integer_power.exponent;
  row["u_reaches_k_plus_1"] =
      iu.index_estimate >= Ratio(static_cast<std::int64_t>(k) + 1, 1);
  row["phi0_length"] = image.size();
  row["index_phi0"] = ratio_text(iphi.index_estimate);
  row["index_phi0_decimal"] = ratio_decimal(iphi.index_estimate);
  return row;
}

Json bounds_row(const ThreeIetParams& params, std::size_t n) {
  const BoundReport b = bound_check(params, n);
  Json row;
  row["eps"] = params.epsilon().to_string();
  row["eps_decimal"] = params.epsilon().to_decimal(15);
  row["ell"] = params.ell().to_string();
  row["ell_decimal"] = params.ell().to_decimal(15);
  row["x0"] = params.x0().to_string();
  const Json report = to_json(b);
  for (const auto& [key, value] : report.items()) row[key] = value;
  return row;
}

Json convergence_row(const std::string& source, const Word& word, std::size_t n) {
  const IndexReport r = word_index_estimate(word.prefix(n));
  Json row;
  row["word"] = source;
  row["prefix_length"] = n;
  row["index_estimate"] = ratio_text(r.index_estimate);
  row["index_estimate_decimal"] = ratio_decimal(r.index_estimate);
  row["max_integer_power"] = r.max_integer_power.exponent;
  row["witness_start"] = r.witness.start;
  row["witness_period"] = r.witness.period;
  row["witness_length"] = r.witness.length;
  return row;
}

Table run_all(std::vector<std::function<Json()>> jobs) {
  std::vector<std::future<Json>> pending;
  pending.reserve(jobs.size());
  for (auto& job : jobs) pending.push_back(std::async(std::launch::async, std::move(job)));
  Table table;
  for (auto& f : pending) table.rows.push_back(f.get());
  return table;
}

}  // namespace

Table run_experiment(const ExperimentSpec& spec) {
  std::vector<std::function<Json()>> jobs;
  switch (spec.kind) {
    case ExperimentKind::EllSweep: {
      if (spec.epsilons.size() != 1) throw ParameterError("ell-sweep takes exactly one eps");
      const std::size_t n = single_length(spec);
      std::vector<ThreeIetParams> points;
      for (const auto& ell : spec.ells) {
        points.push_back(ThreeIetParams::validate(spec.epsilons.front(), ell, spec.x0));
      }
      if (points.empty()) throw ParameterError("ell-sweep needs at least one ell");
      const std::uint64_t k = max_partial_quotient(spec.epsilons.front());
      for (const auto& p : points) jobs.emplace_back([p, n, k] { return ell_sweep_row(p, n, k); });
      break;
    }
    case ExperimentKind::BoundsGrid: {
      const std::size_t n = single_length(spec);
      std::vector<ThreeIetParams> points;
      for (const auto& eps : spec.epsilons) {
        for (const auto& ell : spec.ells) points.push_back(ThreeIetParams::validate(eps, ell, spec.x0));
      }
      if (points.empty()) throw ParameterError("bounds-grid needs at least one (eps, ell) pair");
      for (const auto& eps : spec.epsilons) max_partial_quotient(eps);
      for (const auto& p : points) jobs.emplace_back([p, n] { return bounds_row(p, n); });
      break;
    }
    case ExperimentKind::IndexConvergence: {
      if (spec.epsilons.size() != 1) throw ParameterError("index-convergence takes exactly one eps");
      if (spec.ells.size() > 1) throw ParameterError("index-convergence takes at most one ell");
      if (spec.lengths.empty()) throw ParameterError("index-convergence needs prefix lengths");
      std::size_t longest = 0;
      for (std::size_t n : spec.lengths) {
        if (n == 0) throw ParameterError("prefix length must be positive");
        longest = std::max(longest, n);
      }
      Word word;
      std::string source;
      if (spec.ells.empty()) {
        SturmianParams::validate(spec.epsilons.front(), 0);
        word = characteristic_prefix(cf_expand(spec.epsilons.front(), 1), longest);
        source = "characteristic";
      } else {
        word = threeiet_word(ThreeIetParams::validate(spec.epsilons.front(), spec.ells.front(), spec.x0),
                             longest);
        source = "3iet";
      }
      for (std::size_t n : spec.lengths) {
        jobs.emplace_back([&word, source, n] { return convergence_row(source, word, n); });
      }
      return run_all(std::move(jobs));
    }
  }
  return run_all(std::move(jobs));
}

std::string to_csv(const Table& table) {
  std::string out;
  if (table.rows.empty()) return out;
  bool first = true;
  for (const auto& [key, value] : table.rows.front().items()) {
    if (!first) out.push_back(',');
    out += key;
    first = false;
  }
  out.push_back('\n');
  for (const Json& row : table.rows) {
    first = true;
    for (const auto& [key, value] : row.items()) {
      if (!first) out.push_back(',');
      out += value.is_string() ? value.get<std::string>() : value.dump();
      first = false;
    }
    out.push_back('\n');
  }
  return out;
}

Json to_json(const Table& table) {
  Json j;
  j["rows"] = table.rows;
  return j;
}

}  // namespace powerlab
