// include/powerlab/experiments.hpp
//
// Parameter sweeps producing deterministic tables:
//   ell-sweep          one row per ell: B frequency, index of u and of Phi_0(u)
//   bounds-grid        one row per (eps, ell): the bound report
//   index-convergence  one row per prefix length: index estimate growth
#ifndef POWERLAB_EXPERIMENTS_HPP
#define POWERLAB_EXPERIMENTS_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "powerlab/exactreal.hpp"
#include "powerlab/json_io.hpp"

namespace powerlab {

enum class ExperimentKind { EllSweep, BoundsGrid, IndexConvergence };

ExperimentKind parse_experiment_kind(std::string_view name);

struct ExperimentSpec {
  ExperimentKind kind = ExperimentKind::EllSweep;
  std::vector<QuadraticReal> epsilons;
  std::vector<QuadraticReal> ells;  // empty for index-convergence on the characteristic word
  QuadraticReal x0;
  std::vector<std::size_t> lengths;  // one entry except for index-convergence
};

/// Rows are JSON objects with identical key order. Every parameter point is
/// validated before any computation; grid points run concurrently and are
/// assembled in declaration order.
struct Table {
  std::vector<Json> rows;
};

Table run_experiment(const ExperimentSpec& spec);

/// Header row plus one comma-separated line per row.
std::string to_csv(const Table& table);
/// {"rows": [...]}
Json to_json(const Table& table);

}  // namespace powerlab

#endif  // POWERLAB_EXPERIMENTS_HPP
