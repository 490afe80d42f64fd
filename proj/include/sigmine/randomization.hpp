#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "sigmine/dataset.hpp"

namespace sigmine {

enum class PermutationKind { column_permutation, swap_randomization };

PermutationKind permutation_kind_from_string(std::string_view s);
std::string_view to_string(PermutationKind k);

// column_permutation fixes column margins only; swap_randomization fixes both
// row and column margins via a Markov chain of 2x2 submatrix swaps.
struct PermutationScheme {
  PermutationKind kind = PermutationKind::column_permutation;
  std::uint64_t seed = 0;
  std::int64_t b = 100;
  std::int64_t swap_steps = 0;  // 0: default of 10 x (number of ones)

  bool fixes_row_margins() const {
    return kind == PermutationKind::swap_randomization;
  }
};

struct RandomizedDatasets {
  std::vector<Dataset> datasets;
  bool degenerate = false;  // swap chain had no feasible swap; copies returned
};

// Generates scheme.b datasets. Each dataset is produced from its own seed
// derived from (scheme.seed, index), so results are identical for any worker
// count. Rejected swap proposals count as steps (lazy chain).
RandomizedDatasets randomize(const Dataset& d, const PermutationScheme& scheme,
                             int workers = 1);

struct EmpiricalP {
  double t0;
  std::int64_t exceed_count;  // randomized statistics >= t0 (ties count)
  std::int64_t b;
  double p_em;  // (exceed_count + 1) / (b + 1)
};

EmpiricalP empirical_p(double t0, std::span<const double> stats);

enum class MinPMode { single_step, step_down };

struct MinPResult {
  std::vector<double> adjusted;  // aligned with raw_ps
  bool resolution_warning;       // 1/(b+1) above the requested alpha
};

// Permutation-based minP adjustment. raw_p_on(j, dataset) must return the raw
// p-value of hypothesis j evaluated on a randomized dataset. Adjusted values
// are clipped to be no smaller than the raw p-values, which keeps them
// monotone in the raw ordering.
MinPResult minp_adjust(
    std::span<const double> raw_ps, const Dataset& d,
    const PermutationScheme& scheme,
    const std::function<double(std::size_t, const Dataset&)>& raw_p_on,
    MinPMode mode, std::optional<double> alpha = std::nullopt,
    int workers = 1);

}  // namespace sigmine
