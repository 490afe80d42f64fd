#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sigmine/core.hpp"
#include "sigmine/dataset.hpp"

namespace sigmine {

// Attribute set with its full 2^m truth-combination table. Cell index has
// bit i set when items[i] = 1; the all-ones cell equals freq.
struct SetPattern {
  std::vector<AttrId> items;
  std::int64_t n = 0;
  std::int64_t freq = 0;
  std::vector<std::int64_t> cells;

  std::int64_t item_freq(std::size_t i) const;  // singleton margin of items[i]
};

SetPattern make_set_pattern(const Dataset& d, std::span<const AttrId> items,
                            int max_width = 12);

struct ItemsetChi2 {
  double statistic;
  double p_value;  // chi^2(1) upper tail, the cited correlation-rule convention
};

// Correlation-rule chi^2 over all 2^m cells against the product of the
// singleton margins. Requires every singleton margin strictly inside (0, n).
ItemsetChi2 itemset_chi2(const SetPattern& s);

// Binomial tail of fr(X) over n rows with success probability prod P(A_i);
// tests the weaker event-independence null.
struct ItemsetBinom {
  double log_p;
  double p_value;
};
ItemsetBinom itemset_binom_p(const SetPattern& s);

struct BipartitionResult {
  bool productive;
  double worst_p;
  std::vector<AttrId> worst_part;  // the Q side of the worst bipartition
};

// Fisher positive-dependence test of every bipartition (Q, X \ Q); productive
// when all 2^(m-1)-1 of them reject at alpha.
BipartitionResult bipartition_productive(const Dataset& d,
                                         std::span<const AttrId> x,
                                         double alpha, int max_width = 12);

struct RedundancyResult {
  bool nonredundant;
  std::vector<AttrId> witness_y;  // fr(witness_y) == fr(witness_z), z < y
  std::vector<AttrId> witness_z;
};

// Redundant when some proper subset Y has a proper subset Z of equal
// frequency (fr of the empty set is n).
RedundancyResult is_nonredundant(const Dataset& d, std::span<const AttrId> x);

enum class IndependentProductivity { yes, no, undecidable };

// Re-runs the bipartition productivity test on the rows not covered by any
// superset remainder Y \ X ("covered" = the row contains all of Y \ X).
// Supersets are expected to be productive and nonredundant.
IndependentProductivity independently_productive(
    const Dataset& d, std::span<const AttrId> x,
    std::span<const std::vector<AttrId>> supersets, double alpha,
    int max_width = 12);

struct SelfSufficiencyVerdict {
  SetPattern pattern;
  double alpha_used;
  BipartitionResult productivity;
  RedundancyResult redundancy;
  IndependentProductivity independent;
  bool self_sufficient;  // productive, nonredundant, independently productive
};

SelfSufficiencyVerdict evaluate_self_sufficiency(
    const Dataset& d, std::span<const AttrId> x,
    std::span<const std::vector<AttrId>> supersets, double alpha,
    int max_width = 12);

}  // namespace sigmine
