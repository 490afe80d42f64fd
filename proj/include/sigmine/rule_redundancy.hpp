#pragma once

#include <span>
#include <vector>

#include "sigmine/contingency.hpp"
#include "sigmine/core.hpp"
#include "sigmine/dataset.hpp"

namespace sigmine {

// Productivity of a child rule YQ -> A over a parent Y -> A is a conditional
// independence test between Q and A. The forward test conditions on the rows
// where Y holds; the backward test conditions on the rows where YQ fails and
// checks the improvement of !Y -> !A over !(YQ) -> !A.
//
// Both reduce to Fisher's exact test on a derived 2x2 table, so the tables
// are exposed for reuse.

struct ConditionalTables {
  Table2x2 forward;   // within the Y stratum: "X" = Q, "A" = A
  Table2x2 backward;  // within the !(YQ) stratum: "X" = !Y, "A" = !A
};

// Counts sufficient to build both conditional tables. The consequent column
// is pre-collapsed by `sign` (fr_a etc. refer to the signed consequent).
struct ImprovementCounts {
  std::int64_t n;
  std::int64_t fr_y;    // parent antecedent support
  std::int64_t fr_x;    // child antecedent support, X = Y + Q
  std::int64_t fr_a;    // signed consequent
  std::int64_t fr_ya;
  std::int64_t fr_xa;
};

ImprovementCounts improvement_counts(const Dataset& d,
                                     std::span<const AttrId> y,
                                     std::span<const AttrId> q, AttrId a,
                                     Sign sign);
ConditionalTables improvement_tables(const ImprovementCounts& c);

// Exact conditional tests; p-values of the Fisher tails of the two tables.
double productivity_fisher(const Dataset& d, std::span<const AttrId> y,
                           std::span<const AttrId> q, AttrId a, Sign sign);
double negated_productivity_fisher(const Dataset& d, std::span<const AttrId> y,
                                   std::span<const AttrId> q, AttrId a,
                                   Sign sign);

// Conditional chi^2 statistics of the same two tables.
double productivity_chi2(const Dataset& d, std::span<const AttrId> y,
                         std::span<const AttrId> q, AttrId a, Sign sign);
double negated_productivity_chi2(const Dataset& d, std::span<const AttrId> y,
                                 std::span<const AttrId> q, AttrId a,
                                 Sign sign);

enum class Verdict { productive, superfluous, undecidable };

struct ImprovementResult {
  std::vector<AttrId> parent;  // Y
  double p_forward;
  double p_backward;
  Verdict verdict;
};

// Tests a child rule against its generalizations. By default only immediate
// generalizations (one antecedent attribute removed) are tested; all_subsets
// extends to every proper nonempty subset.
//
// value_based: superfluous when the child does not improve the parent's
// precision or the improvement is not significant at alpha.
// variable_based: superfluous when the forward improvement is no more
// significant than the backward one (ties count as superfluous).
std::vector<ImprovementResult> judge_superfluous(
    const Dataset& d, std::span<const AttrId> child, AttrId a, Sign sign,
    Interpretation interpretation, double alpha, bool all_subsets = false);

bool any_superfluous(const std::vector<ImprovementResult>& results);

// Kingfisher shortcut: a rule is superfluous when its Fisher p is poorer
// (larger) than that of one of its generalizations.
bool kingfisher_superfluous(const Dataset& d, std::span<const AttrId> child,
                            AttrId a, Sign sign, bool all_subsets = false);

}  // namespace sigmine
