#pragma once

#include <cstdint>
#include <string_view>

#include "sigmine/contingency.hpp"
#include "sigmine/core.hpp"

namespace sigmine {

enum class TestId {
  fisher_pos,
  fisher_neg,
  fisher_p0,
  binom_partial,
  z_partial,
  binom_complete,
  z_complete,
  multinomial_value,
  double_binom_value,
  chi2_test,
  mi_test,
};

std::string_view to_string(TestId id);
TestId test_id_from_string(std::string_view s);

// log_p is the authoritative representation; p_value = exp(log_p).
// statistic carries the z / chi^2 / G value where one exists (NaN otherwise).
struct TestResult {
  TestId id;
  double log_p;
  double p_value;
  double statistic;
};

// Fisher's exact test (hypergeometric tail, all margins fixed). The positive
// direction sums tables with fr(XA)' >= fr(XA), the negative direction those
// with fr(XA)' <= fr(XA).
TestResult fisher_p(const Table2x2& t, Direction dir = Direction::positive);

// Point probability of the observed table (first and largest term of the
// positive Fisher tail).
TestResult fisher_p0(const Table2x2& t);

// Binomial tail over the fr(X) rows where the antecedent holds, with
// P(A) at its observed value. Partial evaluator; not exchangeable.
TestResult binom_partial_p(const Table2x2& t,
                           Direction dir = Direction::positive);

// z-score of the partial binomial; signed, positive for positive dependence.
TestResult z_partial(const Table2x2& t);

// Binomial tail of fr(XA) over all n rows with success probability
// P(X)P(A). Complete evaluator; exchangeable.
TestResult binom_complete_p(const Table2x2& t,
                            Direction dir = Direction::positive);

// z-score of the complete binomial; the continuity variant shrinks the
// deviation |fr(XA) - nP(X)P(A)| by 0.5.
TestResult z_complete(const Table2x2& t, bool continuity = false);

// Value-based complete evaluation under the multinomial model: sum of
// Eq.-style triple-sum probabilities over all tables with lift >= observed
// and fr(XA)' >= fr(XA), parameters at their MLEs. O(n^3) terms.
TestResult multinomial_value_p(const Table2x2& t, std::int64_t cap = 200);

// Same under the double binomial model (fr(X) fixed). O(n^2) terms.
TestResult double_binom_value_p(const Table2x2& t, std::int64_t cap = 2000);

// Asymptotic chi^2(1) test of the 2x2 chi^2 statistic. The chi^2 tail is
// inherently two-sided for a 2x2 table; the reported one-sided p is half the
// tail when the observed leverage has the tested sign and 1 - half otherwise.
TestResult chi2_p(const Table2x2& t, Direction dir = Direction::positive);

// Same convention for the G statistic 2n*MI (statistic field carries 2n*MI).
TestResult mi_p(const Table2x2& t, Direction dir = Direction::positive);

// Two-sided chi^2(1) upper tail of a statistic (shared by chi2_p / mi_p).
double chi2_statistic_tail(double statistic);

}  // namespace sigmine
