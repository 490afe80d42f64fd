#pragma once

#include "sigmine/contingency.hpp"

namespace sigmine {

// Descriptive strength-of-dependence measures over a 2x2 table. All
// logarithms are natural, so 2n*MI is the G statistic directly, and
// 0*log 0 := 0 throughout.

struct MeasureValue {
  double value = 0.0;
  bool defined = true;  // false for the degenerate odds ratio
};

// P(XA) - P(X)P(A); covariance of the two indicators.
double leverage(const Table2x2& t);

// P(XA) / (P(X)P(A)); requires nonzero margins.
double lift(const Table2x2& t);

// P(A|X); requires fr(X) > 0.
double precision(const Table2x2& t);

// Undefined (flagged, +inf sentinel) when an off-diagonal cell is zero.
MeasureValue odds_ratio(const Table2x2& t);

// n * leverage^2 / (P(X)P(!X)P(A)P(!A)). The continuity correction replaces
// |leverage| by max(0, |leverage| - 0.5/n) before squaring.
double chi2_2x2(const Table2x2& t, bool continuity = false);

// Mutual information in nats.
double mutual_information_2x2(const Table2x2& t);

// The X-part of mutual information (partial evaluator), in nats.
double j_measure(const Table2x2& t);

}  // namespace sigmine
