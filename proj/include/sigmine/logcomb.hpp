#pragma once

#include <cstdint>

namespace sigmine {

// ln(k!) from a process-wide table, grown on demand and shared read-only.
double ln_factorial(std::int64_t k);

// ln C(n, k); -inf when the pair is infeasible.
double ln_choose(std::int64_t n, std::int64_t k);

// log(exp(a) + exp(b)), tolerant of -inf.
double log_sum_exp(double a, double b);

// Incremental log-domain accumulator for tail sums.
class LogSum {
 public:
  void add(double log_term);
  double value() const { return total_; }

 private:
  double total_ = -1.0 / 0.0;
};

// ln erfc(x), with an asymptotic branch where erfc underflows.
double log_erfc(double x);

// Upper tail of the chi^2 distribution with one degree of freedom.
double chi2_tail_1df(double statistic);
double log_chi2_tail_1df(double statistic);

// Upper tail P(Z >= z) of the standard normal.
double normal_upper_tail(double z);
double log_normal_upper_tail(double z);

}  // namespace sigmine
