#include "sigmine/logcomb.hpp"

#include <cmath>
#include <limits>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace sigmine {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

std::shared_ptr<const std::vector<double>> grow_lnfact(std::int64_t need) {
  static std::mutex mu;
  static std::shared_ptr<const std::vector<double>> table;
  std::lock_guard<std::mutex> lock(mu);
  if (table && std::int64_t(table->size()) > need) return table;
  std::size_t new_size = 4096;
  while (std::int64_t(new_size) <= need) new_size *= 2;
  auto fresh = std::make_shared<std::vector<double>>();
  fresh->reserve(new_size);
  if (table) *fresh = *table;
  if (fresh->empty()) fresh->push_back(0.0);  // ln 0! = 0
  for (std::size_t k = fresh->size(); k < new_size; ++k)
    fresh->push_back(fresh->back() + std::log(double(k)));
  table = fresh;
  return table;
}

}  // namespace

double ln_factorial(std::int64_t k) {
  if (k < 0) throw std::domain_error("ln_factorial of negative value");
  thread_local std::shared_ptr<const std::vector<double>> local;
  if (!local || k >= std::int64_t(local->size())) local = grow_lnfact(k);
  return (*local)[std::size_t(k)];
}

double ln_choose(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return kNegInf;
  return ln_factorial(n) - ln_factorial(k) - ln_factorial(n - k);
}

double log_sum_exp(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  if (a < b) std::swap(a, b);
  return a + std::log1p(std::exp(b - a));
}

void LogSum::add(double log_term) { total_ = log_sum_exp(total_, log_term); }

double log_erfc(double x) {
  if (x < 25.0) {
    double v = std::erfc(x);
    if (v > 0.0) return std::log(v);
  }
  // erfc(x) ~ exp(-x^2)/(x sqrt(pi)) (1 - 1/(2x^2) + 3/(4x^4) - ...)
  const double x2 = x * x;
  double series = 1.0 - 0.5 / x2 + 0.75 / (x2 * x2) - 1.875 / (x2 * x2 * x2);
  return -x2 - std::log(x) - 0.5 * std::log(M_PI) + std::log(series);
}

double chi2_tail_1df(double statistic) {
  if (statistic <= 0.0) return 1.0;
  return std::erfc(std::sqrt(statistic / 2.0));
}

double log_chi2_tail_1df(double statistic) {
  if (statistic <= 0.0) return 0.0;
  return log_erfc(std::sqrt(statistic / 2.0));
}

double normal_upper_tail(double z) { return 0.5 * std::erfc(z / M_SQRT2); }

double log_normal_upper_tail(double z) {
  return log_erfc(z / M_SQRT2) - M_LN2;
}

}  // namespace sigmine
