#include "sigmine/measures.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace sigmine {

namespace {

// p * ln(p / q) with the 0 log 0 convention.
double xlogx_ratio(double p, double q) {
  if (p <= 0.0) return 0.0;
  return p * std::log(p / q);
}

}  // namespace

double leverage(const Table2x2& t) {
  t.require_valid();
  return t.p_xa() - t.p_x() * t.p_a();
}

double lift(const Table2x2& t) {
  t.require_valid();
  if (t.n_x == 0 || t.n_a == 0)
    throw std::domain_error("lift undefined for zero margin");
  return double(t.n) * double(t.n_xa) / (double(t.n_x) * double(t.n_a));
}

double precision(const Table2x2& t) {
  t.require_valid();
  if (t.n_x == 0) throw std::domain_error("precision undefined for fr(X)=0");
  return double(t.n_xa) / double(t.n_x);
}

MeasureValue odds_ratio(const Table2x2& t) {
  t.require_valid();
  const double num = double(t.n_xa) * double(t.n_nxna());
  const double den = double(t.n_xna()) * double(t.n_nxa());
  if (den == 0.0)
    return {std::numeric_limits<double>::infinity(), false};
  return {num / den, true};
}

double chi2_2x2(const Table2x2& t, bool continuity) {
  t.require_valid();
  if (t.n_x == 0 || t.n_a == 0 || t.n_x == t.n || t.n_a == t.n)
    throw std::domain_error("chi2 undefined for degenerate margins");
  double d = std::abs(leverage(t));
  if (continuity) d = std::max(0.0, d - 0.5 / double(t.n));
  const double px = t.p_x(), pa = t.p_a();
  return double(t.n) * d * d / (px * (1 - px) * pa * (1 - pa));
}

double mutual_information_2x2(const Table2x2& t) {
  t.require_valid();
  const double n = double(t.n);
  double mi = xlogx_ratio(t.n_xa / n, t.p_x() * t.p_a()) +
              xlogx_ratio(t.n_xna() / n, t.p_x() * (1 - t.p_a())) +
              xlogx_ratio(t.n_nxa() / n, (1 - t.p_x()) * t.p_a()) +
              xlogx_ratio(t.n_nxna() / n, (1 - t.p_x()) * (1 - t.p_a()));
  return std::max(0.0, mi);
}

double j_measure(const Table2x2& t) {
  t.require_valid();
  if (t.n_x == 0) throw std::domain_error("J-measure undefined for fr(X)=0");
  const double n = double(t.n);
  double j = xlogx_ratio(t.n_xa / n, t.p_x() * t.p_a()) +
             xlogx_ratio(t.n_xna() / n, t.p_x() * (1 - t.p_a()));
  return std::max(0.0, j);
}

}  // namespace sigmine
