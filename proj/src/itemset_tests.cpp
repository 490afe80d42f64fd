#include "sigmine/itemset_tests.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sigmine/exact_tests.hpp"
#include "sigmine/logcomb.hpp"

namespace sigmine {

std::int64_t SetPattern::item_freq(std::size_t i) const {
  std::int64_t f = 0;
  for (std::size_t mask = 0; mask < cells.size(); ++mask)
    if ((mask >> i) & 1) f += cells[mask];
  return f;
}

SetPattern make_set_pattern(const Dataset& d, std::span<const AttrId> items,
                            int max_width) {
  SetPattern s;
  s.items.assign(items.begin(), items.end());
  s.n = std::int64_t(d.n_rows());
  s.cells = extract_cells(d, items, max_width);
  s.freq = s.cells.back();
  return s;
}

ItemsetChi2 itemset_chi2(const SetPattern& s) {
  const std::size_t m = s.items.size();
  const double n = double(s.n);
  std::vector<double> p1(m);
  for (std::size_t i = 0; i < m; ++i) {
    const std::int64_t f = s.item_freq(i);
    if (f == 0 || f == s.n)
      throw std::domain_error("itemset chi2 undefined: degenerate margin");
    p1[i] = double(f) / n;
  }
  double stat = 0.0;
  for (std::size_t mask = 0; mask < s.cells.size(); ++mask) {
    double expected = 1.0;
    for (std::size_t i = 0; i < m; ++i)
      expected *= ((mask >> i) & 1) ? p1[i] : 1.0 - p1[i];
    const double diff = double(s.cells[mask]) / n - expected;
    stat += n * diff * diff / expected;
  }
  return {stat, chi2_statistic_tail(stat)};
}

ItemsetBinom itemset_binom_p(const SetPattern& s) {
  const std::size_t m = s.items.size();
  double q = 1.0;
  for (std::size_t i = 0; i < m; ++i) {
    const std::int64_t f = s.item_freq(i);
    if (f == 0)
      throw std::domain_error("itemset binomial undefined: zero margin");
    q *= double(f) / double(s.n);
  }
  if (s.freq == 0 || q >= 1.0) return {0.0, 1.0};
  const double lq = std::log(q), l1q = std::log1p(-q);
  LogSum sum;
  for (std::int64_t j = s.freq; j <= s.n; ++j) {
    double lt = ln_choose(s.n, j) + double(j) * lq;
    if (s.n - j > 0) lt += double(s.n - j) * l1q;
    sum.add(lt);
  }
  const double lp = std::min(0.0, sum.value());
  return {lp, std::exp(lp)};
}

BipartitionResult bipartition_productive(const Dataset& d,
                                         std::span<const AttrId> x,
                                         double alpha, int max_width) {
  const std::size_t m = x.size();
  if (m < 2) throw std::invalid_argument("bipartition test needs |X| >= 2");
  if (int(m) > max_width)
    throw capacity_error("itemset wider than bipartition cap");
  const std::int64_t n = std::int64_t(d.n_rows());
  const std::int64_t fr_x = d.support(x);
  BipartitionResult res{true, 0.0, {}};
  // one side of each bipartition, identified by masks with bit 0 clear
  for (std::size_t mask = 1; mask + 1 < (std::size_t(1) << m); ++mask) {
    if (mask & 1) continue;  // enumerate each unordered split once
    std::vector<AttrId> q, rest;
    for (std::size_t i = 0; i < m; ++i)
      ((mask >> i) & 1 ? q : rest).push_back(x[i]);
    Table2x2 t{n, d.support(q), d.support(rest), fr_x};
    const double p = fisher_p(t).p_value;
    if (p > res.worst_p) {
      res.worst_p = p;
      res.worst_part = q;
    }
    if (p > alpha) res.productive = false;
  }
  return res;
}

namespace {

// Frequencies of all subsets of x (index = bitmask over x's positions).
std::vector<std::int64_t> subset_freqs(const Dataset& d,
                                       std::span<const AttrId> x,
                                       int max_width) {
  const auto cells = extract_cells(d, x, max_width);
  const std::size_t size = cells.size();
  // superset-sum over the cell table: freq(Y) = sum of cells with Y's bits set
  std::vector<std::int64_t> freq(cells.begin(), cells.end());
  for (std::size_t bit = 0; bit < x.size(); ++bit)
    for (std::size_t mask = 0; mask < size; ++mask)
      if (!((mask >> bit) & 1)) freq[mask] += freq[mask | (std::size_t(1) << bit)];
  return freq;
}

std::vector<AttrId> mask_to_items(std::span<const AttrId> x,
                                  std::size_t mask) {
  std::vector<AttrId> out;
  for (std::size_t i = 0; i < x.size(); ++i)
    if ((mask >> i) & 1) out.push_back(x[i]);
  return out;
}

}  // namespace

RedundancyResult is_nonredundant(const Dataset& d, std::span<const AttrId> x) {
  const std::size_t m = x.size();
  if (m < 2) throw std::invalid_argument("redundancy test needs |X| >= 2");
  const auto freq = subset_freqs(d, x, 12);
  const std::size_t full = (std::size_t(1) << m) - 1;
  // enough to compare each proper subset Y against Y minus one item
  for (std::size_t y = 1; y < full; ++y) {
    for (std::size_t i = 0; i < m; ++i) {
      if (!((y >> i) & 1)) continue;
      const std::size_t z = y & ~(std::size_t(1) << i);
      if (freq[y] == freq[z])
        return {false, mask_to_items(x, y), mask_to_items(x, z)};
    }
  }
  return {true, {}, {}};
}

IndependentProductivity independently_productive(
    const Dataset& d, std::span<const AttrId> x,
    std::span<const std::vector<AttrId>> supersets, double alpha,
    int max_width) {
  RowSet covered(d.n_rows());
  bool any = false;
  for (const auto& sup : supersets) {
    std::vector<AttrId> diff;
    for (AttrId a : sup)
      if (std::find(x.begin(), x.end(), a) == x.end()) diff.push_back(a);
    if (diff.empty()) continue;
    any = true;
    RowSet r = d.rows_of(diff);
    for (std::size_t i = 0; i < d.n_rows(); ++i)
      if (r.test(i)) covered.set(i);
  }
  if (!any) return IndependentProductivity::yes;
  RowSet keep = RowSet::full(d.n_rows());
  keep.subtract(covered);
  if (keep.count() == 0) return IndependentProductivity::undecidable;
  Dataset restricted = restrict_rows(d, keep);
  return bipartition_productive(restricted, x, alpha, max_width).productive
             ? IndependentProductivity::yes
             : IndependentProductivity::no;
}

SelfSufficiencyVerdict evaluate_self_sufficiency(
    const Dataset& d, std::span<const AttrId> x,
    std::span<const std::vector<AttrId>> supersets, double alpha,
    int max_width) {
  SelfSufficiencyVerdict v{make_set_pattern(d, x, max_width),
                           alpha,
                           bipartition_productive(d, x, alpha, max_width),
                           is_nonredundant(d, x),
                           independently_productive(d, x, supersets, alpha,
                                                    max_width),
                           false};
  v.self_sufficient = v.productivity.productive && v.redundancy.nonredundant &&
                      v.independent == IndependentProductivity::yes;
  return v;
}

}  // namespace sigmine
