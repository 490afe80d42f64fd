#include "sigmine/rule_redundancy.hpp"

#include <algorithm>
#include <stdexcept>

#include "sigmine/exact_tests.hpp"
#include "sigmine/measures.hpp"

namespace sigmine {

namespace {

std::vector<AttrId> concat(std::span<const AttrId> a,
                           std::span<const AttrId> b) {
  std::vector<AttrId> out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

ImprovementCounts improvement_counts(const Dataset& d,
                                     std::span<const AttrId> y,
                                     std::span<const AttrId> q, AttrId a,
                                     Sign sign) {
  if (q.empty()) throw std::invalid_argument("empty extension Q");
  for (AttrId qi : q) {
    if (qi == a) throw std::invalid_argument("consequent inside antecedent");
    if (std::find(y.begin(), y.end(), qi) != y.end())
      throw std::invalid_argument("Q overlaps Y");
  }
  for (AttrId yi : y)
    if (yi == a) throw std::invalid_argument("consequent inside antecedent");

  const auto x = concat(y, q);
  RowSet yr = d.rows_of(y);
  RowSet xr = yr & d.rows_of(q);
  const RowSet& ar = d.col_rows(a);
  const std::int64_t n = std::int64_t(d.n_rows());
  std::int64_t fr_a = d.col_freq(a);
  std::int64_t fr_ya = intersection_count(yr, ar);
  std::int64_t fr_xa = intersection_count(xr, ar);
  const std::int64_t fr_y = yr.count();
  const std::int64_t fr_x = xr.count();
  if (sign == Sign::negated) {
    fr_a = n - fr_a;
    fr_ya = fr_y - fr_ya;
    fr_xa = fr_x - fr_xa;
  }
  return {n, fr_y, fr_x, fr_a, fr_ya, fr_xa};
}

ConditionalTables improvement_tables(const ImprovementCounts& c) {
  ConditionalTables t;
  t.forward = {c.fr_y, c.fr_x, c.fr_ya, c.fr_xa};
  t.backward = {c.n - c.fr_x, c.n - c.fr_y, c.n - c.fr_a - c.fr_x + c.fr_xa,
                c.n - c.fr_y - c.fr_a + c.fr_ya};
  return t;
}

double productivity_fisher(const Dataset& d, std::span<const AttrId> y,
                           std::span<const AttrId> q, AttrId a, Sign sign) {
  const auto c = improvement_counts(d, y, q, a, sign);
  if (c.fr_y == 0)
    throw std::domain_error("productivity undefined: fr(Y)=0");
  return fisher_p(improvement_tables(c).forward).p_value;
}

double negated_productivity_fisher(const Dataset& d, std::span<const AttrId> y,
                                   std::span<const AttrId> q, AttrId a,
                                   Sign sign) {
  const auto c = improvement_counts(d, y, q, a, sign);
  if (c.n - c.fr_x == 0)
    throw std::domain_error("negated productivity undefined: fr(!(YQ))=0");
  return fisher_p(improvement_tables(c).backward).p_value;
}

double productivity_chi2(const Dataset& d, std::span<const AttrId> y,
                         std::span<const AttrId> q, AttrId a, Sign sign) {
  const auto c = improvement_counts(d, y, q, a, sign);
  if (c.fr_y == 0)
    throw std::domain_error("productivity undefined: fr(Y)=0");
  return chi2_2x2(improvement_tables(c).forward);
}

double negated_productivity_chi2(const Dataset& d, std::span<const AttrId> y,
                                 std::span<const AttrId> q, AttrId a,
                                 Sign sign) {
  const auto c = improvement_counts(d, y, q, a, sign);
  if (c.n - c.fr_x == 0)
    throw std::domain_error("negated productivity undefined: fr(!(YQ))=0");
  return chi2_2x2(improvement_tables(c).backward);
}

namespace {

// Proper nonempty subsets of `child` as (parent, removed) pairs.
std::vector<std::pair<std::vector<AttrId>, std::vector<AttrId>>> parent_splits(
    std::span<const AttrId> child, bool all_subsets) {
  std::vector<std::pair<std::vector<AttrId>, std::vector<AttrId>>> out;
  const std::size_t m = child.size();
  if (m < 2) return out;
  if (!all_subsets) {
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<AttrId> parent, removed;
      for (std::size_t j = 0; j < m; ++j)
        (j == i ? removed : parent).push_back(child[j]);
      out.emplace_back(std::move(parent), std::move(removed));
    }
    return out;
  }
  for (std::size_t mask = 1; mask + 1 < (std::size_t(1) << m); ++mask) {
    std::vector<AttrId> parent, removed;
    for (std::size_t j = 0; j < m; ++j)
      ((mask >> j) & 1 ? parent : removed).push_back(child[j]);
    out.emplace_back(std::move(parent), std::move(removed));
  }
  return out;
}

}  // namespace

std::vector<ImprovementResult> judge_superfluous(
    const Dataset& d, std::span<const AttrId> child, AttrId a, Sign sign,
    Interpretation interpretation, double alpha, bool all_subsets) {
  if (child.empty()) throw std::invalid_argument("empty child antecedent");
  std::vector<ImprovementResult> out;
  for (auto& [parent, removed] : parent_splits(child, all_subsets)) {
    ImprovementResult r;
    r.parent = parent;
    r.p_forward = 1.0;
    r.p_backward = 1.0;
    const auto c = improvement_counts(d, parent, removed, a, sign);
    const auto tables = improvement_tables(c);
    if (c.fr_y == 0 || c.n == c.fr_x) {
      r.verdict = Verdict::undecidable;
      out.push_back(std::move(r));
      continue;
    }
    r.p_forward = fisher_p(tables.forward).p_value;
    r.p_backward = fisher_p(tables.backward).p_value;
    if (interpretation == Interpretation::value_based) {
      // clause (i): no precision improvement; clause (ii): improvement not
      // significant at alpha
      const bool improves =
          c.fr_xa * c.fr_y > c.fr_ya * c.fr_x;  // fr(XA)/fr(X) > fr(YA)/fr(Y)
      r.verdict = (!improves || r.p_forward > alpha) ? Verdict::superfluous
                                                     : Verdict::productive;
    } else {
      // clause (iii); a tie counts as superfluous
      r.verdict = r.p_forward >= r.p_backward ? Verdict::superfluous
                                              : Verdict::productive;
    }
    out.push_back(std::move(r));
  }
  return out;
}

bool any_superfluous(const std::vector<ImprovementResult>& results) {
  for (const auto& r : results)
    if (r.verdict == Verdict::superfluous) return true;
  return false;
}

bool kingfisher_superfluous(const Dataset& d, std::span<const AttrId> child,
                            AttrId a, Sign sign, bool all_subsets) {
  const double child_p =
      fisher_p(extract_table(d, child, a, sign)).p_value;
  for (auto& [parent, removed] : parent_splits(child, all_subsets)) {
    (void)removed;
    const double parent_p =
        fisher_p(extract_table(d, parent, a, sign)).p_value;
    if (child_p > parent_p) return true;
  }
  return false;
}

}  // namespace sigmine
