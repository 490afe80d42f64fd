#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace sigmine {

// 2x2 contingency table of rule X -> A, stored as (n, fr(X), fr(A), fr(XA)).
// The remaining cells are derived.
struct Table2x2 {
  std::int64_t n = 0;
  std::int64_t n_x = 0;
  std::int64_t n_a = 0;
  std::int64_t n_xa = 0;

  std::int64_t n_xna() const { return n_x - n_xa; }        // fr(X !A)
  std::int64_t n_nxa() const { return n_a - n_xa; }        // fr(!X A)
  std::int64_t n_nxna() const { return n - n_x - n_a + n_xa; }
  std::int64_t j1() const { return std::min(n_xna(), n_nxa()); }
  std::int64_t j2() const { return std::min(n_xa, n_nxna()); }

  double p_x() const { return double(n_x) / double(n); }
  double p_a() const { return double(n_a) / double(n); }
  double p_xa() const { return double(n_xa) / double(n); }

  // Table of the same data with the roles of X and A swapped.
  Table2x2 swapped() const { return {n, n_a, n_x, n_xa}; }

  bool valid() const {
    return n > 0 && n_x >= 0 && n_a >= 0 && n_xa >= 0 && n_xa <= n_x &&
           n_xa <= n_a && n_x + n_a - n_xa <= n;
  }

  void require_valid() const {
    if (!valid()) throw std::domain_error("invalid 2x2 contingency table");
  }

  bool operator==(const Table2x2&) const = default;
};

}  // namespace sigmine
