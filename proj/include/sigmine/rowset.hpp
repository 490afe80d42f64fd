#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace sigmine {

// Fixed-width bitset over row indices. All counting in the library reduces
// to intersections of these.
class RowSet {
 public:
  RowSet() = default;
  explicit RowSet(std::size_t n_bits)
      : n_bits_(n_bits), blocks_((n_bits + 63) / 64, 0) {}

  static RowSet full(std::size_t n_bits) {
    RowSet r(n_bits);
    for (auto& b : r.blocks_) b = ~std::uint64_t{0};
    r.clear_tail();
    return r;
  }

  std::size_t size() const { return n_bits_; }

  void set(std::size_t i) { blocks_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { blocks_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const {
    return (blocks_[i >> 6] >> (i & 63)) & 1;
  }

  std::int64_t count() const {
    std::int64_t c = 0;
    for (auto b : blocks_) c += std::popcount(b);
    return c;
  }

  void intersect_with(const RowSet& o) {
    for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] &= o.blocks_[i];
  }

  void subtract(const RowSet& o) {
    for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] &= ~o.blocks_[i];
  }

  friend std::int64_t intersection_count(const RowSet& a, const RowSet& b) {
    std::int64_t c = 0;
    for (std::size_t i = 0; i < a.blocks_.size(); ++i)
      c += std::popcount(a.blocks_[i] & b.blocks_[i]);
    return c;
  }

  friend RowSet operator&(const RowSet& a, const RowSet& b) {
    RowSet r = a;
    r.intersect_with(b);
    return r;
  }

  bool operator==(const RowSet& o) const = default;

 private:
  void clear_tail() {
    if (n_bits_ % 64 != 0 && !blocks_.empty())
      blocks_.back() &= (std::uint64_t{1} << (n_bits_ % 64)) - 1;
  }

  std::size_t n_bits_ = 0;
  std::vector<std::uint64_t> blocks_;
};

}  // namespace sigmine
