#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sigmine/contingency.hpp"
#include "sigmine/core.hpp"
#include "sigmine/rowset.hpp"

namespace sigmine {

enum class DataFormat { transactions, csv01 };

DataFormat data_format_from_string(std::string_view s);
std::string_view to_string(DataFormat f);

// Immutable binary dataset indexed by per-column row sets. Duplicate rows are
// preserved; row-major storage is dropped after load.
class Dataset {
 public:
  Dataset() = default;
  Dataset(std::vector<std::string> names, std::size_t n_rows,
          std::vector<RowSet> cols);

  std::size_t n_rows() const { return n_rows_; }
  std::size_t n_cols() const { return names_.size(); }

  const std::vector<std::string>& col_names() const { return names_; }
  const std::string& col_name(AttrId id) const { return names_.at(id); }
  std::int64_t col_freq(AttrId id) const { return freqs_.at(id); }
  const RowSet& col_rows(AttrId id) const;

  // Column lookup by name; throws std::domain_error for unknown names.
  AttrId col_id(std::string_view name) const;
  bool has_col(std::string_view name) const;

  // Intersection of the given columns' row sets (all rows when empty).
  RowSet rows_of(std::span<const AttrId> attrs) const;
  std::int64_t support(std::span<const AttrId> attrs) const;

 private:
  std::size_t n_rows_ = 0;
  std::vector<std::string> names_;
  std::vector<RowSet> cols_;
  std::vector<std::int64_t> freqs_;
  std::unordered_map<std::string, AttrId> by_name_;
};

// Parsers reject malformed lines (parse_error with a 1-based line number) and
// empty datasets (std::domain_error). In the transactions format a blank line
// is a row with no items.
Dataset load_dataset(std::istream& in, DataFormat format);
Dataset load_dataset_file(const std::string& path, DataFormat format);
void save_dataset(const Dataset& d, std::ostream& out, DataFormat format);

// 2x2 table of rule x -> a (or x -> !a). Pre: x nonempty, a not in x.
Table2x2 extract_table(const Dataset& d, std::span<const AttrId> x, AttrId a,
                       Sign sign);

// All 2^|x| truth-combination counts; cell index has bit i set when x[i]=1.
// Throws capacity_error when |x| exceeds max_width.
std::vector<std::int64_t> extract_cells(const Dataset& d,
                                        std::span<const AttrId> x,
                                        int max_width = 12);

// Sub-dataset with the same columns restricted to the rows in `keep`.
Dataset restrict_rows(const Dataset& d, const RowSet& keep);

}  // namespace sigmine
