#include "sigmine/dataset.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace sigmine {

DataFormat data_format_from_string(std::string_view s) {
  if (s == "transactions") return DataFormat::transactions;
  if (s == "csv01") return DataFormat::csv01;
  throw std::invalid_argument("unknown data format: " + std::string(s));
}

std::string_view to_string(DataFormat f) {
  return f == DataFormat::transactions ? "transactions" : "csv01";
}

Dataset::Dataset(std::vector<std::string> names, std::size_t n_rows,
                 std::vector<RowSet> cols)
    : n_rows_(n_rows), names_(std::move(names)), cols_(std::move(cols)) {
  if (n_rows_ == 0 || names_.empty())
    throw std::domain_error("empty dataset");
  if (names_.size() != cols_.size())
    throw std::invalid_argument("column name/rowset count mismatch");
  freqs_.reserve(cols_.size());
  for (std::size_t i = 0; i < cols_.size(); ++i) {
    if (cols_[i].size() != n_rows_)
      throw std::invalid_argument("rowset width mismatch");
    freqs_.push_back(cols_[i].count());
    if (!by_name_.emplace(names_[i], AttrId(i)).second)
      throw std::domain_error("duplicate column name: " + names_[i]);
  }
}

const RowSet& Dataset::col_rows(AttrId id) const {
  if (id >= cols_.size()) throw std::domain_error("unknown attribute id");
  return cols_[id];
}

AttrId Dataset::col_id(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end())
    throw std::domain_error("unknown attribute: " + std::string(name));
  return it->second;
}

bool Dataset::has_col(std::string_view name) const {
  return by_name_.count(std::string(name)) > 0;
}

RowSet Dataset::rows_of(std::span<const AttrId> attrs) const {
  RowSet r = RowSet::full(n_rows_);
  for (AttrId a : attrs) r.intersect_with(col_rows(a));
  return r;
}

std::int64_t Dataset::support(std::span<const AttrId> attrs) const {
  if (attrs.empty()) return std::int64_t(n_rows_);
  if (attrs.size() == 1) return col_freq(attrs[0]);
  return rows_of(attrs).count();
}

namespace {

void chomp(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

Dataset load_transactions(std::istream& in) {
  std::vector<std::string> names;
  std::unordered_map<std::string, AttrId> ids;
  std::vector<std::vector<std::size_t>> col_rows;  // row indices per column
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    chomp(line);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      auto [it, inserted] = ids.emplace(tok, AttrId(names.size()));
      if (inserted) {
        names.push_back(tok);
        col_rows.emplace_back();
      }
      auto& rows = col_rows[it->second];
      if (rows.empty() || rows.back() != row) rows.push_back(row);
    }
    ++row;
  }
  if (row == 0 || names.empty()) throw std::domain_error("empty dataset");
  std::vector<RowSet> cols;
  cols.reserve(names.size());
  for (const auto& rows : col_rows) {
    RowSet rs(row);
    for (auto r : rows) rs.set(r);
    cols.push_back(std::move(rs));
  }
  return Dataset(std::move(names), row, std::move(cols));
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

Dataset load_csv01(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::domain_error("empty dataset");
  chomp(line);
  std::vector<std::string> names;
  for (auto& f : split_csv(line)) {
    auto name = trim(f);
    if (name.empty()) throw parse_error(1, "empty column name in header");
    names.push_back(name);
  }
  std::vector<std::vector<std::size_t>> col_rows(names.size());
  std::size_t row = 0, lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    chomp(line);
    if (line.empty()) continue;  // tolerate trailing blank lines
    auto fields = split_csv(line);
    if (fields.size() != names.size())
      throw parse_error(lineno, "expected " + std::to_string(names.size()) +
                                    " fields, got " +
                                    std::to_string(fields.size()));
    for (std::size_t c = 0; c < fields.size(); ++c) {
      auto v = trim(fields[c]);
      if (v == "1")
        col_rows[c].push_back(row);
      else if (v != "0")
        throw parse_error(lineno, "value outside {0,1}: '" + v + "'");
    }
    ++row;
  }
  if (row == 0) throw std::domain_error("empty dataset");
  std::vector<RowSet> cols;
  cols.reserve(names.size());
  for (const auto& rows : col_rows) {
    RowSet rs(row);
    for (auto r : rows) rs.set(r);
    cols.push_back(std::move(rs));
  }
  return Dataset(std::move(names), row, std::move(cols));
}

}  // namespace

Dataset load_dataset(std::istream& in, DataFormat format) {
  return format == DataFormat::transactions ? load_transactions(in)
                                            : load_csv01(in);
}

Dataset load_dataset_file(const std::string& path, DataFormat format) {
  std::ifstream in(path);
  if (!in) throw std::domain_error("cannot open file: " + path);
  return load_dataset(in, format);
}

void save_dataset(const Dataset& d, std::ostream& out, DataFormat format) {
  const std::size_t n = d.n_rows(), k = d.n_cols();
  if (format == DataFormat::csv01) {
    for (std::size_t c = 0; c < k; ++c)
      out << (c ? "," : "") << d.col_name(AttrId(c));
    out << '\n';
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < k; ++c)
        out << (c ? "," : "") << (d.col_rows(AttrId(c)).test(r) ? '1' : '0');
      out << '\n';
    }
  } else {
    for (std::size_t r = 0; r < n; ++r) {
      bool first = true;
      for (std::size_t c = 0; c < k; ++c) {
        if (d.col_rows(AttrId(c)).test(r)) {
          if (!first) out << ' ';
          out << d.col_name(AttrId(c));
          first = false;
        }
      }
      out << '\n';
    }
  }
}

Table2x2 extract_table(const Dataset& d, std::span<const AttrId> x, AttrId a,
                       Sign sign) {
  if (x.empty()) throw std::invalid_argument("empty antecedent");
  for (AttrId xi : x)
    if (xi == a) throw std::invalid_argument("consequent inside antecedent");
  RowSet xr = d.rows_of(x);
  const std::int64_t n = std::int64_t(d.n_rows());
  const std::int64_t n_x = xr.count();
  const std::int64_t pos_xa = intersection_count(xr, d.col_rows(a));
  Table2x2 t;
  t.n = n;
  t.n_x = n_x;
  if (sign == Sign::positive) {
    t.n_a = d.col_freq(a);
    t.n_xa = pos_xa;
  } else {
    t.n_a = n - d.col_freq(a);
    t.n_xa = n_x - pos_xa;
  }
  return t;
}

std::vector<std::int64_t> extract_cells(const Dataset& d,
                                        std::span<const AttrId> x,
                                        int max_width) {
  if (int(x.size()) > max_width)
    throw capacity_error("attribute set wider than cell-table cap (" +
                         std::to_string(max_width) + ")");
  for (AttrId xi : x) d.col_rows(xi);  // id validation
  const std::size_t m = x.size();
  std::vector<std::int64_t> cells(std::size_t(1) << m, 0);
  for (std::size_t r = 0; r < d.n_rows(); ++r) {
    std::size_t mask = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (d.col_rows(x[i]).test(r)) mask |= std::size_t(1) << i;
    ++cells[mask];
  }
  return cells;
}

Dataset restrict_rows(const Dataset& d, const RowSet& keep) {
  std::vector<std::size_t> map;  // old row -> new row
  map.reserve(d.n_rows());
  std::size_t next = 0;
  for (std::size_t r = 0; r < d.n_rows(); ++r) map.push_back(keep.test(r) ? next++ : 0);
  if (next == 0) throw std::domain_error("row restriction leaves no rows");
  std::vector<RowSet> cols;
  cols.reserve(d.n_cols());
  for (std::size_t c = 0; c < d.n_cols(); ++c) {
    RowSet rs(next);
    const RowSet& old = d.col_rows(AttrId(c));
    for (std::size_t r = 0; r < d.n_rows(); ++r)
      if (keep.test(r) && old.test(r)) rs.set(map[r]);
    cols.push_back(std::move(rs));
  }
  return Dataset(d.col_names(), next, std::move(cols));
}

}  // namespace sigmine
