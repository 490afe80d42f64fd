#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sigmine {

using AttrId = std::uint32_t;

// Consequent polarity of a rule: X -> A or X -> !A.
enum class Sign { positive, negated };

// Tested direction of dependence (positive or negative tail).
enum class Direction { positive, negative };

// Rule semantics: dependence between indicator variables over the whole
// 2x2 table, or dependence of the specific value combination.
enum class Interpretation { variable_based, value_based };

// Malformed input data; line is 1-based.
class parse_error : public std::runtime_error {
 public:
  parse_error(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Request exceeds a configured size cap (e.g. 2^m cell tables, O(n^3) sums).
class capacity_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sigmine
