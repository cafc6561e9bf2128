#pragma once

// Parameter grids for the ratio scans. A grid file holds lines
//   key = item, item, ...
// where an item is an integer, a range a..b, or a strided range a..b:step.
// '#' starts a comment. A repeated key appends to its list.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "charsum/arithmetic.hpp"

namespace charsum {

class Grid {
 public:
  /// Throws std::invalid_argument with the offending line on malformed input.
  static Grid parse(std::string_view text);
  static Grid load(const std::string& path);

  bool has(const std::string& key) const { return values_.count(key) != 0; }
  /// Values for key, or an empty list when absent.
  const std::vector<i64>& get(const std::string& key) const;
  bool empty() const { return values_.empty(); }

 private:
  std::map<std::string, std::vector<i64>> values_;
};

}  // namespace charsum
