#include "charsum/grid.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace charsum {

namespace {

std::string_view trim(std::string_view s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string_view::npos) return {};
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

i64 to_int(std::string_view s, const std::string& line) {
  s = trim(s);
  i64 out = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty())
    throw std::invalid_argument("grid: bad integer in line: " + line);
  return out;
}

}  // namespace

Grid Grid::parse(std::string_view text) {
  Grid g;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    std::string_view line(raw);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw std::invalid_argument("grid: expected 'key = items': " + raw);
    const std::string key(trim(line.substr(0, eq)));
    if (key.empty()) throw std::invalid_argument("grid: empty key: " + raw);
    auto& values = g.values_[key];
    std::string_view rest = line.substr(eq + 1);
    while (!trim(rest).empty()) {
      const auto comma = rest.find(',');
      const std::string_view item = trim(rest.substr(0, comma));
      rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
      const auto dots = item.find("..");
      if (dots == std::string_view::npos) {
        values.push_back(to_int(item, raw));
        continue;
      }
      std::string_view hi_part = item.substr(dots + 2);
      i64 step = 1;
      if (const auto colon = hi_part.find(':'); colon != std::string_view::npos) {
        step = to_int(hi_part.substr(colon + 1), raw);
        hi_part = hi_part.substr(0, colon);
      }
      if (step < 1) throw std::invalid_argument("grid: step must be positive: " + raw);
      const i64 lo = to_int(item.substr(0, dots), raw), hi = to_int(hi_part, raw);
      for (i64 x = lo; x <= hi; x += step) values.push_back(x);
    }
  }
  return g;
}

Grid Grid::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("grid: cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

const std::vector<i64>& Grid::get(const std::string& key) const {
  static const std::vector<i64> none;
  const auto it = values_.find(key);
  return it == values_.end() ? none : it->second;
}

}  // namespace charsum
