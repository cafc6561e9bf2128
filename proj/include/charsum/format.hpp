#pragma once

#include <string>

namespace charsum {

/// 12 significant digits; integral values keep a trailing ".0" so that every
/// real column reads as a real ("6.0", "1.5e+20", "nan").
std::string format_real(double x);

/// The field as is, or double-quoted (inner quotes doubled) when it holds a
/// comma, quote or newline.
std::string csv_field(const std::string& s);

}  // namespace charsum
