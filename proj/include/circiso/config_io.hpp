#pragma once

// Line-oriented configuration files:
//
//   # comment
//   circle <cx> <cy> <r2>
//   point <x> <y>
//   ...
//
// Rationals are integers or p/q. Exactly one circle line, before 1 to 3
// point lines.

#include <stdexcept>
#include <string>
#include <string_view>

#include "circiso/action.hpp"

namespace circiso {

class ParseError : public std::invalid_argument {
 public:
  ParseError(int line, const std::string& what);

  /// 1-based; 0 when the problem is not tied to a line.
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// Parses and validates (collinear, ordered). Syntax problems raise
/// ParseError; geometric problems raise ConfigError.
ConfigK parse_config(std::string_view text);

ConfigK load_config(const std::string& path);

std::string serialize_config(const ConfigK& config);

}  // namespace circiso
