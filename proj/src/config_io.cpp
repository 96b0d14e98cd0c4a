#include "circiso/config_io.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "circiso/classifier.hpp"

namespace circiso {

ParseError::ParseError(int line, const std::string& what)
    : std::invalid_argument(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

namespace {

constexpr std::size_t kMaxPoints = 3;

std::vector<std::string> fields_of(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string f; in >> f;) out.push_back(f);
  return out;
}

Rational field_rational(const std::string& text, int line) {
  try {
    return parse_rational(text);
  } catch (const GeometryError& e) {
    throw ParseError(line, e.what());
  }
}

}  // namespace

ConfigK parse_config(std::string_view text) {
  std::optional<RCircle> circle;
  std::vector<RPoint> points;
  std::istringstream in{std::string(text)};
  int number = 0;
  for (std::string line; std::getline(in, line);) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto fields = fields_of(line);
    if (fields.empty() || fields[0].starts_with('#')) continue;
    const std::string& keyword = fields[0];
    if (keyword == "circle") {
      if (circle) throw ParseError(number, "second circle line");
      if (!points.empty()) throw ParseError(number, "circle line must come before point lines");
      if (fields.size() != 4) throw ParseError(number, "expected: circle <cx> <cy> <r2>");
      const RPoint center{field_rational(fields[1], number), field_rational(fields[2], number)};
      const Rational r2 = field_rational(fields[3], number);
      if (sgn(r2) <= 0) throw ParseError(number, "squared radius must be positive");
      circle.emplace(center, r2);
    } else if (keyword == "point") {
      if (!circle) throw ParseError(number, "point line before the circle line");
      if (fields.size() != 3) throw ParseError(number, "expected: point <x> <y>");
      if (points.size() == kMaxPoints) throw ParseError(number, "at most 3 points are supported");
      points.push_back(RPoint{field_rational(fields[1], number), field_rational(fields[2], number)});
    } else {
      throw ParseError(number, "unknown keyword '" + keyword + "'");
    }
  }
  if (!circle) throw ParseError(number + 1, "missing circle line");
  if (points.empty()) throw ParseError(number + 1, "no point lines");
  return validate_config(*circle, points);
}

ConfigK load_config(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw ParseError(0, "cannot read " + path);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return parse_config(buffer.str());
}

std::string serialize_config(const ConfigK& config) {
  std::string out = "circle " + to_string(config.circle().center()) + " " + to_string(config.circle().radius_sq()) + "\n";
  for (const RPoint& p : config.points()) out += "point " + to_string(p) + "\n";
  return out;
}

}  // namespace circiso
