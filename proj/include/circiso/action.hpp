#pragma once

// Right action of G_l on a circle: a word (i_1..i_n) sends c to
// R_{i_n}(...R_{i_1}(c)), where R_i is the reversion through the i-th
// interior point.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "circiso/geometry.hpp"
#include "circiso/word.hpp"

namespace circiso {

class ConfigError : public std::invalid_argument {
 public:
  enum class Kind {
    bad_count,
    duplicate_points,
    not_interior,
    not_collinear,
    not_ordered,
    no_rational_point,
    base_not_on_circle,
  };

  ConfigError(Kind kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// A circle with l interior points and a rational seed point on the circle.
/// Construction checks distinctness and interiority; the collinear/ordered
/// flags describe the configuration but are not required.
class ConfigK {
 public:
  ConfigK(RCircle circle, std::vector<RPoint> points, std::optional<RPoint> base_point = std::nullopt);

  const RCircle& circle() const noexcept { return circle_; }
  const std::vector<RPoint>& points() const noexcept { return points_; }
  /// 1-based, matching word letters.
  const RPoint& point(int index) const { return points_.at(static_cast<std::size_t>(index - 1)); }
  const RPoint& base_point() const noexcept { return base_point_; }
  int l() const noexcept { return static_cast<int>(points_.size()); }

  bool collinear() const noexcept { return collinear_; }
  /// Collinear and monotone along the line, c_1 < ... < c_l or reversed.
  bool ordered() const noexcept { return ordered_; }

  friend bool operator==(const ConfigK&, const ConfigK&) = default;

 private:
  RCircle circle_;
  std::vector<RPoint> points_;
  RPoint base_point_;
  bool collinear_ = false;
  bool ordered_ = false;
};

RPoint act(const ConfigK& config, const RPoint& c, const Word& g);

bool stab_contains(const ConfigK& config, const RPoint& c, const Word& g);

/// Images of c under all irreducible words of length <= max_word_length,
/// deduplicated, in breadth-first discovery order (c first).
std::vector<RPoint> orbit(const ConfigK& config, const RPoint& c, int max_word_length);

enum class HalfPlaneSide { plus, minus, on_line };

/// Side of p relative to the line through the interior points, oriented from
/// the first to the last of them.
HalfPlaneSide halfplane_side(const ConfigK& config, const RPoint& p);

/// Deterministic rational circle point off the interior line: the base point
/// itself if it qualifies, then rational_circle_point(base, 1/k) for
/// k = 1, 2, ...
RPoint off_line_point(const ConfigK& config, int skip = 0);

/// Whether v is a cycle: some (equivalently every) off-line circle point is
/// fixed by every word with signature v. Non-balanced v is never a cycle.
bool is_cycle(const ConfigK& config, const SignatureVector& v);

const char* to_string(HalfPlaneSide side);

}  // namespace circiso
