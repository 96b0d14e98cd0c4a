#include "circiso/action.hpp"

#include <set>

namespace circiso {

ConfigK::ConfigK(RCircle circle, std::vector<RPoint> points, std::optional<RPoint> base_point)
    : circle_(std::move(circle)), points_(std::move(points)), base_point_{0, 0} {
  if (points_.empty()) throw ConfigError(ConfigError::Kind::bad_count, "at least one interior point is required");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!in_open_disk(circle_, points_[i])) {
      throw ConfigError(ConfigError::Kind::not_interior,
                        "point " + std::to_string(i + 1) + " (" + to_string(points_[i]) +
                            ") is not strictly inside the circle");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (points_[i] == points_[j]) {
        throw ConfigError(ConfigError::Kind::duplicate_points,
                          "points " + std::to_string(j + 1) + " and " + std::to_string(i + 1) + " coincide");
      }
    }
  }

  if (base_point) {
    if (!on_circle(circle_, *base_point)) {
      throw ConfigError(ConfigError::Kind::base_not_on_circle, "base point is not on the circle");
    }
    base_point_ = *base_point;
  } else {
    auto found = find_rational_point(circle_);
    if (!found) {
      throw ConfigError(ConfigError::Kind::no_rational_point, "circle has no rational point within the search cap");
    }
    base_point_ = *found;
  }

  const RPoint& first = points_.front();
  const RPoint& last = points_.back();
  collinear_ = true;
  for (const RPoint& p : points_) {
    if (!circiso::collinear(first, last, p)) collinear_ = false;
  }
  ordered_ = collinear_;
  if (ordered_) {
    const RPoint dir = last - first;
    for (std::size_t i = 1; i < points_.size() && ordered_; ++i) {
      ordered_ = dot(points_[i] - points_[i - 1], dir) > 0;
    }
  }
}

RPoint act(const ConfigK& config, const RPoint& c, const Word& g) {
  if (g.alphabet_size() != config.l()) {
    throw WordError(WordError::Kind::alphabet_mismatch,
                    "word over " + std::to_string(g.alphabet_size()) + " letters acting on a configuration with " +
                        std::to_string(config.l()) + " points");
  }
  RPoint current = c;
  if (g.empty() && !on_circle(config.circle(), c)) {
    throw GeometryError(GeometryError::Kind::point_not_on_circle, "act: point is not on the circle");
  }
  for (Letter letter : g) current = reversion(config.circle(), config.point(letter), current);
  return current;
}

bool stab_contains(const ConfigK& config, const RPoint& c, const Word& g) { return act(config, c, g) == c; }

std::vector<RPoint> orbit(const ConfigK& config, const RPoint& c, int max_word_length) {
  if (max_word_length < 0) throw std::invalid_argument("orbit: negative word-length bound");
  if (!on_circle(config.circle(), c)) {
    throw GeometryError(GeometryError::Kind::point_not_on_circle, "orbit: point is not on the circle");
  }
  // A reducible sequence acts like its shorter reduction, so breadth-first
  // search over all letters reaches exactly the irreducible images.
  std::vector<RPoint> out{c};
  std::set<RPoint> seen{c};
  std::vector<RPoint> frontier{c};
  for (int depth = 0; depth < max_word_length && !frontier.empty(); ++depth) {
    std::vector<RPoint> next;
    for (const RPoint& p : frontier) {
      for (int i = 1; i <= config.l(); ++i) {
        RPoint q = reversion(config.circle(), config.point(i), p);
        if (seen.insert(q).second) {
          out.push_back(q);
          next.push_back(std::move(q));
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

namespace {

void require_line(const ConfigK& config, const char* what) {
  if (config.l() < 2 || !config.collinear()) {
    throw ConfigError(ConfigError::Kind::not_collinear,
                      std::string(what) + ": needs at least two collinear interior points");
  }
}

}  // namespace

HalfPlaneSide halfplane_side(const ConfigK& config, const RPoint& p) {
  require_line(config, "halfplane_side");
  const RPoint& first = config.points().front();
  const int s = sgn(cross(config.points().back() - first, p - first));
  return s > 0 ? HalfPlaneSide::plus : s < 0 ? HalfPlaneSide::minus : HalfPlaneSide::on_line;
}

RPoint off_line_point(const ConfigK& config, int skip) {
  auto qualifies = [&](const RPoint& p) {
    return config.l() < 2 || halfplane_side(config, p) != HalfPlaneSide::on_line;
  };
  if (config.l() >= 2) require_line(config, "off_line_point");
  int found = 0;
  if (qualifies(config.base_point()) && found++ == skip) return config.base_point();
  constexpr int max_tries = 100000;
  for (int k = 1; k <= max_tries; ++k) {
    RPoint p;
    try {
      p = rational_circle_point(config.circle(), config.base_point(), ratio(1, k));
    } catch (const GeometryError& e) {
      if (e.kind() == GeometryError::Kind::tangent_direction) continue;
      throw;
    }
    if (qualifies(p) && p != config.base_point() && found++ == skip) return p;
  }
  throw std::runtime_error("off_line_point: no off-line rational point found");
}

bool is_cycle(const ConfigK& config, const SignatureVector& v) {
  if (static_cast<int>(v.size()) != config.l()) {
    throw WordError(WordError::Kind::wrong_dimension, "signature length differs from the number of points");
  }
  if (config.l() >= 3 && !config.ordered()) {
    throw ConfigError(ConfigError::Kind::not_ordered, "is_cycle: interior points must be collinear and ordered");
  }
  if (!is_balanced(v)) return false;
  const RPoint c = off_line_point(config);
  return stab_contains(config, c, word_from_signature(v));
}

const char* to_string(HalfPlaneSide side) {
  switch (side) {
    case HalfPlaneSide::plus: return "plus";
    case HalfPlaneSide::minus: return "minus";
    case HalfPlaneSide::on_line: return "on_line";
  }
  return "?";
}

}  // namespace circiso
