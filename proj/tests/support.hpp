#pragma once

// Test-only generators and independent oracles.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "circiso/action.hpp"
#include "circiso/classifier.hpp"

namespace circiso::testing {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline Rational random_rational(Rng& rng, long num_abs, long den_max) {
  return ratio(uniform(rng, -num_abs, num_abs), uniform(rng, 1, den_max));
}

inline RPoint random_point(Rng& rng, long num_abs, long den_max) {
  return {random_rational(rng, num_abs, den_max), random_rational(rng, num_abs, den_max)};
}

/// A circle together with a rational point on it, so no search is needed.
struct CircleWithPoint {
  RCircle circle;
  RPoint on;
};

inline CircleWithPoint random_circle(Rng& rng) {
  const RPoint center = random_point(rng, 6, 5);
  RPoint on = random_point(rng, 6, 5);
  while (on == center) on = random_point(rng, 6, 5);
  return {RCircle(center, norm_sq(on - center)), on};
}

inline RPoint random_circle_point(Rng& rng, const RCircle& circle, const RPoint& base) {
  for (;;) {
    try {
      return rational_circle_point(circle, base, random_rational(rng, 40, 13));
    } catch (const GeometryError&) {
    }
  }
}

inline double radius_approx(const RCircle& circle) { return std::sqrt(circle.radius_sq().get_d()); }

/// center + u * r * (p/q) for random small rationals, kept strictly inside.
inline RPoint random_interior_point(Rng& rng, const RCircle& circle) {
  const long den = 64;
  const long scale = static_cast<long>(std::floor(radius_approx(circle) * den * 0.95));
  for (;;) {
    const RPoint offset{ratio(uniform(rng, -scale, scale), den), ratio(uniform(rng, -scale, scale), den)};
    const RPoint p = circle.center() + offset;
    if (in_open_disk(circle, p)) return p;
  }
}

/// l distinct collinear interior points in monotone order along a random line.
inline std::vector<RPoint> random_collinear_points(Rng& rng, const RCircle& circle, int l) {
  for (;;) {
    const RPoint anchor = random_interior_point(rng, circle);
    const long shrink = 7 * std::max(1L, static_cast<long>(std::ceil(1 / radius_approx(circle))));
    const RPoint dir{ratio(uniform(rng, -9, 9), shrink), ratio(uniform(rng, -9, 9), shrink)};
    if (sgn(dir.x) == 0 && sgn(dir.y) == 0) continue;
    std::vector<long> steps;
    while (static_cast<int>(steps.size()) < l) {
      const long s = uniform(rng, -40, 40);
      if (std::find(steps.begin(), steps.end(), s) == steps.end()) steps.push_back(s);
    }
    std::sort(steps.begin(), steps.end());
    std::vector<RPoint> pts;
    bool inside = true;
    for (long s : steps) {
      RPoint p = anchor + ratio(s, 40) * dir;
      inside = inside && in_open_disk(circle, p);
      pts.push_back(std::move(p));
    }
    if (inside) return pts;
  }
}

inline ConfigK random_collinear_config(Rng& rng, int l) {
  const auto c = random_circle(rng);
  return ConfigK(c.circle, random_collinear_points(rng, c.circle, l), c.on);
}

/// Any l distinct interior points (not necessarily collinear).
inline ConfigK random_config(Rng& rng, int l) {
  const auto c = random_circle(rng);
  std::vector<RPoint> pts;
  while (static_cast<int>(pts.size()) < l) {
    RPoint p = random_interior_point(rng, c.circle);
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(std::move(p));
  }
  return ConfigK(c.circle, pts, c.on);
}

inline std::vector<Letter> random_raw(Rng& rng, int l, int max_len) {
  std::vector<Letter> out(static_cast<std::size_t>(uniform(rng, 0, max_len)));
  for (auto& x : out) x = static_cast<Letter>(uniform(rng, 1, l));
  return out;
}

inline Word random_word(Rng& rng, int l, int max_len) {
  const long n = uniform(rng, 0, max_len);
  std::vector<Letter> out;
  while (static_cast<long>(out.size()) < n) {
    const auto x = static_cast<Letter>(uniform(rng, 1, l));
    if (out.empty() || out.back() != x) out.push_back(x);
  }
  return Word(l, out);
}

/// Removes the leftmost (or rightmost) adjacent equal pair until none remain.
inline std::vector<Letter> greedy_reduce(std::vector<Letter> s, bool from_left) {
  for (bool changed = true; changed;) {
    changed = false;
    if (s.size() < 2) break;
    if (from_left) {
      for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        if (s[i] == s[i + 1]) {
          s.erase(s.begin() + static_cast<long>(i), s.begin() + static_cast<long>(i) + 2);
          changed = true;
          break;
        }
      }
    } else {
      for (std::size_t i = s.size() - 1; i >= 1; --i) {
        if (s[i] == s[i - 1]) {
          s.erase(s.begin() + static_cast<long>(i) - 1, s.begin() + static_cast<long>(i) + 1);
          changed = true;
          break;
        }
      }
    }
  }
  return s;
}

/// Alternating letter counts straight from the definition, positions 1-based.
inline std::vector<std::int64_t> signature_oracle(const std::vector<Letter>& letters, int l) {
  std::vector<std::int64_t> n(static_cast<std::size_t>(l), 0);
  for (std::size_t m = 1; m <= letters.size(); ++m) n[static_cast<std::size_t>(letters[m - 1] - 1)] += (m % 2 == 1) ? 1 : -1;
  return n;
}

struct DPoint {
  double x;
  double y;
};

/// Second chord endpoint by solving the full line-circle quadratic in doubles
/// and keeping the root farther from c.
inline DPoint reversion_oracle(const RCircle& circle, const RPoint& X, const RPoint& c) {
  const double cx = c.x.get_d(), cy = c.y.get_d();
  const double dx = X.x.get_d() - cx, dy = X.y.get_d() - cy;
  const double ox = cx - circle.center().x.get_d(), oy = cy - circle.center().y.get_d();
  const double a = dx * dx + dy * dy;
  const double b = 2 * (ox * dx + oy * dy);
  const double k = ox * ox + oy * oy - circle.radius_sq().get_d();
  const double disc = std::sqrt(std::max(0.0, b * b - 4 * a * k));
  const double t1 = (-b + disc) / (2 * a);
  const double t2 = (-b - disc) / (2 * a);
  const double t = std::abs(t1) > std::abs(t2) ? t1 : t2;
  return {cx + t * dx, cy + t * dy};
}

inline ConfigK symmetric_fixture() {
  return validate_config(RCircle::unit(), {RPoint{ratio(-1, 2), 0}, RPoint{0, 0}, RPoint{ratio(1, 2), 0}});
}

/// Rotation by the angle with cosine 3/5, then scaling by `scale`, then translation.
inline RPoint similar(const RPoint& p, const Rational& scale, const RPoint& shift, bool rotate) {
  RPoint q = p;
  if (rotate) q = RPoint{ratio(3, 5) * p.x - ratio(4, 5) * p.y, ratio(4, 5) * p.x + ratio(3, 5) * p.y};
  return scale * q + shift;
}

inline ConfigK similar_config(const ConfigK& config, const Rational& scale, const RPoint& shift, bool rotate) {
  std::vector<RPoint> pts;
  for (const RPoint& p : config.points()) pts.push_back(similar(p, scale, shift, rotate));
  const RCircle circle(similar(config.circle().center(), scale, shift, rotate), scale * scale * config.circle().radius_sq());
  return ConfigK(circle, pts, similar(config.base_point(), scale, shift, rotate));
}

}  // namespace circiso::testing
