#pragma once

// Exact rational plane geometry: points, circles given by squared radius,
// the chord-reversion map and strict betweenness. No tolerances anywhere.

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace circiso {

/// GMP rationals are kept in lowest terms with a positive denominator after
/// every operation.
using Rational = mpq_class;

/// n/d in lowest terms; mpq_class(n, d) alone does not reduce.
inline Rational ratio(long n, long d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

class GeometryError : public std::invalid_argument {
 public:
  enum class Kind {
    nonpositive_radius,
    point_not_on_circle,
    center_not_interior,
    center_on_point,
    tangent_direction,
    degenerate_line,
    parse,
  };

  GeometryError(Kind kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

struct RPoint {
  Rational x;
  Rational y;

  friend bool operator==(const RPoint& a, const RPoint& b) { return a.x == b.x && a.y == b.y; }
  // Lexicographic; along any line this is the natural order (or its reverse).
  friend std::strong_ordering operator<=>(const RPoint& a, const RPoint& b);
};

RPoint operator+(const RPoint& a, const RPoint& b);
RPoint operator-(const RPoint& a, const RPoint& b);
RPoint operator*(const Rational& k, const RPoint& p);
Rational dot(const RPoint& a, const RPoint& b);
/// z-component of a x b.
Rational cross(const RPoint& a, const RPoint& b);
Rational norm_sq(const RPoint& a);

class RCircle {
 public:
  RCircle(RPoint center, Rational radius_sq);

  static RCircle unit() { return RCircle(RPoint{0, 0}, 1); }

  const RPoint& center() const noexcept { return center_; }
  const Rational& radius_sq() const noexcept { return radius_sq_; }

  friend bool operator==(const RCircle&, const RCircle&) = default;

 private:
  RPoint center_;
  Rational radius_sq_;
};

bool on_circle(const RCircle& circle, const RPoint& p);
bool in_open_disk(const RCircle& circle, const RPoint& p);

bool collinear(const RPoint& a, const RPoint& b, const RPoint& c);

/// x lies in the open segment (a, b).
bool is_between(const RPoint& a, const RPoint& x, const RPoint& b);

/// The point of the circle reached from c along the chord through the
/// interior point X. With d = X - c and w = c - center the chord parameter
/// t = -2<w,d>/<d,d> is the second root next to the known root t = 0.
RPoint reversion(const RCircle& circle, const RPoint& X, const RPoint& c);

/// Second intersection of the circle with the line through `base` in
/// direction (1, t). Throws tangent_direction when that line only touches.
RPoint rational_circle_point(const RCircle& circle, const RPoint& base, const Rational& t);

struct LineIntersection {
  enum class Kind { point, parallel, coincident };
  Kind kind;
  std::optional<RPoint> point;
};

LineIntersection line_line_intersection(const RPoint& p1, const RPoint& p2,
                                        const RPoint& q1, const RPoint& q2);

/// A rational point on the circle with the smallest horizontal offset. Searches
/// integer decompositions r^2 = (a^2 + b^2)/q^2 with a ascending; returns
/// nullopt when none is found within `search_cap` candidates or none exists.
std::optional<RPoint> find_rational_point(const RCircle& circle, unsigned long search_cap = 10'000'000);

/// Exact square root of a non-negative rational, if it is a perfect square.
std::optional<Rational> exact_sqrt(const Rational& q);

/// "p/q", or "p" when q = 1.
std::string to_string(const Rational& q);
/// "x y".
std::string to_string(const RPoint& p);

/// Accepts "[-+]digits" or "[-+]digits/digits" with a nonzero denominator.
Rational parse_rational(std::string_view text);

/// Parses "x,y".
RPoint parse_point(std::string_view text);

}  // namespace circiso
