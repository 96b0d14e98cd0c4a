#include "circiso/geometry.hpp"

#include <cctype>

namespace circiso {

std::strong_ordering operator<=>(const RPoint& a, const RPoint& b) {
  if (int c = cmp(a.x, b.x); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  if (int c = cmp(a.y, b.y); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

RPoint operator+(const RPoint& a, const RPoint& b) { return {a.x + b.x, a.y + b.y}; }
RPoint operator-(const RPoint& a, const RPoint& b) { return {a.x - b.x, a.y - b.y}; }
RPoint operator*(const Rational& k, const RPoint& p) { return {k * p.x, k * p.y}; }
Rational dot(const RPoint& a, const RPoint& b) { return a.x * b.x + a.y * b.y; }
Rational cross(const RPoint& a, const RPoint& b) { return a.x * b.y - a.y * b.x; }
Rational norm_sq(const RPoint& a) { return dot(a, a); }

RCircle::RCircle(RPoint center, Rational radius_sq)
    : center_(std::move(center)), radius_sq_(std::move(radius_sq)) {
  if (sgn(radius_sq_) <= 0) {
    throw GeometryError(GeometryError::Kind::nonpositive_radius, "circle radius^2 must be positive");
  }
}

bool on_circle(const RCircle& circle, const RPoint& p) {
  return norm_sq(p - circle.center()) == circle.radius_sq();
}

bool in_open_disk(const RCircle& circle, const RPoint& p) {
  return norm_sq(p - circle.center()) < circle.radius_sq();
}

bool collinear(const RPoint& a, const RPoint& b, const RPoint& c) {
  return sgn(cross(b - a, c - a)) == 0;
}

bool is_between(const RPoint& a, const RPoint& x, const RPoint& b) {
  if (x == a || x == b || a == b) return false;
  if (!collinear(a, x, b)) return false;
  // x = a + lambda (b - a); lambda in (0,1) iff <x-a, b-a> in (0, |b-a|^2).
  const RPoint ab = b - a;
  const Rational proj = dot(x - a, ab);
  return sgn(proj) > 0 && proj < norm_sq(ab);
}

RPoint reversion(const RCircle& circle, const RPoint& X, const RPoint& c) {
  if (!on_circle(circle, c)) {
    throw GeometryError(GeometryError::Kind::point_not_on_circle,
                        "reversion: (" + to_string(c) + ") is not on the circle");
  }
  if (!in_open_disk(circle, X)) {
    throw GeometryError(GeometryError::Kind::center_not_interior,
                        "reversion: center (" + to_string(X) + ") is not inside the circle");
  }
  if (X == c) {
    throw GeometryError(GeometryError::Kind::center_on_point, "reversion: center equals the point");
  }
  const RPoint d = X - c;
  const RPoint w = c - circle.center();
  const Rational t = -2 * dot(w, d) / norm_sq(d);
  return c + t * d;
}

RPoint rational_circle_point(const RCircle& circle, const RPoint& base, const Rational& t) {
  if (!on_circle(circle, base)) {
    throw GeometryError(GeometryError::Kind::point_not_on_circle,
                        "base (" + to_string(base) + ") is not on the circle");
  }
  const RPoint d{1, t};
  const RPoint w = base - circle.center();
  const Rational s = -2 * dot(w, d) / norm_sq(d);
  if (sgn(s) == 0) {
    throw GeometryError(GeometryError::Kind::tangent_direction,
                        "direction (1, " + to_string(t) + ") is tangent at the base point");
  }
  return base + s * d;
}

LineIntersection line_line_intersection(const RPoint& p1, const RPoint& p2,
                                        const RPoint& q1, const RPoint& q2) {
  if (p1 == p2 || q1 == q2) {
    throw GeometryError(GeometryError::Kind::degenerate_line, "line through two equal points");
  }
  const RPoint r = p2 - p1;
  const RPoint s = q2 - q1;
  const Rational denom = cross(r, s);
  if (sgn(denom) == 0) {
    const bool same = sgn(cross(r, q1 - p1)) == 0;
    return {same ? LineIntersection::Kind::coincident : LineIntersection::Kind::parallel, std::nullopt};
  }
  const Rational t = cross(q1 - p1, s) / denom;
  return {LineIntersection::Kind::point, p1 + t * r};
}

std::optional<Rational> exact_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  mpz_class rn;
  mpz_class rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  Rational out(rn, rd);
  out.canonicalize();
  return out;
}

std::optional<RPoint> find_rational_point(const RCircle& circle, unsigned long search_cap) {
  // r^2 = p/q in lowest terms; (a/q)^2 + (b/q)^2 = r^2 iff a^2 + b^2 = p q.
  const mpz_class target = circle.radius_sq().get_num() * circle.radius_sq().get_den();
  const Rational q(circle.radius_sq().get_den());
  mpz_class a = 0;
  for (unsigned long i = 0; i < search_cap; ++i, ++a) {
    const mpz_class rest = target - a * a;
    if (sgn(rest) < 0) return std::nullopt;
    if (mpz_perfect_square_p(rest.get_mpz_t())) {
      mpz_class b;
      mpz_sqrt(b.get_mpz_t(), rest.get_mpz_t());
      const Rational x = Rational(a) / q;
      const Rational y = Rational(b) / q;
      return RPoint{circle.center().x + x, circle.center().y + y};
    }
  }
  return std::nullopt;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const RPoint& p) { return to_string(p.x) + " " + to_string(p.y); }

Rational parse_rational(std::string_view text) {
  auto fail = [&]() -> GeometryError {
    return GeometryError(GeometryError::Kind::parse, "malformed rational '" + std::string(text) + "'");
  };
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  const std::size_t num_start = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_start) throw fail();
  if (i < text.size()) {
    if (text[i] != '/') throw fail();
    const std::size_t den_start = ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_start || i != text.size()) throw fail();
  }
  std::string body(text);
  if (body.front() == '+') body.erase(0, 1);
  Rational out;
  if (out.set_str(body, 10) != 0 || sgn(out.get_den()) == 0) throw fail();
  out.canonicalize();
  return out;
}

RPoint parse_point(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) {
    throw GeometryError(GeometryError::Kind::parse, "point must be 'x,y', got '" + std::string(text) + "'");
  }
  return RPoint{parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1))};
}

}  // namespace circiso
