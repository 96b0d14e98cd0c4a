#include "circiso/hull.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace circiso {

OrdinalHull::OrdinalHull(std::vector<HullToken> tokens, RPoint origin, RPoint direction)
    : tokens_(std::move(tokens)), origin_(std::move(origin)), direction_(std::move(direction)) {}

std::vector<int> OrdinalHull::interior_order() const {
  std::vector<int> out;
  for (const auto& token : tokens_) {
    if (!token.is_endpoint()) out.push_back(token.index);
  }
  return out;
}

OrdinalHull collinear_hull(const ConfigK& config) {
  const auto& pts = config.points();
  if (config.l() == 1) {
    HullToken only{HullToken::Role::interior, 1, pts[0], true, pts[0].x.get_d(), pts[0].y.get_d()};
    return OrdinalHull({only}, pts[0], RPoint{0, 0});
  }
  if (!config.collinear()) {
    throw ConfigError(ConfigError::Kind::not_collinear, "collinear hull of non-collinear points is not supported");
  }

  const RPoint origin = pts.front();
  RPoint dir = pts.back() - pts.front();
  if (dir < RPoint{0, 0}) dir = Rational(-1) * dir;

  std::vector<HullToken> interior;
  for (int i = 1; i <= config.l(); ++i) {
    const RPoint& p = config.point(i);
    interior.push_back({HullToken::Role::interior, i, p, true, p.x.get_d(), p.y.get_d()});
  }
  std::sort(interior.begin(), interior.end(),
            [](const HullToken& a, const HullToken& b) { return a.point < b.point; });

  // origin + s dir on the circle: A s^2 + B s + C = 0 with C < 0.
  const RPoint w = origin - config.circle().center();
  const Rational A = norm_sq(dir);
  const Rational B = 2 * dot(w, dir);
  const Rational C = norm_sq(w) - config.circle().radius_sq();
  const Rational disc = B * B - 4 * A * C;
  auto endpoint = [&](HullToken::Role role, int sign) {
    HullToken token{role, 0, RPoint{0, 0}, false, 0.0, 0.0};
    if (auto root = exact_sqrt(disc)) {
      const Rational s = (-B + sign * *root) / (2 * A);
      token.point = origin + s * dir;
      token.exact = true;
      token.approx_x = token.point.x.get_d();
      token.approx_y = token.point.y.get_d();
    } else {
      const double s = (-B.get_d() + sign * std::sqrt(disc.get_d())) / (2 * A.get_d());
      token.approx_x = origin.x.get_d() + s * dir.x.get_d();
      token.approx_y = origin.y.get_d() + s * dir.y.get_d();
    }
    return token;
  };

  std::vector<HullToken> tokens;
  tokens.push_back(endpoint(HullToken::Role::endpoint_low, -1));
  tokens.insert(tokens.end(), interior.begin(), interior.end());
  tokens.push_back(endpoint(HullToken::Role::endpoint_high, +1));
  return OrdinalHull(std::move(tokens), origin, dir);
}

std::optional<HullMap> hull_isomorphism(const OrdinalHull& a, const OrdinalHull& b, bool reverse) {
  if (a.size() != b.size() || a.size() == 0) return std::nullopt;
  const std::size_t n = a.size();
  std::vector<std::size_t> image(n);
  std::vector<Letter> sigma(a.interior_order().size());
  for (std::size_t k = 0; k < n; ++k) {
    image[k] = reverse ? n - 1 - k : k;
    if (!a[k].is_endpoint()) sigma[static_cast<std::size_t>(a[k].index - 1)] = b[image[k]].index;
  }
  return HullMap{std::move(image), LetterPermutation(std::move(sigma)), reverse && n > 1};
}

SamplePoint SamplePoint::from_token(const HullToken& token) {
  if (token.exact) return exact(token.point);
  return {RPoint{0, 0}, token.role == HullToken::Role::endpoint_low ? -1 : 1};
}

namespace {

// Position along the hull line; endpoints sit at -inf / +inf.
struct LineRank {
  int infinity;
  Rational offset;

  friend bool operator<(const LineRank& a, const LineRank& b) {
    if (a.infinity != b.infinity) return a.infinity < b.infinity;
    return a.infinity == 0 && a.offset < b.offset;
  }
};

}  // namespace

bool sample_between(const OrdinalHull& hull, const SamplePoint& a, const SamplePoint& x, const SamplePoint& b) {
  if (a.endpoint == 0 && x.endpoint == 0 && b.endpoint == 0) return is_between(a.point, x.point, b.point);
  if (hull.size() < 3) throw std::invalid_argument("sample_between: hull has no endpoints");

  const RPoint& origin = hull.origin();
  const RPoint& dir = hull.direction();
  auto rank = [&](const SamplePoint& p) -> std::optional<LineRank> {
    if (p.endpoint != 0) return LineRank{p.endpoint, 0};
    if (sgn(cross(dir, p.point - origin)) != 0) return std::nullopt;
    return LineRank{0, dot(p.point - origin, dir)};
  };
  const auto ra = rank(a);
  const auto rx = rank(x);
  const auto rb = rank(b);
  if (!ra || !rx || !rb) return false;
  return (*ra < *rx && *rx < *rb) || (*rb < *rx && *rx < *ra);
}

namespace {

std::vector<bool> betweenness_table(std::span<const RPoint> pts) {
  const std::size_t n = pts.size();
  std::vector<bool> table(n * n * n, false);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t b = 0; b < n; ++b) table[(a * n + x) * n + b] = is_between(pts[a], pts[x], pts[b]);
  return table;
}

}  // namespace

std::optional<std::vector<std::size_t>> brute_force_iso(std::span<const RPoint> a, std::span<const RPoint> b,
                                                        std::size_t cap) {
  if (a.size() != b.size()) throw std::invalid_argument("brute_force_iso: sets differ in size");
  if (a.size() > cap) {
    throw std::invalid_argument("brute_force_iso: " + std::to_string(a.size()) + " points exceed the cap of " +
                                std::to_string(cap));
  }
  const std::size_t n = a.size();
  const auto ta = betweenness_table(a);
  const auto tb = betweenness_table(b);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j)
        for (std::size_t k = 0; k < n && ok; ++k)
          ok = ta[(i * n + j) * n + k] == tb[(perm[i] * n + perm[j]) * n + perm[k]];
    if (ok) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

bool preserves_betweenness(std::span<const RPoint> a, std::span<const RPoint> b) {
  if (a.size() != b.size()) throw std::invalid_argument("preserves_betweenness: sets differ in size");
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (is_between(a[i], a[j], a[k]) != is_between(b[i], b[j], b[k])) return false;
  return true;
}

bool is_extreme_in_sample(std::span<const RPoint> sample, const RPoint& c) {
  if (std::find(sample.begin(), sample.end(), c) == sample.end()) {
    throw std::invalid_argument("is_extreme_in_sample: point is not in the sample");
  }
  for (const RPoint& a : sample)
    for (const RPoint& b : sample)
      if (is_between(a, c, b)) return false;
  return true;
}

}  // namespace circiso
