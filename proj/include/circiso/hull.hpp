#pragma once

// Collinear hulls of collinear interior points and finite betweenness checks.
//
// For collinear c_1..c_l (l >= 2) the hull inside circle-plus-points is the
// interior points together with the two points where their line meets the
// circle. Those two endpoints are usually irrational, so the hull is kept as
// an ordered token list; only their order along the line is ever needed.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "circiso/action.hpp"

namespace circiso {

struct HullToken {
  enum class Role { endpoint_low, interior, endpoint_high };

  Role role;
  int index = 0;  // 1-based interior index; 0 for endpoints
  RPoint point;   // exact interior point; exact endpoint when `exact` is set
  bool exact = true;
  double approx_x = 0.0;
  double approx_y = 0.0;

  bool is_endpoint() const noexcept { return role != Role::interior; }
};

class OrdinalHull {
 public:
  OrdinalHull() = default;
  OrdinalHull(std::vector<HullToken> tokens, RPoint origin, RPoint direction);

  const std::vector<HullToken>& tokens() const noexcept { return tokens_; }
  std::size_t size() const noexcept { return tokens_.size(); }
  const HullToken& operator[](std::size_t i) const { return tokens_[i]; }

  /// Interior indices in line order.
  std::vector<int> interior_order() const;

  /// Line through the interior points (meaningless for a single point).
  const RPoint& origin() const noexcept { return origin_; }
  const RPoint& direction() const noexcept { return direction_; }

 private:
  std::vector<HullToken> tokens_;
  RPoint origin_;
  RPoint direction_;
};

/// Tokens sorted lexicographically along the line: [E-, c_pi(1) .. c_pi(l), E+].
/// A single interior point is its own hull. Throws for non-collinear points.
OrdinalHull collinear_hull(const ConfigK& config);

struct HullMap {
  /// token_image[k] = index of the token of the target hull that token k maps to.
  std::vector<std::size_t> token_image;
  /// Interior permutation: c_i -> d_sigma(i).
  LetterPermutation sigma;
  /// True when line order is reversed by the map.
  bool reversed;
};

/// The order-preserving (reverse = false) or order-reversing token bijection,
/// or nullopt when the hulls have different sizes.
std::optional<HullMap> hull_isomorphism(const OrdinalHull& a, const OrdinalHull& b, bool reverse = false);

/// A point of a finite sample: exact, or a hull endpoint known only by its
/// position on the interior line.
struct SamplePoint {
  RPoint point;
  int endpoint = 0;  // -1 low endpoint, +1 high endpoint, 0 exact point

  static SamplePoint exact(RPoint p) { return {std::move(p), 0}; }
  static SamplePoint from_token(const HullToken& token);

  friend bool operator==(const SamplePoint& a, const SamplePoint& b) {
    return a.endpoint == b.endpoint && (a.endpoint != 0 || a.point == b.point);
  }
};

/// Strict betweenness on samples drawn from circle-plus-collinear-points.
/// Triples containing a non-exact endpoint are decided by line order: they
/// hold only when all three lie on the hull line with x strictly inside.
bool sample_between(const OrdinalHull& hull, const SamplePoint& a, const SamplePoint& x, const SamplePoint& b);

inline constexpr std::size_t kBruteForceCap = 8;

/// Exhaustive search for a bijection A -> B preserving and reflecting strict
/// betweenness; returns the lexicographically first as image indices.
std::optional<std::vector<std::size_t>> brute_force_iso(std::span<const RPoint> a, std::span<const RPoint> b,
                                                        std::size_t cap = kBruteForceCap);

/// Two-sided check of the specific map a[i] -> b[i] on all ordered triples.
bool preserves_betweenness(std::span<const RPoint> a, std::span<const RPoint> b);

bool is_extreme_in_sample(std::span<const RPoint> sample, const RPoint& c);

}  // namespace circiso
