#include "circiso/classifier.hpp"

#include <numeric>
#include <random>
#include <stdexcept>

namespace circiso {

ConfigK validate_config(const RCircle& circle, const std::vector<RPoint>& points) {
  ConfigK config(circle, points);
  if (!config.collinear()) {
    throw ConfigError(ConfigError::Kind::not_collinear, "interior points are not collinear");
  }
  if (!config.ordered()) {
    throw ConfigError(ConfigError::Kind::not_ordered,
                      "interior points are not in monotone order along their line");
  }
  return config;
}

std::vector<SignatureVector> primitive_candidates(std::int64_t v2) {
  std::vector<SignatureVector> out;
  for (std::int64_t v1 = -(v2 - 1); v1 <= -1; ++v1) {
    const std::int64_t v3 = -v2 - v1;
    if (std::gcd(std::gcd(v1, v2), v3) == 1) out.push_back(SignatureVector{v1, v2, v3});
  }
  return out;
}

namespace {

void require_k3(const ConfigK& config) {
  if (config.l() != 3) throw ConfigError(ConfigError::Kind::bad_count, "classification needs exactly 3 points");
  if (!config.ordered()) {
    throw ConfigError(ConfigError::Kind::not_ordered, "classification needs collinear, ordered interior points");
  }
}

SignatureVector canonicalize(const SignatureVector& raw) { return raw[0] > raw[2] ? pi13(raw) : raw; }

}  // namespace

std::optional<PrimitiveCycle> find_primitive_cycle(const ConfigK& config, int v2_max) {
  require_k3(config);
  if (v2_max < 1) throw std::invalid_argument("find_primitive_cycle: v2_max must be >= 1");
  const RPoint c = off_line_point(config);
  for (std::int64_t v2 = 1; v2 <= v2_max; ++v2) {
    for (const auto& v : primitive_candidates(v2)) {
      if (stab_contains(config, c, word_from_signature(v))) return PrimitiveCycle{canonicalize(v), v};
    }
  }
  return std::nullopt;
}

ClassLabel classify(const ConfigK& config, int v2_max) {
  auto found = find_primitive_cycle(config, v2_max);
  if (!found) return NoCycleLabel{v2_max};
  const RPoint c = off_line_point(config);
  Word witness = word_from_signature(found->raw);
  if (!stab_contains(config, c, witness)) throw std::logic_error("classify: witness failed to re-verify");
  return CycleLabel{found->canonical, found->raw, std::move(witness), c};
}

std::optional<ConfigK> realize_by_closing(const SignatureVector& v, const Rational& c1x, const Rational& c2x,
                                          const RPoint& p0) {
  if (v.size() != 3 || !is_balanced(v) || v[2] != -1 || v[0] > -1) {
    throw std::invalid_argument("realize_by_closing: needs balanced v with v3 = -1 and v1 <= -1");
  }
  if (!(-1 < c1x && c1x < c2x && c2x < 1)) {
    throw std::invalid_argument("realize_by_closing: needs -1 < c1x < c2x < 1");
  }
  const RCircle unit = RCircle::unit();
  if (!on_circle(unit, p0) || sgn(p0.y) == 0) {
    throw std::invalid_argument("realize_by_closing: p0 must lie on the unit circle off the x-axis");
  }

  const RPoint c1{c1x, 0};
  const RPoint c2{c2x, 0};
  const Word g = canonical_word(v);
  RPoint q = p0;
  for (std::size_t i = 0; i + 1 < g.length(); ++i) q = reversion(unit, g[i] == 1 ? c1 : c2, q);

  const auto meet = line_line_intersection(q, p0, RPoint{0, 0}, RPoint{1, 0});
  if (meet.kind != LineIntersection::Kind::point) return std::nullopt;
  const RPoint c3 = *meet.point;
  if (!(c3.x > c2x) || !in_open_disk(unit, c3)) return std::nullopt;

  ConfigK config(unit, {c1, c2, c3});
  if (!is_cycle(config, v)) return std::nullopt;
  return config;
}

std::optional<ConfigK> realize_by_closing_any(const SignatureVector& v) {
  const std::vector<Rational> c1_grid{ratio(-1, 2), ratio(-3, 4), ratio(-9, 10), ratio(-1, 4),
                                      ratio(-1, 10)};
  const RPoint p0{0, 1};
  for (const Rational& c1x : c1_grid) {
    for (int j = 1; j < 8; ++j) {
      const Rational c2x = c1x + (1 - c1x) * ratio(j, 8);
      if (auto config = realize_by_closing(v, c1x, c2x, p0)) return config;
    }
  }
  return std::nullopt;
}

Rational closing_residual(const SignatureVector& v, const Rational& a) {
  const ConfigK config(RCircle::unit(), {RPoint{ratio(-1, 2), 0}, RPoint{a, 0}, RPoint{ratio(1, 2), 0}},
                       RPoint{0, 1});
  return act(config, RPoint{0, 1}, canonical_word(v)).x;
}

RealizationInterval realize_by_bisection(const SignatureVector& v_in, const Rational& width_bound) {
  if (sgn(width_bound) <= 0) throw std::invalid_argument("realize_by_bisection: width must be positive");
  // Cycles are closed under negation, so v2 < 0 is folded onto v2 > 0.
  const SignatureVector v = (v_in.size() == 3 && v_in[1] < 0) ? -v_in : v_in;
  canonical_word(v);  // validates the shape

  Rational delta(1, 1024);
  Rational lo;
  Rational hi;
  for (int attempt = 0;; ++attempt) {
    if (attempt == 64) throw std::logic_error("realize_by_bisection: no sign change near the ends");
    lo = ratio(-1, 2) + delta;
    hi = ratio(1, 2) - delta;
    if (sgn(closing_residual(v, lo)) > 0 && sgn(closing_residual(v, hi)) < 0) break;
    delta /= 2;
  }

  RealizationInterval out{v, lo, hi, false, std::nullopt};
  while (out.a_hi - out.a_lo > width_bound) {
    Rational mid = (out.a_lo + out.a_hi) / 2;
    const int s = sgn(closing_residual(v, mid));
    if (s == 0) {
      // The residual has a single root, so it keeps its sign on either side.
      const Rational half = width_bound / 2;
      if (mid - half > out.a_lo) out.a_lo = mid - half;
      if (mid + half < out.a_hi) out.a_hi = mid + half;
      out.exact_root = std::move(mid);
      break;
    }
    (s > 0 ? out.a_lo : out.a_hi) = std::move(mid);
  }
  out.residual_sign_change = sgn(closing_residual(v, out.a_lo)) > 0 && sgn(closing_residual(v, out.a_hi)) < 0;
  if (!out.residual_sign_change) throw std::logic_error("realize_by_bisection: lost the sign change");
  return out;
}

ConfigK avoid_all_cycles(int v2_max, std::uint64_t seed, int budget) {
  if (v2_max < 1) throw std::invalid_argument("avoid_all_cycles: v2_max must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> den_dist(1000, 100000);
  for (int attempt = 0; attempt < budget; ++attempt) {
    const long q = den_dist(rng);
    const long p = std::uniform_int_distribution<long>(1, q - 1)(rng);
    ConfigK config(RCircle::unit(), {RPoint{ratio(-1, 2), 0}, RPoint{0, 0}, RPoint{ratio(p, q), 0}});
    if (!find_primitive_cycle(config, v2_max)) return config;
  }
  throw std::runtime_error("avoid_all_cycles: sampling budget exhausted");
}

std::string to_string(const ClassLabel& label) {
  if (const auto* cycle = std::get_if<CycleLabel>(&label)) return "cycle " + to_string(cycle->v);
  return "no-cycle-upto " + std::to_string(std::get<NoCycleLabel>(label).v2_bound);
}

std::string to_string(const RealizationInterval& interval) {
  return to_string(interval.v) + " " + to_string(interval.a_lo) + " " + to_string(interval.a_hi);
}

}  // namespace circiso
