#pragma once

// Classification of circles with three collinear interior points.
//
// A K_3 configuration either admits a primitive cycle v (balanced, v2 >= 1,
// v1 <= v3 <= -1, gcd 1, unique per configuration) or admits no nonzero
// cycle at all. Searching is bounded by v2, so "no cycle" is only ever
// reported relative to the bound.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "circiso/action.hpp"

namespace circiso {

/// Checks distinctness, interiority, collinearity and monotone order; each
/// failure raises ConfigError with its own kind.
ConfigK validate_config(const RCircle& circle, const std::vector<RPoint>& points);

struct CycleLabel {
  SignatureVector v;       // canonical: v1 <= v3
  SignatureVector raw;     // the same cycle in the configuration's own indexing
  Word witness_word;       // signature `raw`
  RPoint witness_point;    // off-line point fixed by witness_word
};

struct NoCycleLabel {
  int v2_bound;
};

using ClassLabel = std::variant<CycleLabel, NoCycleLabel>;

struct PrimitiveCycle {
  SignatureVector canonical;
  SignatureVector raw;
};

/// Candidate primitive vectors with the given v2, in search order: v1 from
/// -(v2-1) up to -1, v3 = -v2 - v1, gcd 1.
std::vector<SignatureVector> primitive_candidates(std::int64_t v2);

/// First cycle in ascending v2 order, up to v2_max.
std::optional<PrimitiveCycle> find_primitive_cycle(const ConfigK& config, int v2_max);

ClassLabel classify(const ConfigK& config, int v2_max);

/// Unit circle with c_1 = (c1x, 0), c_2 = (c2x, 0): applies every reversion of
/// canonical_word(v) except the last to p0 and places c_3 where the chord back
/// to p0 crosses the x-axis. Requires v3 = -1, v1 <= -1, balanced v; returns
/// nullopt when c_3 does not land beyond c_2 inside the circle.
std::optional<ConfigK> realize_by_closing(const SignatureVector& v, const Rational& c1x, const Rational& c2x,
                                          const RPoint& p0);

/// realize_by_closing over a deterministic grid of (c1x, c2x, p0).
std::optional<ConfigK> realize_by_closing_any(const SignatureVector& v);

struct RealizationInterval {
  SignatureVector v;
  Rational a_lo;
  Rational a_hi;
  bool residual_sign_change = false;
  std::optional<Rational> exact_root;  // set when a midpoint closed the cycle exactly
};

/// x-coordinate of (0,1) moved by canonical_word(v) on the unit circle with
/// c_1 = (-1/2,0), c_2 = (a,0), c_3 = (1/2,0). Zero exactly when v is a cycle.
Rational closing_residual(const SignatureVector& v, const Rational& a);

/// Bisects closing_residual from a positive value near a = -1/2 to a negative
/// value near a = 1/2 until the bracket is no wider than width_bound.
RealizationInterval realize_by_bisection(const SignatureVector& v, const Rational& width_bound);

/// Unit circle, c_1 = (-1/2,0), c_2 = (0,0), c_3 = (a,0) with a drawn from the
/// seed until no cycle with v2 <= v2_max exists.
ConfigK avoid_all_cycles(int v2_max, std::uint64_t seed, int budget = 100);

/// "cycle v1 v2 v3" or "no-cycle-upto B".
std::string to_string(const ClassLabel& label);
/// "v1 v2 v3 a_lo a_hi".
std::string to_string(const RealizationInterval& interval);

}  // namespace circiso
