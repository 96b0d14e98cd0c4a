#include "checks.hpp"

#include <chrono>
#include <cmath>
#include <map>
#include <set>

#include "circiso/hull.hpp"
#include "circiso/isomorphism.hpp"
#include "support.hpp"

namespace circiso::testing {

namespace {

std::string str(const SignatureVector& v) { return "(" + to_string(v) + ")"; }

const SignatureVector kSymmetricCycle{-1, 2, -1};

}  // namespace

Outcome symmetric_fixture_check() {
  Outcome out;
  const ConfigK config = symmetric_fixture();
  const auto start = std::chrono::steady_clock::now();
  const ClassLabel label = classify(config, 8);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  const auto* cycle = std::get_if<CycleLabel>(&label);
  if (!cycle) return out.fail("classify returned " + to_string(label)), out;
  if (cycle->v != kSymmetricCycle) out.fail("label " + to_string(label));
  if (!stab_contains(config, cycle->witness_point, cycle->witness_word)) out.fail("witness does not close");
  if (signature(cycle->witness_word) != cycle->raw) out.fail("witness word has the wrong signature");

  // The hand-computed chain from (0,1) under 2,1,2,3.
  const std::vector<RPoint> chain{{0, -1}, {ratio(-4, 5), ratio(3, 5)}, {ratio(4, 5), ratio(-3, 5)}, {0, 1}};
  RPoint c{0, 1};
  const Word g(3, {2, 1, 2, 3});
  for (std::size_t i = 0; i < g.length(); ++i) {
    c = reversion(config.circle(), config.point(g[i]), c);
    if (c != chain[i]) out.fail("chain step " + std::to_string(i + 1) + " gave " + to_string(c));
  }
  if (seconds >= 1.0) out.fail("classify took " + std::to_string(seconds) + " s");
  out.note("cycle -1 2 -1, witness " + to_string(cycle->witness_word) + ", " + std::to_string(seconds * 1000) + " ms");
  return out;
}

Outcome closing_corpus_check(int extra_points) {
  Outcome out;
  Rng rng(20240611);
  const std::vector<SignatureVector> corpus{{-1, 2, -1}, {-2, 3, -1}, {-3, 4, -1}, {-4, 5, -1}};
  int verified = 0;
  for (const auto& v : corpus) {
    const auto config = realize_by_closing_any(v);
    if (!config) {
      out.fail("no closing configuration for " + str(v));
      continue;
    }
    const ClassLabel label = classify(*config, 8);
    const auto* cycle = std::get_if<CycleLabel>(&label);
    if (!cycle || cycle->v != v) out.fail(str(v) + " classified as " + to_string(label));
    const Word g = word_from_signature(v);
    const Word h = canonical_word(v);
    int found = 0;
    while (found < extra_points) {
      const RPoint p = random_circle_point(rng, config->circle(), config->base_point());
      if (halfplane_side(*config, p) == HalfPlaneSide::on_line) continue;
      ++found;
      if (!stab_contains(*config, p, g) || !stab_contains(*config, p, h)) {
        out.fail("porism fails for " + str(v) + " at " + to_string(p));
      }
      ++verified;
    }
  }
  out.note("4 vectors realized and reclassified; porism checked at " + std::to_string(verified) + " points");
  return out;
}

namespace {

// phi(a) in doubles, following the chord chain with the float oracle.
double phi_float(const SignatureVector& v, double a) {
  const RCircle unit = RCircle::unit();
  const double xs[] = {-0.5, a, 0.5};
  double x = 0.0;
  double y = 1.0;
  for (Letter letter : canonical_word(v)) {
    const RPoint X{Rational(xs[letter - 1]), 0};
    const DPoint next = reversion_oracle(unit, X, RPoint{Rational(x), Rational(y)});
    x = next.x;
    y = next.y;
  }
  return x;
}

}  // namespace

Outcome bisection_check(int width_exponent, int grid_points) {
  Outcome out;
  const SignatureVector v{-2, 3, -1};
  mpz_class den = 1;
  den <<= width_exponent;
  const Rational width(mpz_class(1), den);
  const RealizationInterval interval = realize_by_bisection(v, width);
  if (!(ratio(-1, 2) < interval.a_lo && interval.a_lo < interval.a_hi && interval.a_hi < ratio(1, 2))) {
    out.fail("interval out of range: " + to_string(interval));
  }
  if (interval.a_hi - interval.a_lo > width) out.fail("interval wider than 2^-" + std::to_string(width_exponent));
  if (!(sgn(closing_residual(v, interval.a_lo)) > 0 && sgn(closing_residual(v, interval.a_hi)) < 0)) {
    out.fail("endpoint signs do not certify a root");
  }
  if (!interval.residual_sign_change) out.fail("sign change flag not set");

  int changes = 0;
  int last = 0;
  Rational change_lo;
  Rational change_hi;
  Rational previous;
  for (int k = 1; k <= grid_points; ++k) {
    const Rational a = ratio(-1, 2) + ratio(k, grid_points + 1);
    const Rational phi = closing_residual(v, a);
    const int s = sgn(phi);
    const double approx = phi_float(v, a.get_d());
    if (std::abs(approx) > 1e-6 && (approx > 0) != (s > 0)) out.fail("float oracle disagrees at " + to_string(a));
    if (s != 0 && last != 0 && s != last) {
      ++changes;
      change_lo = previous;
      change_hi = a;
    }
    if (s != 0) {
      last = s;
      previous = a;
    }
  }
  if (changes != 1) out.fail("grid scan saw " + std::to_string(changes) + " sign changes");
  if (changes == 1 && !(change_lo <= interval.a_lo && interval.a_hi <= change_hi)) {
    out.fail("bisection interval lies outside the grid bracket");
  }

  const SignatureVector sym = kSymmetricCycle;
  const RealizationInterval centered = realize_by_bisection(sym, width);
  if (!(centered.a_lo <= 0 && 0 <= centered.a_hi)) out.fail("(-1,2,-1) interval misses 0: " + to_string(centered));
  if (sgn(closing_residual(sym, 0)) != 0) out.fail("phi(0) is not exactly 0");
  out.note("(-2,3,-1) root in [" + std::to_string(interval.a_lo.get_d()) + ", " + std::to_string(interval.a_hi.get_d()) +
           "], one sign change on " + std::to_string(grid_points) + " grid points");
  return out;
}

Outcome word_suite(std::uint64_t seed, int samples, int exhaustive_length) {
  Outcome out;
  Rng rng(seed);
  for (int i = 0; i < samples && out.ok; ++i) {
    const int l = static_cast<int>(uniform(rng, 2, 4));
    const Word a = random_word(rng, l, 12);
    const Word b = random_word(rng, l, 12);
    const Word c = random_word(rng, l, 12);
    const Word e(l);
    if ((a * b) * c != a * (b * c)) out.fail("associativity: " + to_string(a) + " | " + to_string(b) + " | " + to_string(c));
    if (a * e != a || e * a != a) out.fail("identity: " + to_string(a));
    if (a * inverse(a) != e || inverse(a) * a != e) out.fail("inverse: " + to_string(a));

    const auto raw = random_raw(rng, l, 24);
    const Word r = reduce(raw, l);
    if (r.letters() != greedy_reduce(raw, true) || r.letters() != greedy_reduce(raw, false)) {
      out.fail("reduction not confluent on a raw sequence of length " + std::to_string(raw.size()));
    }

    const SignatureVector sa = signature(a);
    if (sa.entries() != signature_oracle(a.letters(), l)) out.fail("signature of " + to_string(a));
    const auto total = sa.sum();
    if (total != static_cast<std::int64_t>(a.length() % 2)) out.fail("signature sum of " + to_string(a));
    if (a.length() % 2 == 0 && signature(a * b) != sa + signature(b)) out.fail("signature additivity");
    if (signature(r) != SignatureVector(signature_oracle(raw, l))) out.fail("reduction changed the signature");

    const Word n = normal_form(a);
    if (normal_form(n) != n) out.fail("normal form not idempotent on " + to_string(a));
    if (signature(n) != sa) out.fail("normal form changed the signature of " + to_string(a));
    if (n != word_from_signature(sa)) out.fail("normal form differs from the signature word for " + to_string(a));
    std::map<Letter, int> parity;
    Letter prev_odd = 0;
    Letter prev_even = 0;
    for (std::size_t m = 0; m < n.length(); ++m) {
      const int p = static_cast<int>(m % 2);
      auto [it, fresh] = parity.emplace(n[m], p);
      if (!fresh && it->second != p) out.fail("letter on both parities in " + to_string(n));
      Letter& prev = p == 0 ? prev_odd : prev_even;
      if (n[m] < prev) out.fail("normal form not sorted: " + to_string(n));
      prev = n[m];
    }
  }

  // Equal signatures give equal normal forms, exhaustively.
  std::map<SignatureVector, Word> by_signature;
  std::size_t words = 0;
  for (const Word& g : words_up_to(3, exhaustive_length)) {
    ++words;
    const Word n = normal_form(g);
    auto [it, fresh] = by_signature.emplace(signature(g), n);
    if (!fresh && it->second != n) out.fail("two normal forms for signature " + to_string(signature(g)));
  }

  int realized = 0;
  for (std::int64_t v1 = -6; v1 <= 6; ++v1)
    for (std::int64_t v2 = -6; v2 <= 6; ++v2) {
      const std::int64_t v3 = -v1 - v2;
      if (v3 < -6 || v3 > 6) continue;
      const SignatureVector v{v1, v2, v3};
      const Word g = word_from_signature(v);
      for (std::size_t m = 1; m < g.length(); ++m)
        if (g[m] == g[m - 1]) out.fail("reducible word for " + str(v));
      if (signature(g) != v) out.fail("word_from_signature" + str(v));
      ++realized;
    }
  out.note(std::to_string(samples) + " random samples, " + std::to_string(words) + " words of length <= " +
           std::to_string(exhaustive_length) + ", " + std::to_string(realized) + " signatures realized");
  return out;
}

Outcome geometry_suite(std::uint64_t seed, int reversions, int triple_instances) {
  Outcome out;
  Rng rng(seed);
  double worst = 0.0;
  for (int i = 0; i < reversions; ++i) {
    const auto [circle, on] = random_circle(rng);
    const RPoint X = random_interior_point(rng, circle);
    const RPoint c = random_circle_point(rng, circle, on);
    if (!on_circle(circle, c)) {
      out.fail("generator produced an off-circle point");
      continue;
    }
    const RPoint r = reversion(circle, X, c);
    if (!on_circle(circle, r)) out.fail("reversion left the circle");
    if (reversion(circle, X, r) != c) out.fail("reversion is not an involution");
    if (!is_between(c, X, r)) out.fail("X is not strictly between c and its image");
    const DPoint f = reversion_oracle(circle, X, c);
    const double err = std::hypot(f.x - r.x.get_d(), f.y - r.y.get_d()) / std::max(1.0, radius_approx(circle));
    worst = std::max(worst, err);
    if (err > 1e-9) out.fail("float oracle differs by " + std::to_string(err));
  }

  for (int i = 0; i < triple_instances; ++i) {
    const auto [circle, on] = random_circle(rng);
    const ConfigK config(circle, random_collinear_points(rng, circle, 3), on);
    const Word f(3, {1, 2, 3});
    const RPoint c = random_circle_point(rng, circle, on);
    const RPoint fc = act(config, c, f);
    if (act(config, fc, f) != c) out.fail("triple composition is not an involution");
    if (fc == c) out.fail("triple composition has a fixed point");

    RPoint c2 = random_circle_point(rng, circle, on);
    while (c2 == c || c2 == fc) c2 = random_circle_point(rng, circle, on);
    const RPoint fc2 = act(config, c2, f);
    const auto meet = line_line_intersection(c, fc, c2, fc2);
    if (meet.kind != LineIntersection::Kind::point) {
      out.fail("chords of the triple composition do not cross");
      continue;
    }
    const RPoint& y = *meet.point;
    if (!collinear(config.point(1), config.point(3), y)) out.fail("chord crossing is off the centers' line");
    if (!in_open_disk(circle, y)) out.fail("chord crossing is outside the disk");
    const RPoint c3 = random_circle_point(rng, circle, on);
    if (!collinear(c3, act(config, c3, f), y)) out.fail("a third chord misses the crossing point");
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1e", worst);
  out.note(std::to_string(reversions) + " reversions (float oracle max rel. error " + buf + "), " +
           std::to_string(triple_instances) + " triple compositions");
  return out;
}

Outcome cycle_arithmetic_check(int entry_bound) {
  Outcome out;
  const ConfigK config = symmetric_fixture();
  std::vector<SignatureVector> balanced;
  for (std::int64_t v1 = -entry_bound; v1 <= entry_bound; ++v1)
    for (std::int64_t v2 = -entry_bound; v2 <= entry_bound; ++v2) {
      const std::int64_t v3 = -v1 - v2;
      if (v3 >= -entry_bound && v3 <= entry_bound) balanced.push_back(SignatureVector{v1, v2, v3});
    }
  auto in_range = [&](const SignatureVector& v) {
    for (auto x : v.entries())
      if (x < -entry_bound || x > entry_bound) return false;
    return true;
  };

  std::set<SignatureVector> detected;
  for (const auto& v : balanced)
    if (is_cycle(config, v)) detected.insert(v);

  for (const auto& v : detected) {
    if (!detected.contains(-v)) out.fail("-v missing for " + str(v));
    for (const auto& w : detected) {
      if (in_range(v + w) && !detected.contains(v + w)) out.fail("sum missing: " + str(v) + " + " + str(w));
      if (in_range(v - w) && !detected.contains(v - w)) out.fail("difference missing: " + str(v) + " - " + str(w));
    }
    if (!v.is_zero()) {
      if (v[0] * v[1] * v[2] == 0) out.fail("cycle with a zero entry: " + str(v));
      if (std::abs(v[1]) != std::abs(v[0]) + std::abs(v[2])) out.fail("cycle of the wrong shape: " + str(v));
      if (!is_balanced(v)) out.fail("unbalanced cycle " + str(v));
    }
    // For this fixture every cycle is a multiple of (-1,2,-1).
    if (v[0] != v[2] || v[1] != -2 * v[0]) out.fail("cycle not a multiple of (-1,2,-1): " + str(v));
  }
  int scaled = 0;
  for (const auto& v : balanced) {
    const bool base = detected.contains(v);
    for (int k : {2, 3}) {
      ++scaled;
      if (is_cycle(config, k * v) != base) out.fail("scaling by " + std::to_string(k) + " changes " + str(v));
    }
  }
  if (detected.size() != static_cast<std::size_t>(2 * (entry_bound / 2) + 1)) {
    out.fail("expected " + std::to_string(2 * (entry_bound / 2) + 1) + " cycles, found " + std::to_string(detected.size()));
  }
  out.note(std::to_string(detected.size()) + " cycles among " + std::to_string(balanced.size()) +
           " balanced vectors; " + std::to_string(scaled) + " scalings checked");
  return out;
}

Outcome small_l_suite(std::uint64_t seed, int pairs, int l2_configs, int max_word_length) {
  Outcome out;
  Rng rng(seed);
  for (int i = 0; i < pairs; ++i) {
    for (int l : {1, 2}) {
      const ConfigK s = random_collinear_config(rng, l);
      const ConfigK r = random_collinear_config(rng, l);
      const IsoVerdict verdict = decide_iso(s, r, 8);
      const auto* iso = std::get_if<Isomorphic>(&verdict);
      if (!iso || iso->v) out.fail("l=" + std::to_string(l) + " pair not trivially isomorphic");
    }
  }
  const auto words = words_up_to(2, max_word_length);
  std::size_t tested = 0;
  for (int i = 0; i < l2_configs; ++i) {
    const ConfigK config = random_collinear_config(rng, 2);
    RPoint c = random_circle_point(rng, config.circle(), config.base_point());
    while (halfplane_side(config, c) == HalfPlaneSide::on_line) {
      c = random_circle_point(rng, config.circle(), config.base_point());
    }
    for (const Word& g : words) {
      if (g.empty()) continue;
      ++tested;
      if (act(config, c, g) == c) out.fail("l=2 word " + to_string(g) + " fixes an off-line point");
    }
  }
  out.note(std::to_string(2 * pairs) + " l=1/l=2 pairs trivially isomorphic; " + std::to_string(tested) +
           " l=2 word actions move their point");
  return out;
}

Outcome iso_end_to_end_check(std::uint64_t seed, int subsamples) {
  Outcome out;
  Rng rng(seed);
  const ConfigK s = symmetric_fixture();
  const ConfigK r = similar_config(s, 2, RPoint{3, -1}, false);
  const IsoVerdict verdict = decide_iso(s, r, 8);
  const auto* iso = std::get_if<Isomorphic>(&verdict);
  if (!iso || !iso->v || *iso->v != kSymmetricCycle) return out.fail("verdict " + to_string(verdict)), out;

  std::optional<PartialIsoTable> built;
  try {
    built = build_partial_iso(s, r, verdict, words_up_to(3, 3), 2);
  } catch (const std::exception& e) {
    return out.fail(std::string("table construction: ") + e.what()), out;
  }
  const PartialIsoTable& table = *built;
  std::set<RPoint> sources;
  std::set<RPoint> targets;
  std::vector<std::size_t> exact_rows;
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& [a, b] = table.rows[i];
    if (a.endpoint != 0 || b.endpoint != 0) continue;
    exact_rows.push_back(i);
    if (!sources.insert(a.point).second || !targets.insert(b.point).second) out.fail("table is not injective");
  }
  for (int i = 1; i <= 3; ++i) {
    bool matched = false;
    for (const auto& [a, b] : table.rows) matched = matched || (a.point == s.point(i) && b.point == r.point(table.sigma(i)));
    if (!matched) out.fail("c_" + std::to_string(i) + " is not sent to d_sigma(" + std::to_string(i) + ")");
  }
  if (!table_preserves_betweenness(table)) out.fail("full triple check failed");

  std::vector<std::vector<std::size_t>> windows;
  for (std::size_t i = 0; i + 8 <= exact_rows.size(); i += 8) windows.emplace_back(exact_rows.begin() + i, exact_rows.begin() + i + 8);
  for (int k = 0; k < subsamples; ++k) {
    std::vector<std::size_t> pick = exact_rows;
    std::shuffle(pick.begin(), pick.end(), rng);
    pick.resize(8);
    windows.push_back(pick);
  }
  for (const auto& w : windows) {
    std::vector<RPoint> a;
    std::vector<RPoint> b;
    for (std::size_t i : w) {
      a.push_back(table.rows[i].first.point);
      b.push_back(table.rows[i].second.point);
    }
    if (!preserves_betweenness(a, b)) out.fail("table map fails on an 8-point subsample");
    if (!brute_force_iso(a, b)) out.fail("brute force finds no isomorphism on an 8-point subsample");
  }

  // Stabilizer matching at the first seed pair.
  const auto& [x, y] = table.seeds.front();
  int members = 0;
  for (int k = 0; k < 20; ++k) {
    Word g = random_word(rng, 3, 8);
    if (k % 2 == 0) {
      const Word h = random_word(rng, 3, 5);
      const int mult = k % 4 == 0 ? 1 : -2;
      g = h * word_from_signature(mult * kSymmetricCycle) * inverse(h);
    }
    const bool left = stab_contains(s, x, g);
    if (left != stab_contains(r, y, apply_letter_permutation(g, table.sigma))) out.fail("stabilizers differ at " + to_string(g));
    members += left;
  }
  if (members < 10) out.fail("stabilizer sample has too few members");

  const ConfigK rotated = similar_config(s, ratio(3, 2), RPoint{ratio(1, 3), -2}, true);
  if (to_string(decide_iso(s, rotated, 8)) != "isomorphic v=(-1,2,-1)") out.fail("rotated copy not isomorphic");

  const auto other = realize_by_closing_any(SignatureVector{-2, 3, -1});
  if (!other) return out.fail("no (-2,3,-1) configuration"), out;
  if (!std::holds_alternative<NotIsomorphic>(decide_iso(s, *other, 8))) out.fail("(-1,2,-1) vs (-2,3,-1) not refuted");
  out.note(std::to_string(table.rows.size()) + " table rows, " + std::to_string(windows.size()) +
           " 8-point subsamples, " + std::to_string(members) + "/20 stabilizer members matched");
  return out;
}

Outcome l2_counterexample_check() {
  Outcome out;
  const ConfigK config = validate_config(RCircle::unit(), {RPoint{ratio(-1, 2), 0}, RPoint{ratio(1, 2), 0}});
  const OrdinalHull hull = collinear_hull(config);
  if (hull.size() != 4 || !hull[0].exact || !hull[3].exact) return out.fail("unexpected hull"), out;
  const RPoint x1 = hull[0].point;
  const RPoint x2 = hull[3].point;
  const RPoint p = off_line_point(config);
  const RPoint q = act(config, p, Word(2, {1}));
  const std::vector<RPoint> sample{x1, config.point(1), config.point(2), x2, p, q};
  const std::vector<RPoint> swapped{x2, config.point(1), config.point(2), x1, p, q};

  // (ii'): the map fixes c_1, c_2 and preserves extreme points.
  if (swapped[1] != sample[1] || swapped[2] != sample[2]) out.fail("interior points not fixed");
  for (std::size_t i = 0; i < sample.size(); ++i) {
    if (is_extreme_in_sample(sample, sample[i]) != is_extreme_in_sample(swapped, swapped[i])) {
      out.fail("extreme points not preserved");
    }
  }
  // (III): stabilizers match, since p and q are fixed and sigma is the identity.
  for (const Word& g : words_up_to(2, 10)) {
    if (stab_contains(config, p, g) != stab_contains(config, swapped[4], g)) out.fail("stabilizers differ");
  }
  if (preserves_betweenness(sample, swapped)) out.fail("the endpoint swap passes the triple check");
  if (!brute_force_iso(sample, sample)) out.fail("no isomorphism of the sample with itself");
  out.note("endpoint swap rejected on the 6-point sample; identity accepted");
  return out;
}

Outcome o_candidate_check(int v2_bound) {
  Outcome out;
  const ConfigK a = avoid_all_cycles(v2_bound, 1);
  const ConfigK b = avoid_all_cycles(v2_bound, 2);
  for (const ConfigK* config : {&a, &b}) {
    const ClassLabel label = classify(*config, v2_bound);
    const auto* none = std::get_if<NoCycleLabel>(&label);
    if (!none || none->v2_bound != v2_bound) out.fail("candidate classified as " + to_string(label));
  }
  const IsoVerdict verdict = decide_iso(a, b, v2_bound);
  const auto* cond = std::get_if<ConditionallyIsomorphic>(&verdict);
  if (!cond || cond->v2_bound != v2_bound) out.fail("verdict " + to_string(verdict));
  if (std::holds_alternative<Isomorphic>(decide_iso(a, a, v2_bound))) out.fail("self-comparison claimed Isomorphic");
  out.note("c3 = " + to_string(a.point(3).x) + " and " + to_string(b.point(3).x) + ": " + to_string(verdict));
  return out;
}

}  // namespace circiso::testing
