#include "circiso/isomorphism.hpp"

#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace circiso {

IsoVerdict decide_iso(const ConfigK& source, const ConfigK& target, int v2_max) {
  if (source.l() != target.l()) {
    throw ConfigError(ConfigError::Kind::bad_count, "configurations have different numbers of interior points");
  }
  if (source.l() < 1 || source.l() > 3) {
    throw ConfigError(ConfigError::Kind::bad_count, "only 1, 2 or 3 interior points are supported");
  }
  if (source.l() <= 2) return Isomorphic{std::nullopt};

  ClassLabel ls = classify(source, v2_max);
  ClassLabel lr = classify(target, v2_max);
  const auto* cs = std::get_if<CycleLabel>(&ls);
  const auto* cr = std::get_if<CycleLabel>(&lr);
  if (cs && cr && cs->v == cr->v) return Isomorphic{cs->v};
  if (!cs && !cr) return ConditionallyIsomorphic{v2_max};
  // A cycle found within the bound on one side cannot be hiding on the other,
  // since both searches covered the same v2 range.
  return NotIsomorphic{std::move(ls), std::move(lr)};
}

namespace {

LetterPermutation reversal3() { return LetterPermutation({3, 2, 1}); }

// Which relabelling carries the source's cycle lattice onto the target's.
LetterPermutation wanted_sigma(const ConfigK& source, const ConfigK& target, const Isomorphic& iso) {
  if (!iso.v) return LetterPermutation::identity(source.l());
  const int bound = static_cast<int>((*iso.v)[1]);
  const auto ps = find_primitive_cycle(source, bound);
  const auto pr = find_primitive_cycle(target, bound);
  if (!ps || !pr || ps->canonical != *iso.v || pr->canonical != *iso.v) {
    throw std::logic_error("build_partial_iso: verdict does not match the configurations");
  }
  if (pr->raw == ps->raw || pr->raw == -ps->raw) return LetterPermutation::identity(3);
  return reversal3();
}

std::vector<RPoint> sampled_orbit(const ConfigK& config, const RPoint& seed, const std::vector<Word>& words) {
  std::vector<RPoint> out;
  out.reserve(words.size());
  for (const Word& g : words) out.push_back(act(config, seed, g));
  return out;
}

// Seeds off the interior line whose sampled orbits are pairwise disjoint.
std::vector<RPoint> choose_seeds(const ConfigK& config, const std::vector<Word>& words, int count) {
  std::vector<RPoint> seeds;
  std::set<RPoint> covered;
  for (int skip = 0; static_cast<int>(seeds.size()) < count; ++skip) {
    if (skip > 10000) throw std::runtime_error("build_partial_iso: could not find disjoint seeds");
    const RPoint candidate = off_line_point(config, skip);
    const auto images = sampled_orbit(config, candidate, words);
    bool disjoint = !covered.contains(candidate);
    for (const RPoint& p : images) disjoint = disjoint && !covered.contains(p);
    if (!disjoint) continue;
    covered.insert(candidate);
    covered.insert(images.begin(), images.end());
    seeds.push_back(candidate);
  }
  return seeds;
}

}  // namespace

PartialIsoTable build_partial_iso(const ConfigK& source, const ConfigK& target, const IsoVerdict& verdict,
                                  const std::vector<Word>& sample_words, int seeds) {
  const auto* iso = std::get_if<Isomorphic>(&verdict);
  if (!iso) throw std::invalid_argument("build_partial_iso: verdict is not Isomorphic");
  if (source.l() != target.l()) throw std::invalid_argument("build_partial_iso: different l");
  for (const Word& g : sample_words) {
    if (g.alphabet_size() != source.l()) throw std::invalid_argument("build_partial_iso: word over wrong alphabet");
  }

  const LetterPermutation wanted = wanted_sigma(source, target, *iso);
  OrdinalHull hs = collinear_hull(source);
  OrdinalHull hr = collinear_hull(target);
  std::optional<HullMap> map;
  for (bool reverse : {false, true}) {
    auto candidate = hull_isomorphism(hs, hr, reverse);
    if (candidate && candidate->sigma == wanted) {
      map = std::move(candidate);
      break;
    }
  }
  if (!map) throw std::logic_error("build_partial_iso: no hull isomorphism realizes the required permutation");

  PartialIsoTable table{map->sigma, hs, hr, {}, {}};
  for (std::size_t k = 0; k < hs.size(); ++k) {
    table.rows.emplace_back(SamplePoint::from_token(hs[k]), SamplePoint::from_token(hr[map->token_image[k]]));
  }

  const auto xs = choose_seeds(source, sample_words, seeds);
  const auto ys = choose_seeds(target, sample_words, seeds);
  std::map<RPoint, RPoint> forward;
  std::map<RPoint, RPoint> backward;
  for (int j = 0; j < seeds; ++j) {
    table.seeds.emplace_back(xs[static_cast<std::size_t>(j)], ys[static_cast<std::size_t>(j)]);
    for (const Word& g : sample_words) {
      RPoint x = act(source, xs[static_cast<std::size_t>(j)], g);
      RPoint y = act(target, ys[static_cast<std::size_t>(j)], apply_letter_permutation(g, table.sigma));
      auto fwd = forward.find(x);
      auto bwd = backward.find(y);
      if (fwd != forward.end() || bwd != backward.end()) {
        if (fwd == forward.end() || bwd == backward.end() || fwd->second != y || bwd->second != x) {
          throw CollisionError("build_partial_iso: sample word " + to_string(g) + " breaks injectivity");
        }
        continue;
      }
      forward.emplace(x, y);
      backward.emplace(y, x);
      table.rows.emplace_back(SamplePoint::exact(std::move(x)), SamplePoint::exact(std::move(y)));
    }
  }
  return table;
}

bool table_preserves_betweenness(const PartialIsoTable& table, const std::vector<std::size_t>& rows) {
  for (std::size_t i : rows)
    for (std::size_t j : rows)
      for (std::size_t k : rows) {
        if (i == j || j == k || i == k) continue;
        const auto& [a, fa] = table.rows[i];
        const auto& [x, fx] = table.rows[j];
        const auto& [b, fb] = table.rows[k];
        if (sample_between(table.source_hull, a, x, b) != sample_between(table.target_hull, fa, fx, fb)) {
          return false;
        }
      }
  return true;
}

bool table_preserves_betweenness(const PartialIsoTable& table) {
  std::vector<std::size_t> all(table.rows.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return table_preserves_betweenness(table, all);
}

std::string to_string(const IsoVerdict& verdict) {
  if (const auto* iso = std::get_if<Isomorphic>(&verdict)) {
    if (!iso->v) return "isomorphic trivial";
    const auto& v = *iso->v;
    return "isomorphic v=(" + std::to_string(v[0]) + "," + std::to_string(v[1]) + "," + std::to_string(v[2]) + ")";
  }
  if (const auto* no = std::get_if<NotIsomorphic>(&verdict)) {
    return "not-isomorphic " + to_string(no->source) + " / " + to_string(no->target);
  }
  return "conditionally-isomorphic upto " + std::to_string(std::get<ConditionallyIsomorphic>(verdict).v2_bound);
}

namespace {

std::string sample_text(const SamplePoint& p) {
  if (p.endpoint == 0) {
    return to_string(p.point.x) + "\t" + to_string(p.point.y);
  }
  return p.endpoint < 0 ? "E-\t~" : "E+\t~";
}

}  // namespace

std::string serialize(const PartialIsoTable& table) {
  std::ostringstream out;
  out << "# sigma";
  for (Letter image : table.sigma.images()) out << ' ' << image;
  out << '\n';
  for (const auto& [from, to] : table.rows) out << sample_text(from) << "\t->\t" << sample_text(to) << '\n';
  return out.str();
}

}  // namespace circiso
