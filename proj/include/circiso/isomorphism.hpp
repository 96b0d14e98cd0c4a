#pragma once

// Betweenness isomorphism of circle-plus-points sets with collinear interior
// points (l = 1, 2, or 3 in monotone order).
//
// For l <= 2 any two such sets are isomorphic. For l = 3 two sets are
// isomorphic exactly when they share the primitive cycle, or both have none;
// a bounded search can confirm the former and refute, but only suggest the
// latter.

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "circiso/classifier.hpp"
#include "circiso/hull.hpp"

namespace circiso {

struct Isomorphic {
  std::optional<SignatureVector> v;  // nullopt for l = 1, 2
};

struct NotIsomorphic {
  ClassLabel source;
  ClassLabel target;
};

struct ConditionallyIsomorphic {
  int v2_bound;
};

using IsoVerdict = std::variant<Isomorphic, NotIsomorphic, ConditionallyIsomorphic>;

IsoVerdict decide_iso(const ConfigK& source, const ConfigK& target, int v2_max);

/// A finite piece of an isomorphism: hull tokens matched by line order and
/// orbit samples x.g -> y.psi_sigma(g) for each seed pair (x, y).
struct PartialIsoTable {
  LetterPermutation sigma;
  OrdinalHull source_hull;
  OrdinalHull target_hull;
  std::vector<std::pair<RPoint, RPoint>> seeds;
  std::vector<std::pair<SamplePoint, SamplePoint>> rows;
};

class CollisionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Throws std::invalid_argument unless the verdict is Isomorphic, and
/// CollisionError if two samples disagree (which would mean the verdict was
/// wrong).
PartialIsoTable build_partial_iso(const ConfigK& source, const ConfigK& target, const IsoVerdict& verdict,
                                  const std::vector<Word>& sample_words, int seeds);

/// Two-sided strict betweenness check over every triple of table rows.
bool table_preserves_betweenness(const PartialIsoTable& table);

/// Same check restricted to the rows with the given indices.
bool table_preserves_betweenness(const PartialIsoTable& table, const std::vector<std::size_t>& rows);

std::string to_string(const IsoVerdict& verdict);

/// Header "# sigma s1 s2 .." then one tab-separated "x y -> x' y'" row per
/// pair; hull endpoints without exact coordinates print as "E- ~" / "E+ ~".
std::string serialize(const PartialIsoTable& table);

}  // namespace circiso
