#pragma once

// Static SVG pictures of a configuration. Coordinates are converted to
// doubles only here and printed with 12 significant digits, so equal input
// gives byte-identical output.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "circiso/action.hpp"

namespace circiso {

struct SvgOverlays {
  std::vector<RPoint> orbit_points;
  /// Drawn as the closed polygon traced by the cycle word from the
  /// configuration's off-line test point. Must be a cycle.
  std::optional<SignatureVector> cycle;
};

class UnverifiedCycleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The vertices c, c.g_1, c.g_1g_2, ..., ending back at c.
std::vector<RPoint> cycle_polygon(const ConfigK& config, const SignatureVector& v);

std::string render_svg(const ConfigK& config, const SvgOverlays& overlays = {});

}  // namespace circiso
