#include "circiso/svg.hpp"

#include <cmath>
#include <cstdio>

namespace circiso {

std::vector<RPoint> cycle_polygon(const ConfigK& config, const SignatureVector& v) {
  if (!is_cycle(config, v)) throw UnverifiedCycleError("cycle " + to_string(v) + " does not close on this configuration");
  const RPoint start = off_line_point(config);
  std::vector<RPoint> out{start};
  RPoint current = start;
  for (Letter letter : word_from_signature(v)) {
    current = reversion(config.circle(), config.point(letter), current);
    out.push_back(current);
  }
  return out;
}

namespace {

constexpr double kCanvas = 400.0;
constexpr double kRadiusPx = 180.0;

std::string num(double value) {
  if (value == 0.0) value = 0.0;  // no "-0"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

class Frame {
 public:
  explicit Frame(const RCircle& circle)
      : cx_(circle.center().x.get_d()),
        cy_(circle.center().y.get_d()),
        scale_(kRadiusPx / std::sqrt(circle.radius_sq().get_d())) {}

  double sx(double x) const { return kCanvas / 2 + (x - cx_) * scale_; }
  double sy(double y) const { return kCanvas / 2 - (y - cy_) * scale_; }
  std::string xy(const RPoint& p) const { return num(sx(p.x.get_d())) + "," + num(sy(p.y.get_d())); }
  std::string attr_x(double x) const { return num(sx(x)); }
  std::string attr_y(double y) const { return num(sy(y)); }

 private:
  double cx_;
  double cy_;
  double scale_;
};

// The chord carrying the interior points, in floating point.
std::string chord_element(const ConfigK& config, const Frame& frame) {
  const RPoint& a = config.points().front();
  const RPoint& b = config.points().back();
  const double ax = a.x.get_d() - config.circle().center().x.get_d();
  const double ay = a.y.get_d() - config.circle().center().y.get_d();
  const double dx = b.x.get_d() - a.x.get_d();
  const double dy = b.y.get_d() - a.y.get_d();
  const double qa = dx * dx + dy * dy;
  const double qb = 2 * (ax * dx + ay * dy);
  const double qc = ax * ax + ay * ay - config.circle().radius_sq().get_d();
  const double root = std::sqrt(qb * qb - 4 * qa * qc);
  const double t0 = (-qb - root) / (2 * qa);
  const double t1 = (-qb + root) / (2 * qa);
  const double x0 = a.x.get_d() + t0 * dx;
  const double y0 = a.y.get_d() + t0 * dy;
  const double x1 = a.x.get_d() + t1 * dx;
  const double y1 = a.y.get_d() + t1 * dy;
  return "  <line class=\"chord\" x1=\"" + frame.attr_x(x0) + "\" y1=\"" + frame.attr_y(y0) + "\" x2=\"" +
         frame.attr_x(x1) + "\" y2=\"" + frame.attr_y(y1) + "\" stroke=\"#888\" stroke-dasharray=\"4 3\"/>\n";
}

}  // namespace

std::string render_svg(const ConfigK& config, const SvgOverlays& overlays) {
  std::vector<RPoint> polygon;
  if (overlays.cycle) polygon = cycle_polygon(config, *overlays.cycle);

  const Frame frame(config.circle());
  const std::string size = num(kCanvas);
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + size + "\" height=\"" + size + "\" viewBox=\"0 0 " +
         size + " " + size + "\">\n";
  out += "  <circle class=\"boundary\" cx=\"" + num(kCanvas / 2) + "\" cy=\"" + num(kCanvas / 2) + "\" r=\"" +
         num(kRadiusPx) + "\" fill=\"none\" stroke=\"black\"/>\n";
  if (config.l() >= 2) out += chord_element(config, frame);
  if (!polygon.empty()) {
    out += "  <polygon class=\"cycle\" points=\"";
    // The last vertex repeats the first; a polygon closes itself.
    for (std::size_t i = 0; i + 1 < polygon.size(); ++i) out += (i ? " " : "") + frame.xy(polygon[i]);
    out += "\" fill=\"none\" stroke=\"#c33\"/>\n";
  }
  for (const RPoint& p : overlays.orbit_points) {
    out += "  <circle class=\"orbit\" cx=\"" + frame.attr_x(p.x.get_d()) + "\" cy=\"" + frame.attr_y(p.y.get_d()) +
           "\" r=\"2.5\" fill=\"#36c\"/>\n";
  }
  for (int i = 1; i <= config.l(); ++i) {
    const RPoint& p = config.point(i);
    const std::string x = frame.attr_x(p.x.get_d());
    const std::string y = frame.attr_y(p.y.get_d());
    out += "  <circle class=\"point\" cx=\"" + x + "\" cy=\"" + y + "\" r=\"3.5\" fill=\"black\"/>\n";
    out += "  <text x=\"" + x + "\" y=\"" + y + "\" dx=\"5\" dy=\"-6\" font-size=\"12\">c" + std::to_string(i) +
           "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace circiso
