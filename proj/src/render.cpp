#include "thetawalls/render.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "thetawalls/error.hpp"

namespace thetawalls {

namespace {

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  std::string out(buf);
  if (out == "-0.00") out = "0.00";
  return out;
}

class PixelMap {
 public:
  explicit PixelMap(const RenderSpec &spec)
      : spec_(spec),
        sx_(Rational(spec.width_px) / (spec.b_max - spec.b_min)),
        sy_(Rational(spec.height_px) / spec.c_max) {}

  Rational x(const Rational &b) const { return (b - spec_.b_min) * sx_; }
  Rational y(const Rational &c) const { return Rational(spec_.height_px) - c * sy_; }
  const Rational &sx() const { return sx_; }
  const Rational &sy() const { return sy_; }
  bool uniform() const { return sx_ == sy_; }

 private:
  const RenderSpec &spec_;
  Rational sx_;
  Rational sy_;
};

std::string px(const Rational &q) { return fmt(q.get_d()); }

// Upper half of a circle as an SVG arc from (center - r, 0) to (center + r, 0).
std::string arc_path(const PixelMap &map, const Semicircle &sc) {
  const double radius = std::sqrt(sc.radius_sq.get_d());
  const double cx = map.x(sc.center).get_d();
  const double y0 = map.y(Rational(0)).get_d();
  const double rx = radius * map.sx().get_d();
  const double ry = radius * map.sy().get_d();
  std::ostringstream os;
  os << "M " << fmt(cx - rx) << " " << fmt(y0) << " A " << fmt(rx) << " " << fmt(ry)
     << " 0 0 1 " << fmt(cx + rx) << " " << fmt(y0);
  return os.str();
}

}  // namespace

RenderSpec default_render_spec(const PolarizationSlice &P, int width_px, int height_px) {
  const Rational v = vertical_wall(P);
  RenderSpec spec;
  spec.b_min = v * Rational(5, 4);
  spec.b_max = -v / 4;
  spec.width_px = width_px;
  spec.height_px = height_px;
  spec.c_max = (spec.b_max - spec.b_min) * Rational(height_px) / Rational(width_px);
  return spec;
}

void validate(const RenderSpec &spec) {
  if (!(spec.b_min < spec.b_max)) throw Error(ErrorKind::InvalidArgument, "empty b range");
  if (sgn(spec.c_max) <= 0) throw Error(ErrorKind::InvalidArgument, "c_max must be positive");
  if (spec.width_px < 64 || spec.height_px < 64) {
    throw Error(ErrorKind::InvalidArgument, "pixel sizes must be at least 64");
  }
}

std::vector<StabilityPoint> hyperbola_samples(const Hyperbola &gamma, const Rational &c_max,
                                              int count) {
  // t0 is a rational upper approximation of sqrt(rhs), so c(t0) >= 0.
  const Integer scale(1000000);
  const Integer root = floor_sqrt(gamma.rhs * Rational(scale * scale)) + 1;
  const Rational t0 = make_rational(root, scale);
  const Rational t1 = t0 + 2 * c_max;
  std::vector<StabilityPoint> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    const Rational t = t0 + (t1 - t0) * make_rational(Integer(k), Integer(count - 1));
    const Rational ratio = gamma.rhs / t;
    out.push_back({(t + ratio) / 2 - gamma.kappa, (t - ratio) / 2});
  }
  return out;
}

std::string render_walls_svg(const SurfaceNumerics &s, const PolarizationSlice &P,
                             const RenderSpec &spec, const std::vector<WallCandidate> &candidates,
                             const RegionParams &rp) {
  validate(spec);
  const PixelMap map(spec);
  const Rational axis_y = map.y(Rational(0));
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << spec.width_px
     << "\" height=\"" << spec.height_px << "\" viewBox=\"0 0 " << spec.width_px << " "
     << spec.height_px << "\">\n";
  os << "<desc>c2=" << s.c2.get_str() << " K2=" << s.K2.get_str() << " H2=" << P.H2.get_str()
     << " KH=" << P.KH.get_str() << " b=[" << to_string(spec.b_min) << ", "
     << to_string(spec.b_max) << "] c_max=" << to_string(spec.c_max) << "</desc>\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << spec.width_px << "\" height=\"" << spec.height_px
     << "\" fill=\"white\"/>\n";

  const bool has_c_h = s.positive_index();
  const Semicircle c_h = closed_form_c_h(s, P);

  if (spec.layers.region && has_c_h) {
    const Rational left = beta_lower_bound(s, P, rp);
    os << "<clipPath id=\"bun-strip\"><rect x=\"" << px(map.x(left)) << "\" y=\"0\" width=\""
       << px(map.x(Rational(0)) - map.x(left)) << "\" height=\"" << px(axis_y)
       << "\"/></clipPath>\n";
    os << "<path id=\"bun-region\" d=\"" << arc_path(map, c_h)
       << " Z\" fill=\"#f4a582\" fill-opacity=\"0.6\" stroke=\"none\" clip-path=\"url(#bun-strip)\"/>\n";
  }

  if (spec.layers.c_h && has_c_h) {
    os << "<clipPath id=\"upper\"><rect x=\"0\" y=\"0\" width=\"" << spec.width_px
       << "\" height=\"" << px(axis_y) << "\"/></clipPath>\n";
    const std::string cx = px(map.x(c_h.center));
    const std::string cy = px(axis_y);
    const double radius = std::sqrt(c_h.radius_sq.get_d());
    if (map.uniform()) {
      os << "<circle id=\"c-h\" cx=\"" << cx << "\" cy=\"" << cy << "\" r=\""
         << fmt(radius * map.sx().get_d());
    } else {
      os << "<ellipse id=\"c-h\" cx=\"" << cx << "\" cy=\"" << cy << "\" rx=\""
         << fmt(radius * map.sx().get_d()) << "\" ry=\"" << fmt(radius * map.sy().get_d());
    }
    os << "\" fill=\"#fddbc7\" fill-opacity=\"0.5\" stroke=\"#b2182b\" stroke-width=\"1.5\" "
          "clip-path=\"url(#upper)\"/>\n";
  }

  if (spec.layers.candidates) {
    os << "<g id=\"candidates\" fill=\"none\" stroke=\"#2166ac\" stroke-width=\"1\">\n";
    for (const WallCandidate &c : candidates) {
      os << "<path d=\"" << arc_path(map, c.wall) << "\"/>\n";
    }
    os << "</g>\n";
  }

  if (spec.layers.hyperbola && has_c_h) {
    const Hyperbola gamma = hyperbola_of_tops(s, P);
    os << "<polyline id=\"hyperbola\" fill=\"none\" stroke=\"#1b7837\" stroke-width=\"1.5\" points=\"";
    bool first = true;
    for (const StabilityPoint &pt : hyperbola_samples(gamma, spec.c_max)) {
      if (!first) os << " ";
      first = false;
      os << px(map.x(pt.b)) << "," << px(map.y(pt.c));
    }
    os << "\"/>\n";
  }

  if (spec.layers.vertical) {
    const std::string x = px(map.x(vertical_wall(P)));
    os << "<line id=\"vertical-wall\" x1=\"" << x << "\" y1=\"0\" x2=\"" << x << "\" y2=\""
       << px(axis_y) << "\" stroke=\"black\" stroke-width=\"1\" stroke-dasharray=\"6,4\"/>\n";
  }

  os << "<line id=\"b-axis\" x1=\"0\" y1=\"" << px(axis_y) << "\" x2=\"" << spec.width_px
     << "\" y2=\"" << px(axis_y) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  if (spec.b_min < 0 && spec.b_max > 0) {
    const std::string x0 = px(map.x(Rational(0)));
    os << "<line id=\"c-axis\" x1=\"" << x0 << "\" y1=\"0\" x2=\"" << x0 << "\" y2=\""
       << px(axis_y) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace thetawalls
