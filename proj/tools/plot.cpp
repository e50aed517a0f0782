#include "plot.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <vector>

#include "limfree/tangency.hpp"

namespace limfree::plot {

Rational Segment::axis_length() const {
  if (from.first != to.first && from.second != to.second) {
    throw std::logic_error("axis_length on a slanted segment");
  }
  return abs(to.first - from.first) + abs(to.second - from.second);
}

Geometry compute_geometry(const Spec& spec) {
  const TangentLine t = tangent_at(spec.f, spec.p);
  Geometry g;
  g.point = {spec.p, spec.f(spec.p)};
  g.slope = t.k;
  g.intercept = t.b;
  g.tangent = {{spec.lo, t.k * spec.lo + t.b}, {spec.hi, t.k * spec.hi + t.b}};
  if (spec.dx) {
    const Rational& dx = *spec.dx;
    const Rational x1 = spec.p + dx;
    const Rational y0 = g.point.second;
    const Rational y1 = spec.f(x1);
    SecantGeometry s;
    s.dx = dx;
    s.secant = {g.point, {x1, y1}};
    s.run = {g.point, {x1, y0}};
    s.increment = {{x1, y0}, {x1, y1}};
    s.differential = {{x1, y0}, {x1, y0 + t.k * dx}};
    g.secant = std::move(s);
  }
  return g;
}

namespace {

std::string fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, v);
  return buf;
}

std::string px(double v) { return fmt("%.3f", v); }
std::string full(double v) { return fmt("%.17g", v); }

struct Frame {
  double xlo, xhi, ylo, yhi;
  double width, height, margin;

  double to_px_x(double x) const { return margin + (x - xlo) / (xhi - xlo) * (width - 2 * margin); }
  double to_px_y(double y) const { return height - margin - (y - ylo) / (yhi - ylo) * (height - 2 * margin); }
};

std::string line_element(const Frame& fr, const std::string& cls, const Segment& s, const std::string& extra = {}) {
  const double x1 = s.from.first.to_double();
  const double y1 = s.from.second.to_double();
  const double x2 = s.to.first.to_double();
  const double y2 = s.to.second.to_double();
  std::string out = "  <line class=\"" + cls + "\"";
  out += " x1=\"" + px(fr.to_px_x(x1)) + "\" y1=\"" + px(fr.to_px_y(y1)) + "\"";
  out += " x2=\"" + px(fr.to_px_x(x2)) + "\" y2=\"" + px(fr.to_px_y(y2)) + "\"";
  out += " data-x1=\"" + full(x1) + "\" data-y1=\"" + full(y1) + "\"";
  out += " data-x2=\"" + full(x2) + "\" data-y2=\"" + full(y2) + "\"";
  out += extra;
  out += " clip-path=\"url(#plot-area)\"/>\n";
  return out;
}

std::string label(const Frame& fr, double x, double y, const std::string& text, double dx_px = 6, double dy_px = -6) {
  return "  <text x=\"" + px(fr.to_px_x(x) + dx_px) + "\" y=\"" + px(fr.to_px_y(y) + dy_px) + "\">" + text +
         "</text>\n";
}

std::string point_marker(const Frame& fr, const std::string& id, const Point& pt) {
  const double x = pt.first.to_double();
  const double y = pt.second.to_double();
  return "  <circle class=\"point\" id=\"" + id + "\" cx=\"" + px(fr.to_px_x(x)) + "\" cy=\"" + px(fr.to_px_y(y)) +
         "\" r=\"4\" data-x=\"" + full(x) + "\" data-y=\"" + full(y) + "\"/>\n" + label(fr, x, y, id);
}

}  // namespace

std::string render_svg(const Spec& spec, const Geometry& g) {
  std::vector<double> xs;
  std::vector<double> ys;
  xs.reserve(kCurveSamples);
  ys.reserve(kCurveSamples);
  const Rational span = spec.hi - spec.lo;
  for (int i = 0; i < kCurveSamples; ++i) {
    const Rational x = spec.lo + span * Rational(i, kCurveSamples - 1);
    xs.push_back(x.to_double());
    ys.push_back(spec.f(x).to_double());
  }

  double ylo = *std::min_element(ys.begin(), ys.end());
  double yhi = *std::max_element(ys.begin(), ys.end());
  auto include = [&](const Point& pt) {
    ylo = std::min(ylo, pt.second.to_double());
    yhi = std::max(yhi, pt.second.to_double());
  };
  include(g.point);
  if (g.secant) {
    include(g.secant->secant.to);
    include(g.secant->differential.to);
  }
  if (yhi - ylo <= 0) {
    ylo -= 1;
    yhi += 1;
  }
  const double pad = 0.05 * (yhi - ylo);
  const Frame fr{spec.lo.to_double(), spec.hi.to_double(), ylo - pad, yhi + pad,
                 static_cast<double>(spec.width), static_cast<double>(spec.height), 40.0};

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(spec.width) + "\" height=\"" +
         std::to_string(spec.height) + "\" viewBox=\"0 0 " + std::to_string(spec.width) + " " +
         std::to_string(spec.height) + "\">\n";
  out += "  <style>.curve{fill:none;stroke:#1f4e9c;stroke-width:2}.tangent{stroke:#c0392b;stroke-width:1.5}"
         ".secant{stroke:#27ae60;stroke-width:1.5}.axis{stroke:#888;stroke-width:1}"
         ".annotation{stroke:#333;stroke-width:1.5;stroke-dasharray:4 3}.point{fill:#000}"
         "text{font-family:sans-serif;font-size:13px}</style>\n";
  out += "  <defs><clipPath id=\"plot-area\"><rect x=\"" + px(fr.margin) + "\" y=\"" + px(fr.margin) +
         "\" width=\"" + px(fr.width - 2 * fr.margin) + "\" height=\"" + px(fr.height - 2 * fr.margin) +
         "\"/></clipPath></defs>\n";
  out += "  <rect width=\"100%\" height=\"100%\" fill=\"#fff\"/>\n";

  if (fr.ylo <= 0 && 0 <= fr.yhi) {
    out += "  <line class=\"axis\" x1=\"" + px(fr.margin) + "\" y1=\"" + px(fr.to_px_y(0)) + "\" x2=\"" +
           px(fr.width - fr.margin) + "\" y2=\"" + px(fr.to_px_y(0)) + "\"/>\n";
  }
  if (fr.xlo <= 0 && 0 <= fr.xhi) {
    out += "  <line class=\"axis\" x1=\"" + px(fr.to_px_x(0)) + "\" y1=\"" + px(fr.margin) + "\" x2=\"" +
           px(fr.to_px_x(0)) + "\" y2=\"" + px(fr.height - fr.margin) + "\"/>\n";
  }

  out += "  <path class=\"curve\" data-samples=\"" + std::to_string(kCurveSamples) + "\" d=\"";
  for (int i = 0; i < kCurveSamples; ++i) {
    out += i == 0 ? "M" : " L";
    out += px(fr.to_px_x(xs[i])) + "," + px(fr.to_px_y(ys[i]));
  }
  out += "\" clip-path=\"url(#plot-area)\"/>\n";

  out += line_element(fr, "tangent", g.tangent,
                      " data-slope=\"" + g.slope.to_string() + "\" data-intercept=\"" + g.intercept.to_string() + "\"");
  out += point_marker(fr, "A", g.point);

  if (g.secant) {
    const SecantGeometry& s = *g.secant;
    const Rational secant_slope = (s.secant.to.second - s.secant.from.second) / s.dx;
    out += line_element(fr, "secant", s.secant, " data-slope=\"" + secant_slope.to_string() + "\"");
    out += point_marker(fr, "B", s.secant.to);
    auto annotation = [&](const std::string& cls, const Segment& seg, const std::string& name, double ox, double oy) {
      const Rational len = seg.axis_length();
      std::string o = line_element(fr, "annotation " + cls, seg,
                                   " data-length=\"" + full(len.to_double()) + "\" data-length-exact=\"" +
                                       len.to_string() + "\"");
      const double mx = ((seg.from.first + seg.to.first) / Rational(2)).to_double();
      const double my = ((seg.from.second + seg.to.second) / Rational(2)).to_double();
      o += label(fr, mx, my, name, ox, oy);
      return o;
    };
    out += annotation("run", s.run, "Δx", -8, 16);
    out += annotation("increment", s.increment, "Δy", 8, 0);
    out += annotation("differential", s.differential, "dy", -24, 0);
  }
  out += "</svg>\n";
  return out;
}

}  // namespace limfree::plot
