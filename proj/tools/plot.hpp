#pragma once

#include <optional>
#include <string>
#include <utility>

#include "limfree/polynomial.hpp"
#include "limfree/rational.hpp"

namespace limfree::plot {

using Point = std::pair<Rational, Rational>;

struct Segment {
  Point from;
  Point to;
  /// Euclidean length in data coordinates; exact for axis-parallel segments.
  Rational axis_length() const;
};

/// Increment picture at p: secant AB plus the dx, Δy and dy segments.
struct SecantGeometry {
  Rational dx;
  Segment secant;
  Segment run;        // horizontal, length |dx|
  Segment increment;  // vertical, length |Δy|
  Segment differential;  // vertical, length |dy|
};

/// All geometry of the picture, computed exactly before any float conversion.
struct Geometry {
  Point point;
  Rational slope;
  Rational intercept;
  Segment tangent;  // across the full x range
  std::optional<SecantGeometry> secant;
};

struct Spec {
  Polynomial f;
  Rational p;
  Rational lo;
  Rational hi;
  std::optional<Rational> dx;
  int width = 800;
  int height = 600;
};

inline constexpr int kCurveSamples = 512;

Geometry compute_geometry(const Spec& spec);

/// Standalone SVG document. Output is a pure function of `spec`.
std::string render_svg(const Spec& spec, const Geometry& geometry);

}  // namespace limfree::plot
